#pragma once

#include "latmw/common.hpp"

#include <algorithm>
#include <compare>
#include <cstdint>
#include <numeric>
#include <set>
#include <span>
#include <string>
#include <vector>

namespace latmw {

/// Element of a product of cyclic groups, coords[i] in [0, n_i).
struct GroupElement {
    std::vector<std::uint32_t> coords;
    auto operator<=>(const GroupElement&) const = default;
};

/// Character of a product of cyclic groups, indexed through the canonical self-pairing.
/// The all-zero vector is the trivial character.
struct Character {
    std::vector<std::uint32_t> coords;
    auto operator<=>(const Character&) const = default;
};

inline std::string to_string(std::span<const std::uint32_t> coords) {
    std::string s = "(";
    for (std::size_t i = 0; i < coords.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(coords[i]);
    }
    return s + ")";
}
inline std::string to_string(const GroupElement& g) { return to_string(g.coords); }
inline std::string to_string(const Character& c) { return "chi" + to_string(c.coords); }

/// Z_{n_1} x ... x Z_{n_k}. Elements are also addressed by a dense index in [0, |G|)
/// (mixed radix, first coordinate most significant); characters share that indexing.
class FiniteAbelianGroup {
public:
    static constexpr std::uint64_t kDefaultOrderCap = std::uint64_t{1} << 16;

    FiniteAbelianGroup() : FiniteAbelianGroup(std::vector<std::uint32_t>{}) {}

    explicit FiniteAbelianGroup(std::vector<std::uint32_t> orders, std::uint64_t order_cap = kDefaultOrderCap)
        : orders_(std::move(orders)) {
        order_ = 1;
        exponent_ = 1;
        for (auto n : orders_) {
            if (n < 1) throw InvalidArgument("cyclic factor orders must be >= 1");
            order_ *= n;
            if (order_ > order_cap)
                throw CapExceeded("group order exceeds cap of " + std::to_string(order_cap));
            exponent_ = std::lcm(exponent_, static_cast<std::uint64_t>(n));
        }
        strides_.assign(orders_.size(), 1);
        for (std::size_t i = orders_.size(); i-- > 1;) strides_[i - 1] = strides_[i] * orders_[i];
    }

    const std::vector<std::uint32_t>& orders() const noexcept { return orders_; }
    std::size_t factors() const noexcept { return orders_.size(); }
    std::uint64_t order() const noexcept { return order_; }
    std::uint64_t exponent() const noexcept { return exponent_; }

    bool operator==(const FiniteAbelianGroup& other) const { return orders_ == other.orders_; }

    /// Direct product G x H.
    FiniteAbelianGroup product(const FiniteAbelianGroup& other) const {
        auto o = orders_;
        o.insert(o.end(), other.orders_.begin(), other.orders_.end());
        return FiniteAbelianGroup(std::move(o));
    }

    GroupElement zero() const { return GroupElement{std::vector<std::uint32_t>(orders_.size(), 0)}; }

    bool contains(std::span<const std::uint32_t> coords) const {
        if (coords.size() != orders_.size()) return false;
        for (std::size_t i = 0; i < coords.size(); ++i)
            if (coords[i] >= orders_[i]) return false;
        return true;
    }

    GroupElement element(std::uint64_t index) const {
        GroupElement g{std::vector<std::uint32_t>(orders_.size())};
        for (std::size_t i = 0; i < orders_.size(); ++i) {
            g.coords[i] = static_cast<std::uint32_t>(index / strides_[i]);
            index %= strides_[i];
        }
        return g;
    }
    Character character(std::uint64_t index) const { return Character{element(index).coords}; }

    std::uint64_t index_of(std::span<const std::uint32_t> coords) const {
        check_shape(coords);
        std::uint64_t idx = 0;
        for (std::size_t i = 0; i < coords.size(); ++i) idx += coords[i] * strides_[i];
        return idx;
    }
    std::uint64_t index_of(const GroupElement& g) const { return index_of(g.coords); }
    std::uint64_t index_of(const Character& c) const { return index_of(c.coords); }

    GroupElement add(const GroupElement& g, const GroupElement& h) const {
        check_shape(g.coords);
        check_shape(h.coords);
        GroupElement r{std::vector<std::uint32_t>(orders_.size())};
        for (std::size_t i = 0; i < orders_.size(); ++i)
            r.coords[i] = static_cast<std::uint32_t>((std::uint64_t{g.coords[i]} + h.coords[i]) % orders_[i]);
        return r;
    }

    GroupElement neg(const GroupElement& g) const {
        check_shape(g.coords);
        GroupElement r{std::vector<std::uint32_t>(orders_.size())};
        for (std::size_t i = 0; i < orders_.size(); ++i)
            r.coords[i] = g.coords[i] == 0 ? 0 : orders_[i] - g.coords[i];
        return r;
    }

    // Index arithmetic, used by the enumeration-heavy code paths.
    std::uint64_t add_index(std::uint64_t a, std::uint64_t b) const {
        std::uint64_t r = 0;
        for (std::size_t i = 0; i < orders_.size(); ++i) {
            const std::uint64_t x = (a / strides_[i]) % orders_[i];
            const std::uint64_t y = (b / strides_[i]) % orders_[i];
            r += ((x + y) % orders_[i]) * strides_[i];
        }
        return r;
    }
    std::uint64_t neg_index(std::uint64_t a) const {
        std::uint64_t r = 0;
        for (std::size_t i = 0; i < orders_.size(); ++i) {
            const std::uint64_t x = (a / strides_[i]) % orders_[i];
            r += ((orders_[i] - x) % orders_[i]) * strides_[i];
        }
        return r;
    }
    std::uint64_t sub_index(std::uint64_t a, std::uint64_t b) const { return add_index(a, neg_index(b)); }

    /// Exponent e in [0, N) with chi(g) = zeta_N^e.
    std::uint32_t pairing(const Character& chi, const GroupElement& g) const {
        check_shape(chi.coords);
        check_shape(g.coords);
        return pairing_coords(chi.coords, g.coords);
    }
    std::uint32_t pairing_index(std::uint64_t chi, std::uint64_t g) const {
        std::uint64_t e = 0;
        for (std::size_t i = 0; i < orders_.size(); ++i) {
            const std::uint64_t x = (chi / strides_[i]) % orders_[i];
            const std::uint64_t y = (g / strides_[i]) % orders_[i];
            e += (x * y % orders_[i]) * (exponent_ / orders_[i]);
        }
        return static_cast<std::uint32_t>(e % exponent_);
    }

    std::string describe() const {
        if (orders_.empty()) return "Z_1";
        std::string s;
        for (std::size_t i = 0; i < orders_.size(); ++i) s += (i ? "xZ_" : "Z_") + std::to_string(orders_[i]);
        return s;
    }

private:
    void check_shape(std::span<const std::uint32_t> coords) const {
        if (!contains(coords))
            throw InvalidArgument("element " + to_string(coords) + " does not belong to " + describe());
    }
    std::uint32_t pairing_coords(std::span<const std::uint32_t> a, std::span<const std::uint32_t> b) const {
        std::uint64_t e = 0;
        for (std::size_t i = 0; i < orders_.size(); ++i)
            e += (std::uint64_t{a[i]} * b[i] % orders_[i]) * (exponent_ / orders_[i]);
        return static_cast<std::uint32_t>(e % exponent_);
    }

    std::vector<std::uint32_t> orders_;
    std::vector<std::uint64_t> strides_;
    std::uint64_t order_ = 1;
    std::uint64_t exponent_ = 1;
};

/// A subgroup, stored as its sorted element indices. Codes in the character group use the
/// same representation through the canonical identification of G with its dual.
class Code {
public:
    Code(FiniteAbelianGroup group, std::vector<std::uint64_t> sorted_elements, std::vector<std::uint64_t> generators)
        : group_(std::move(group)), elements_(std::move(sorted_elements)), generators_(std::move(generators)) {}

    const FiniteAbelianGroup& group() const noexcept { return group_; }
    const std::vector<std::uint64_t>& elements() const noexcept { return elements_; }
    /// An irredundant generating set.
    const std::vector<std::uint64_t>& generators() const noexcept { return generators_; }
    std::uint64_t size() const noexcept { return elements_.size(); }
    bool is_zero() const noexcept { return elements_.size() == 1; }
    bool is_full() const noexcept { return elements_.size() == group_.order(); }
    bool contains(std::uint64_t index) const { return std::binary_search(elements_.begin(), elements_.end(), index); }

    std::vector<GroupElement> element_list() const {
        std::vector<GroupElement> out;
        out.reserve(elements_.size());
        for (auto e : elements_) out.push_back(group_.element(e));
        return out;
    }

    bool operator==(const Code& o) const { return group_ == o.group_ && elements_ == o.elements_; }

private:
    FiniteAbelianGroup group_;
    std::vector<std::uint64_t> elements_;
    std::vector<std::uint64_t> generators_;
};

namespace detail {

inline Code close_from(const FiniteAbelianGroup& G, std::vector<char>& member, std::vector<std::uint64_t> elems,
                       std::vector<std::uint64_t> gens, std::span<const std::uint64_t> extra) {
    for (auto g : extra) {
        if (g >= G.order()) throw InvalidArgument("generator index out of range");
        if (member[g]) continue;
        gens.push_back(g);
        // H + <g>: add multiples of g to every existing element until g's cyclic orbit closes.
        const std::size_t base = elems.size();
        std::uint64_t mult = g;
        std::vector<std::uint64_t> fresh;
        while (!member[mult]) {
            for (std::size_t i = 0; i < base; ++i) {
                const auto x = G.add_index(elems[i], mult);
                if (!member[x]) {
                    member[x] = 1;
                    fresh.push_back(x);
                }
            }
            mult = G.add_index(mult, g);
        }
        elems.insert(elems.end(), fresh.begin(), fresh.end());
    }
    std::sort(elems.begin(), elems.end());
    return Code(G, std::move(elems), std::move(gens));
}

}  // namespace detail

/// Smallest subgroup containing the given element indices.
inline Code subgroup_closure_indices(const FiniteAbelianGroup& G, std::span<const std::uint64_t> generators) {
    std::vector<char> member(G.order(), 0);
    member[0] = 1;
    return detail::close_from(G, member, {0}, {}, generators);
}

inline Code subgroup_closure(const FiniteAbelianGroup& G, const std::vector<GroupElement>& generators) {
    std::vector<std::uint64_t> idx;
    idx.reserve(generators.size());
    for (const auto& g : generators) idx.push_back(G.index_of(g));
    return subgroup_closure_indices(G, idx);
}

inline Code zero_code(const FiniteAbelianGroup& G) { return Code(G, {0}, {}); }

inline Code full_code(const FiniteAbelianGroup& G) {
    std::vector<std::uint64_t> all(G.order());
    std::iota(all.begin(), all.end(), 0);
    std::vector<std::uint64_t> gens;
    for (std::size_t i = 0; i < G.factors(); ++i) {
        if (G.orders()[i] == 1) continue;
        GroupElement e = G.zero();
        e.coords[i] = 1;
        gens.push_back(G.index_of(e));
    }
    return Code(G, std::move(all), std::move(gens));
}

/// Characters annihilating C.
inline Code dual_code(const Code& C) {
    const auto& G = C.group();
    std::vector<std::uint64_t> dual;
    for (std::uint64_t chi = 0; chi < G.order(); ++chi) {
        bool ok = true;
        for (auto g : C.generators()) {
            if (G.pairing_index(chi, g) != 0) {
                ok = false;
                break;
            }
        }
        if (ok) dual.push_back(chi);
    }
    return subgroup_closure_indices(G, dual);
}

inline Code code_sum(const Code& C, const Code& D) {
    if (!(C.group() == D.group())) throw InvalidArgument("code_sum: codes live in different groups");
    const auto& G = C.group();
    std::vector<char> member(G.order(), 0);
    for (auto e : C.elements()) member[e] = 1;
    return detail::close_from(G, member, C.elements(), C.generators(), D.generators());
}

inline Code code_intersect(const Code& C, const Code& D) {
    if (!(C.group() == D.group())) throw InvalidArgument("code_intersect: codes live in different groups");
    std::vector<std::uint64_t> common;
    std::set_intersection(C.elements().begin(), C.elements().end(), D.elements().begin(), D.elements().end(),
                          std::back_inserter(common));
    return subgroup_closure_indices(C.group(), common);
}

/// Every subgroup of G exactly once, ordered by size then lexicographically.
inline std::vector<Code> enumerate_subgroups(const FiniteAbelianGroup& G, std::uint64_t cap = 256) {
    if (G.order() > cap)
        throw CapExceeded("enumerate_subgroups: |G| = " + std::to_string(G.order()) + " exceeds cap " +
                          std::to_string(cap));
    std::set<std::vector<std::uint64_t>> seen;
    std::vector<Code> out;
    std::vector<Code> frontier{zero_code(G)};
    seen.insert(frontier.front().elements());
    while (!frontier.empty()) {
        std::vector<Code> next;
        for (const auto& H : frontier) {
            out.push_back(H);
            std::vector<char> in(G.order(), 0);
            for (auto e : H.elements()) in[e] = 1;
            const std::vector<char> in_h = in;
            for (std::uint64_t g = 0; g < G.order(); ++g) {
                if (in[g]) continue;
                const std::uint64_t one[] = {g};
                std::vector<char> member = in_h;
                Code bigger = detail::close_from(G, member, H.elements(), H.generators(), one);
                // Every element of the coset g + H generates the same extension.
                for (auto h : H.elements()) in[G.add_index(g, h)] = 1;
                if (seen.insert(bigger.elements()).second) next.push_back(std::move(bigger));
            }
        }
        frontier = std::move(next);
    }
    std::sort(out.begin(), out.end(), [](const Code& a, const Code& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a.elements() < b.elements();
    });
    return out;
}

}  // namespace latmw
