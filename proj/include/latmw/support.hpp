#pragma once

#include "latmw/common.hpp"
#include "latmw/finite_field.hpp"
#include "latmw/group.hpp"
#include "latmw/lattice.hpp"

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace latmw {

/// A weight function, as one integer label per group element (element index order).
using WeightLabels = std::vector<int>;

/// Per-axiom outcome of validating a candidate support map.
struct SupportReport {
    RegularityReport lattice;
    std::array<std::optional<std::string>, 5> violations;  // (A)..(E), nullopt when satisfied
    std::vector<Integer> gamma;                            // filled when everything holds

    bool axioms_hold() const {
        for (const auto& v : violations)
            if (v) return false;
        return true;
    }
    bool ok() const { return lattice.regular && axioms_hold(); }
    std::optional<char> first_violation() const {
        for (std::size_t i = 0; i < violations.size(); ++i)
            if (violations[i]) return static_cast<char>('A' + i);
        return std::nullopt;
    }
};

namespace detail {

inline std::vector<std::vector<std::uint64_t>> raw_balls(const FiniteAbelianGroup& G, const FiniteLattice& L,
                                                         const std::vector<std::size_t>& sigma) {
    std::vector<std::vector<std::uint64_t>> balls(L.size());
    for (std::size_t S = 0; S < L.size(); ++S)
        for (std::uint64_t g = 0; g < G.order(); ++g)
            if (L.leq(sigma[g], S)) balls[S].push_back(g);
    return balls;
}

}  // namespace detail

/// Exhaustively checks the lattice's regularity and the five support axioms:
/// (A) sigma(g) = 0_L iff g = 0, (B) sigma(g) = sigma(-g), (C) sigma(g+h) <= sigma(g) v sigma(h),
/// (D) G(S v T) = G(S) + G(T), (E) |G(S)| depends only on the rank of S.
inline SupportReport validate_support(const FiniteAbelianGroup& G, const FiniteLattice& L,
                                      const std::vector<std::size_t>& sigma) {
    if (sigma.size() != G.order())
        throw InvalidArgument("support map has " + std::to_string(sigma.size()) + " entries, group has " +
                              std::to_string(G.order()) + " elements");
    for (auto s : sigma)
        if (s >= L.size()) throw InvalidArgument("support map value out of lattice range");

    SupportReport rep;
    rep.lattice = check_regular(L);
    auto& v = rep.violations;
    auto el = [&](std::uint64_t g) { return to_string(G.element(g)); };

    for (std::uint64_t g = 0; g < G.order() && !v[0]; ++g)
        if ((sigma[g] == L.bottom()) != (g == 0))
            v[0] = g == 0 ? "sigma(0) = " + L.label(sigma[0]) + " is not the bottom"
                          : "nonzero " + el(g) + " is sent to the bottom " + L.label(L.bottom());

    for (std::uint64_t g = 0; g < G.order() && !v[1]; ++g)
        if (sigma[g] != sigma[G.neg_index(g)])
            v[1] = "sigma" + el(g) + " = " + L.label(sigma[g]) + " but sigma" + el(G.neg_index(g)) + " = " +
                   L.label(sigma[G.neg_index(g)]);

    for (std::uint64_t g = 0; g < G.order() && !v[2]; ++g)
        for (std::uint64_t h = g; h < G.order(); ++h) {
            const auto s = sigma[G.add_index(g, h)];
            const auto j = L.join(sigma[g], sigma[h]);
            if (!L.leq(s, j)) {
                v[2] = "sigma(" + el(g) + "+" + el(h) + ") = " + L.label(s) + " is not below " + L.label(j);
                break;
            }
        }

    const auto balls = detail::raw_balls(G, L, sigma);
    for (std::size_t S = 0; S < L.size() && !v[3]; ++S)
        for (std::size_t T = S + 1; T < L.size(); ++T) {
            std::vector<std::uint64_t> both = balls[S];
            both.insert(both.end(), balls[T].begin(), balls[T].end());
            const Code sum = subgroup_closure_indices(G, both);
            if (sum.elements() != balls[L.join(S, T)]) {
                v[3] = "G(" + L.label(S) + " v " + L.label(T) + ") has " + std::to_string(balls[L.join(S, T)].size()) +
                       " elements but G(" + L.label(S) + ") + G(" + L.label(T) + ") has " + std::to_string(sum.size());
                break;
            }
        }

    if (!L.is_graded()) {
        v[4] = "ball sizes cannot be compared: lattice is not graded";
    } else {
        std::vector<std::optional<std::size_t>> rep_of_rank(L.rank() + 1);
        for (std::size_t S = 0; S < L.size() && !v[4]; ++S) {
            auto& r = rep_of_rank[L.rank_of(S)];
            if (!r) r = S;
            else if (balls[*r].size() != balls[S].size())
                v[4] = "|G(" + L.label(*r) + ")| = " + std::to_string(balls[*r].size()) + " but |G(" + L.label(S) +
                       ")| = " + std::to_string(balls[S].size()) + " at equal rank";
        }
        if (rep.ok()) {
            for (int s = 0; s <= L.rank(); ++s) rep.gamma.push_back(balls[*rep_of_rank[s]].size());
        }
    }
    return rep;
}

/// A validated regular support sigma: G -> L, stored as an explicit element -> lattice map.
class RegularSupport {
public:
    /// Validates and freezes the map; throws LatticeIrregular or AxiomViolation.
    static RegularSupport create(FiniteAbelianGroup G, FiniteLattice L, std::vector<std::size_t> sigma,
                                 std::string name = "custom") {
        const SupportReport rep = validate_support(G, L, sigma);
        if (!rep.lattice.regular) throw LatticeIrregular("support lattice is not regular: " + rep.lattice.witness);
        if (auto a = rep.first_violation()) throw AxiomViolation(*a, *rep.violations[*a - 'A']);
        RegularSupport s;
        s.invariants_ = invariant_tables(L);
        s.gamma_ = rep.gamma;
        for (auto& ball : detail::raw_balls(G, L, sigma)) s.balls_.push_back(subgroup_closure_indices(G, ball));
        s.group_ = std::move(G);
        s.lattice_ = std::move(L);
        s.sigma_ = std::move(sigma);
        s.name_ = std::move(name);
        return s;
    }

    const FiniteAbelianGroup& group() const noexcept { return group_; }
    const FiniteLattice& lattice() const noexcept { return lattice_; }
    const LatticeInvariants& invariants() const noexcept { return invariants_; }
    const std::string& name() const noexcept { return name_; }
    int rank() const { return invariants_.r; }

    std::size_t sigma(std::uint64_t g) const { return sigma_.at(g); }
    const std::vector<std::size_t>& sigma_map() const noexcept { return sigma_; }

    /// gamma(s) = |G(S)| for any S of rank s.
    const std::vector<Integer>& gamma() const noexcept { return gamma_; }

    /// G(S) = {g : sigma(g) <= S}.
    const Code& ball(std::size_t S) const { return balls_.at(S); }

    int weight(std::uint64_t g) const { return lattice_.rank_of(sigma_.at(g)); }
    WeightLabels weights() const {
        WeightLabels w(group_.order());
        for (std::uint64_t g = 0; g < group_.order(); ++g) w[g] = weight(g);
        return w;
    }

    /// Optional named weights equivalent to (omega_sigma, omega_sigma*), used for display
    /// relabeling (the Lee weight for lee4).
    struct Reference {
        std::string name;
        WeightLabels on_group;
        WeightLabels on_characters;
    };
    const std::optional<Reference>& reference() const noexcept { return reference_; }
    RegularSupport with_reference(Reference ref) const {
        RegularSupport s = *this;
        s.reference_ = std::move(ref);
        return s;
    }

private:
    RegularSupport() = default;

    FiniteAbelianGroup group_;
    FiniteLattice lattice_;
    std::vector<std::size_t> sigma_;
    LatticeInvariants invariants_;
    std::vector<Integer> gamma_;
    std::vector<Code> balls_;
    std::string name_;
    std::optional<Reference> reference_;
};

inline const Code& ball(const RegularSupport& s, std::size_t S) { return s.ball(S); }
inline const std::vector<Integer>& gamma(const RegularSupport& s) { return s.gamma(); }
inline int sigma_weight(const RegularSupport& s, std::uint64_t g) { return s.weight(g); }
inline int sigma_weight(const RegularSupport& s, const GroupElement& g) { return s.weight(s.group().index_of(g)); }

/// The dual support on the character group with values in the dual lattice:
/// sigma*(chi) is the join of every S whose ball chi annihilates.
inline RegularSupport dual_support(const RegularSupport& s) {
    const auto& G = s.group();
    const auto& L = s.lattice();
    std::vector<std::vector<char>> annihilates(L.size(), std::vector<char>(G.order(), 0));
    for (std::size_t S = 0; S < L.size(); ++S) {
        const Code dual = dual_code(s.ball(S));
        for (auto chi : dual.elements()) annihilates[S][chi] = 1;
    }
    std::vector<std::size_t> star(G.order());
    for (std::uint64_t chi = 0; chi < G.order(); ++chi) {
        std::size_t acc = L.bottom();
        for (std::size_t S = 0; S < L.size(); ++S)
            if (annihilates[S][chi]) acc = L.join(acc, S);
        // The join must itself be annihilated, i.e. be the maximum such S.
        if (!annihilates[acc][chi])
            throw ArithmeticInconsistency("dual support: " + to_string(G.character(chi)) +
                                          " does not annihilate the ball of " + L.label(acc));
        star[chi] = acc;
    }
    auto d = RegularSupport::create(G, L.dual(), std::move(star), s.name() + "*");
    if (const auto& ref = s.reference())
        d = d.with_reference({ref->name + "*", ref->on_characters, ref->on_group});
    return d;
}

struct WeightDistribution {
    std::vector<Integer> counts;

    Integer total() const {
        Integer t = 0;
        for (const auto& c : counts) t += c;
        return t;
    }
    bool operator==(const WeightDistribution&) const = default;
};

inline std::string to_string(const WeightDistribution& w) {
    std::string s = "(";
    for (std::size_t i = 0; i < w.counts.size(); ++i) s += (i ? "," : "") + w.counts[i].str();
    return s + ")";
}

inline WeightDistribution weight_distribution(const Code& C, const RegularSupport& s) {
    if (!(C.group() == s.group())) throw InvalidArgument("weight_distribution: code and support groups differ");
    WeightDistribution w{std::vector<Integer>(s.rank() + 1, 0)};
    for (auto g : C.elements()) ++w.counts[s.weight(g)];
    return w;
}

inline int min_weight(const Code& C, const RegularSupport& s) {
    if (C.is_zero()) throw InvalidArgument("minimum weight of the zero code is undefined");
    int d = s.rank() + 1;
    for (auto g : C.elements())
        if (g != 0) d = std::min(d, s.weight(g));
    return d;
}

/// True iff the two labelings induce the same partition of the element set.
inline bool weights_equivalent(const WeightLabels& a, const WeightLabels& b) {
    if (a.size() != b.size()) throw InvalidArgument("weights_equivalent: different domains");
    std::map<int, int> fwd, back;
    for (std::size_t i = 0; i < a.size(); ++i) {
        auto [f, fnew] = fwd.try_emplace(a[i], b[i]);
        auto [g, gnew] = back.try_emplace(b[i], a[i]);
        if (f->second != b[i] || g->second != a[i]) return false;
    }
    return true;
}

/// Witness against d(g,g') = omega(g - g') being a metric, or nullopt.
inline std::optional<std::string> check_distance(const FiniteAbelianGroup& G, const WeightLabels& w) {
    for (std::uint64_t a = 0; a < G.order(); ++a) {
        if ((w[a] == 0) != (a == 0)) return "weight of " + to_string(G.element(a)) + " breaks definiteness";
        if (w[a] != w[G.neg_index(a)]) return "weight of " + to_string(G.element(a)) + " is not symmetric";
    }
    // Translation invariance reduces the triangle inequality to w(a+b) <= w(a) + w(b).
    for (std::uint64_t a = 0; a < G.order(); ++a)
        for (std::uint64_t b = 0; b < G.order(); ++b)
            if (w[G.add_index(a, b)] > w[a] + w[b])
                return "triangle inequality fails: w(" + to_string(G.element(a)) + "+" + to_string(G.element(b)) +
                       ") = " + std::to_string(w[G.add_index(a, b)]) + " > " + std::to_string(w[a]) + " + " +
                       std::to_string(w[b]);
    return std::nullopt;
}

inline std::optional<std::string> check_distance(const RegularSupport& s) {
    return check_distance(s.group(), s.weights());
}

// ---------------------------------------------------------------------------
// Builtin supports

/// Hamming support on H^n with values in the boolean lattice of [n].
inline RegularSupport hamming_support(const FiniteAbelianGroup& H, int n) {
    if (n < 1) throw InvalidArgument("hamming support needs n >= 1");
    if (H.order() < 2) throw InvalidArgument("hamming support needs a non-trivial component group");
    std::vector<std::uint32_t> orders;
    for (int i = 0; i < n; ++i) orders.insert(orders.end(), H.orders().begin(), H.orders().end());
    FiniteAbelianGroup G(orders);
    const std::size_t block = H.factors();
    std::vector<std::size_t> sigma(G.order());
    for (std::uint64_t g = 0; g < G.order(); ++g) {
        const auto e = G.element(g);
        std::size_t mask = 0;
        for (int i = 0; i < n; ++i)
            for (std::size_t c = 0; c < block; ++c)
                if (e.coords[i * block + c] != 0) mask |= std::size_t{1} << i;
        sigma[g] = mask;
    }
    return RegularSupport::create(G, boolean_lattice(n), std::move(sigma),
                                  "hamming(" + H.describe() + "," + std::to_string(n) + ")");
}

/// Chain support for {0} = G_0 < G_1 < ... < G_r = G; the list holds G_1..G_r.
inline RegularSupport chain_support(const FiniteAbelianGroup& G, const std::vector<Code>& chain,
                                    std::string name = "chain") {
    if (chain.empty()) throw InvalidArgument("chain support needs at least one subgroup");
    std::uint64_t prev = 1;
    for (std::size_t i = 0; i < chain.size(); ++i) {
        if (!(chain[i].group() == G)) throw InvalidArgument("chain subgroup lives in a different group");
        if (chain[i].size() <= prev) throw InvalidArgument("chain is not strictly increasing");
        if (i > 0 && !std::includes(chain[i].elements().begin(), chain[i].elements().end(),
                                    chain[i - 1].elements().begin(), chain[i - 1].elements().end()))
            throw InvalidArgument("chain subgroups are not nested");
        prev = chain[i].size();
    }
    if (!chain.back().is_full()) throw InvalidArgument("chain must end at the whole group");
    std::vector<std::size_t> sigma(G.order(), 0);
    for (std::uint64_t g = 1; g < G.order(); ++g)
        for (std::size_t i = 0; i < chain.size(); ++i)
            if (chain[i].contains(g)) {
                sigma[g] = i + 1;
                break;
            }
    return RegularSupport::create(G, chain_lattice(static_cast<int>(chain.size())), std::move(sigma),
                                  std::move(name));
}

/// The full chain of Z_{p^a}: <p^{a-1}> < ... < <p> < Z_{p^a}.
inline RegularSupport cyclic_chain_support(std::uint32_t n) {
    FiniteAbelianGroup G({n});
    std::vector<Code> chain;
    for (std::uint32_t d = n; d-- > 1;)
        if (n % d == 0) {
            auto C = subgroup_closure(G, {GroupElement{{d}}});
            if (chain.empty() || C.size() > chain.back().size()) {
                bool nested = chain.empty() || std::includes(C.elements().begin(), C.elements().end(),
                                                             chain.back().elements().begin(),
                                                             chain.back().elements().end());
                if (nested) chain.push_back(std::move(C));
            }
        }
    if (chain.empty() || !chain.back().is_full()) chain.push_back(full_code(G));
    return chain_support(G, chain, "chain(Z_" + std::to_string(n) + ")");
}

/// Lee weight min(a, n - a) on Z_n.
inline WeightLabels lee_weight(std::uint32_t n) {
    WeightLabels w(n);
    for (std::uint32_t a = 0; a < n; ++a) w[a] = static_cast<int>(std::min(a, n - a));
    return w;
}

/// Chain {0} < {0,2} < Z_4, carrying the Lee weight as reference labels.
inline RegularSupport lee4_support() {
    FiniteAbelianGroup G({4});
    auto s = chain_support(G, {subgroup_closure(G, {GroupElement{{2}}}), full_code(G)}, "lee4");
    // The canonical self-pairing realizes psi(a)(b) = zeta^{ab}, so the dual Lee weight
    // has the same labels on character indices.
    return s.with_reference({"lee", lee_weight(4), lee_weight(4)});
}

/// Additive group of k x m matrices over F_q as Z_p^{k m e}; coordinate ((r*m + c)*e + t) is
/// base-p digit t of entry (r, c).
struct MatrixSpace {
    GaloisField field;
    int k;
    int m;

    MatrixSpace(std::uint32_t q, int k_, int m_) : field(q), k(k_), m(m_) {
        if (k < 1 || m < 1) throw InvalidArgument("matrix dimensions must be >= 1");
    }

    FiniteAbelianGroup group() const {
        return FiniteAbelianGroup(
            std::vector<std::uint32_t>(static_cast<std::size_t>(k * m) * field.degree(), field.characteristic()));
    }
    FieldMatrix matrix(const FiniteAbelianGroup& G, std::uint64_t index) const {
        const auto e = G.element(index);
        FieldMatrix M(k, m);
        const std::uint32_t p = field.characteristic(), deg = field.degree();
        for (int r = 0; r < k; ++r)
            for (int c = 0; c < m; ++c) {
                std::uint32_t v = 0;
                for (std::uint32_t t = deg; t-- > 0;) v = v * p + e.coords[(r * m + c) * deg + t];
                M.at(r, c) = v;
            }
        return M;
    }
    std::uint64_t index(const FiniteAbelianGroup& G, const FieldMatrix& M) const {
        GroupElement e = G.zero();
        const std::uint32_t p = field.characteristic(), deg = field.degree();
        for (int r = 0; r < k; ++r)
            for (int c = 0; c < m; ++c) {
                std::uint32_t v = M.at(r, c);
                for (std::uint32_t t = 0; t < deg; ++t, v /= p) e.coords[(r * m + c) * deg + t] = v % p;
            }
        return G.index_of(e);
    }
};

/// Rank support M -> column space of M in the subspace lattice of F_q^k.
inline RegularSupport rank_support(std::uint32_t q, int k, int m) {
    if (k > m) throw InvalidArgument("rank support expects k <= m");
    MatrixSpace space(q, k, m);
    const auto G = space.group();
    const auto sub = subspace_lattice(q, k);
    std::vector<std::size_t> sigma(G.order());
    for (std::uint64_t g = 0; g < G.order(); ++g) sigma[g] = sub.index_of(space.matrix(G, g).transposed());
    return RegularSupport::create(G, sub.lattice, std::move(sigma),
                                  "rank(" + std::to_string(q) + "," + std::to_string(k) + "," + std::to_string(m) + ")");
}

/// Support on (Z_{p^2})^n whose weight is equivalent to the homogeneous weight: non-socle
/// elements go to the top of the punctured boolean lattice, socle elements to their support.
inline RegularSupport homogeneous_support(std::uint32_t p, int n) {
    if (!GaloisField::is_prime(p) || p < 3) throw InvalidArgument("homogeneous support needs a prime p >= 3");
    if (n < 1) throw InvalidArgument("homogeneous support needs n >= 1");
    FiniteAbelianGroup G(std::vector<std::uint32_t>(n, p * p));
    const std::size_t top = std::size_t{1} << n;
    std::vector<std::size_t> sigma(G.order());
    for (std::uint64_t g = 0; g < G.order(); ++g) {
        const auto e = G.element(g);
        std::size_t mask = 0;
        bool in_socle = true;
        for (int i = 0; i < n; ++i) {
            if (e.coords[i] % p != 0) in_socle = false;
            if (e.coords[i] != 0) mask |= std::size_t{1} << i;
        }
        sigma[g] = in_socle ? mask : top;
    }
    return RegularSupport::create(G, punctured_boolean_lattice(n), std::move(sigma),
                                  "homogeneous(" + std::to_string(p) + "," + std::to_string(n) + ")");
}

}  // namespace latmw
