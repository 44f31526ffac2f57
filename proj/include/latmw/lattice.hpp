#pragma once

#include "latmw/common.hpp"
#include "latmw/finite_field.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace latmw {

/// A finite lattice given by explicit order, meet and join tables over elements 0..n-1.
/// The Möbius function is tabulated at construction. When every cover raises the
/// longest-chain length by exactly one the lattice is graded and ranks are available.
class FiniteLattice {
public:
    FiniteLattice() = default;

    /// Builds a lattice from a full order matrix (leq[a*n+b] != 0 iff a <= b).
    /// Throws InvalidArgument when the relation is not a partial order or some pair
    /// lacks a meet or join.
    static FiniteLattice from_order(std::size_t n, std::vector<char> leq, std::vector<std::string> labels = {}) {
        if (n == 0) throw InvalidArgument("lattice must be non-empty");
        if (leq.size() != n * n) throw InvalidArgument("order matrix has the wrong size");
        for (std::size_t a = 0; a < n; ++a) {
            if (!leq[a * n + a]) throw InvalidArgument("order is not reflexive at " + std::to_string(a));
            for (std::size_t b = 0; b < n; ++b) {
                if (a != b && leq[a * n + b] && leq[b * n + a])
                    throw InvalidArgument("order is not antisymmetric: " + std::to_string(a) + ", " + std::to_string(b));
                for (std::size_t c = 0; c < n; ++c)
                    if (leq[a * n + b] && leq[b * n + c] && !leq[a * n + c])
                        throw InvalidArgument("order is not transitive");
            }
        }
        FiniteLattice L;
        L.n_ = n;
        L.leq_ = std::move(leq);
        L.labels_ = std::move(labels);
        if (L.labels_.empty())
            for (std::size_t i = 0; i < n; ++i) L.labels_.push_back(std::to_string(i));
        if (L.labels_.size() != n) throw InvalidArgument("label count does not match element count");
        L.build_meet_join();
        L.finish();
        return L;
    }

    /// Builds a lattice from generating relations; the reflexive-transitive closure is taken.
    static FiniteLattice from_relations(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& rel,
                                        std::vector<std::string> labels = {}) {
        std::vector<char> leq(n * n, 0);
        for (std::size_t i = 0; i < n; ++i) leq[i * n + i] = 1;
        for (auto [a, b] : rel) {
            if (a >= n || b >= n) throw InvalidArgument("relation index out of range");
            leq[a * n + b] = 1;
        }
        for (std::size_t k = 0; k < n; ++k)
            for (std::size_t a = 0; a < n; ++a)
                if (leq[a * n + k])
                    for (std::size_t b = 0; b < n; ++b)
                        if (leq[k * n + b]) leq[a * n + b] = 1;
        return from_order(n, std::move(leq), std::move(labels));
    }

    std::size_t size() const noexcept { return n_; }
    bool leq(std::size_t a, std::size_t b) const { return leq_[a * n_ + b] != 0; }
    bool lt(std::size_t a, std::size_t b) const { return a != b && leq(a, b); }
    std::size_t meet(std::size_t a, std::size_t b) const { return meet_[a * n_ + b]; }
    std::size_t join(std::size_t a, std::size_t b) const { return join_[a * n_ + b]; }
    std::size_t bottom() const noexcept { return bottom_; }
    std::size_t top() const noexcept { return top_; }
    const std::string& label(std::size_t a) const { return labels_.at(a); }

    bool covers(std::size_t lower, std::size_t upper) const {
        if (!lt(lower, upper)) return false;
        for (std::size_t c = 0; c < n_; ++c)
            if (lt(lower, c) && lt(c, upper)) return false;
        return true;
    }

    /// Longest-chain length from the bottom, defined for every finite lattice.
    const std::vector<int>& height() const noexcept { return height_; }

    bool is_graded() const noexcept { return graded_; }

    /// Rank function; throws LatticeIrregular for non-graded lattices.
    const std::vector<int>& ranks() const {
        if (!graded_) throw LatticeIrregular("lattice is not graded");
        return height_;
    }
    int rank_of(std::size_t a) const { return ranks().at(a); }
    int rank() const { return rank_of(top_); }

    std::vector<std::size_t> elements_of_rank(int s) const {
        std::vector<std::size_t> out;
        for (std::size_t a = 0; a < n_; ++a)
            if (ranks()[a] == s) out.push_back(a);
        return out;
    }

    /// Möbius function; requires S <= T.
    std::int64_t mobius(std::size_t S, std::size_t T) const {
        if (S >= n_ || T >= n_) throw InvalidArgument("mobius: element index out of range");
        if (!leq(S, T)) throw InvalidArgument("mobius: " + label(S) + " is not below " + label(T));
        return mobius_[S * n_ + T];
    }

    /// Same elements with the order reversed, meet and join swapped and ranks complemented.
    FiniteLattice dual() const {
        FiniteLattice D;
        D.n_ = n_;
        D.labels_ = labels_;
        D.leq_.assign(n_ * n_, 0);
        D.meet_.assign(n_ * n_, 0);
        D.join_.assign(n_ * n_, 0);
        for (std::size_t a = 0; a < n_; ++a)
            for (std::size_t b = 0; b < n_; ++b) {
                D.leq_[a * n_ + b] = leq_[b * n_ + a];
                D.meet_[a * n_ + b] = join_[a * n_ + b];
                D.join_[a * n_ + b] = meet_[a * n_ + b];
            }
        D.finish();
        return D;
    }

    bool operator==(const FiniteLattice& o) const {
        return n_ == o.n_ && leq_ == o.leq_ && meet_ == o.meet_ && join_ == o.join_;
    }

private:
    void build_meet_join() {
        meet_.assign(n_ * n_, 0);
        join_.assign(n_ * n_, 0);
        for (std::size_t a = 0; a < n_; ++a)
            for (std::size_t b = 0; b < n_; ++b) {
                meet_[a * n_ + b] = extremal_bound(a, b, /*lower=*/true);
                join_[a * n_ + b] = extremal_bound(a, b, /*lower=*/false);
            }
    }

    std::size_t extremal_bound(std::size_t a, std::size_t b, bool lower) const {
        auto below = [&](std::size_t x, std::size_t y) { return lower ? leq(x, y) : leq(y, x); };
        constexpr std::size_t none = static_cast<std::size_t>(-1);
        std::size_t best = none;
        for (std::size_t c = 0; c < n_; ++c) {
            if (!below(c, a) || !below(c, b)) continue;
            if (best == none || below(best, c)) best = c;
        }
        bool greatest = best != none;
        for (std::size_t c = 0; c < n_ && greatest; ++c)
            if (below(c, a) && below(c, b) && !below(c, best)) greatest = false;
        if (!greatest)
            throw InvalidArgument(std::string("elements ") + labels_[a] + " and " + labels_[b] + " have no " +
                                  (lower ? "meet" : "join"));
        return best;
    }

    void finish() {
        bottom_ = 0;
        top_ = 0;
        for (std::size_t a = 1; a < n_; ++a) {
            bottom_ = meet(bottom_, a);
            top_ = join(top_, a);
        }
        // Linear extension: sort by size of the down-set.
        std::vector<std::size_t> down(n_, 0);
        for (std::size_t a = 0; a < n_; ++a)
            for (std::size_t b = 0; b < n_; ++b) down[a] += leq(b, a) ? 1 : 0;
        std::vector<std::size_t> order(n_);
        std::iota(order.begin(), order.end(), 0);
        std::stable_sort(order.begin(), order.end(), [&](auto x, auto y) { return down[x] < down[y]; });

        height_.assign(n_, 0);
        for (auto t : order)
            for (auto s : order)
                if (lt(s, t)) height_[t] = std::max(height_[t], height_[s] + 1);
        graded_ = true;
        for (std::size_t a = 0; a < n_ && graded_; ++a)
            for (std::size_t b = 0; b < n_; ++b)
                if (covers(a, b) && height_[b] != height_[a] + 1) {
                    graded_ = false;
                    break;
                }

        mobius_.assign(n_ * n_, 0);
        for (std::size_t S = 0; S < n_; ++S) {
            mobius_[S * n_ + S] = 1;
            for (auto T : order) {
                if (!lt(S, T)) continue;
                std::int64_t acc = 0;
                for (std::size_t U = 0; U < n_; ++U)
                    if (leq(S, U) && lt(U, T)) acc += mobius_[S * n_ + U];
                mobius_[S * n_ + T] = -acc;
            }
        }
    }

    std::size_t n_ = 0;
    std::vector<char> leq_;
    std::vector<std::size_t> meet_, join_;
    std::vector<std::int64_t> mobius_;
    std::vector<int> height_;
    std::vector<std::string> labels_;
    bool graded_ = false;
    std::size_t bottom_ = 0, top_ = 0;
};

inline std::int64_t mobius(const FiniteLattice& L, std::size_t S, std::size_t T) { return L.mobius(S, T); }

inline FiniteLattice dual_view(const FiniteLattice& L) { return L.dual(); }

/// Tables of a regular lattice of rank r, indexed by ranks 0..r:
/// below(s,t) = #{S <= T : rank S = s}, above(s,t) = #{S >= T : rank S = s},
/// mobius(s,t) = mu(S,T) for S <= T of ranks s <= t (0 when s > t).
struct LatticeInvariants {
    int r = 0;
    std::vector<std::vector<Integer>> mu_leq;
    std::vector<std::vector<Integer>> mu_geq;
    std::vector<std::vector<Integer>> mu_mob;

    explicit LatticeInvariants(int rank = 0)
        : r(rank),
          mu_leq(rank + 1, std::vector<Integer>(rank + 1, 0)),
          mu_geq(rank + 1, std::vector<Integer>(rank + 1, 0)),
          mu_mob(rank + 1, std::vector<Integer>(rank + 1, 0)) {}

    const Integer& below(int s, int t) const { return mu_leq.at(s).at(t); }
    const Integer& above(int s, int t) const { return mu_geq.at(s).at(t); }
    const Integer& mobius(int s, int t) const { return mu_mob.at(s).at(t); }

    bool operator==(const LatticeInvariants&) const = default;

    /// Tables of the dual lattice.
    LatticeInvariants dual() const {
        LatticeInvariants d(r);
        for (int s = 0; s <= r; ++s)
            for (int t = 0; t <= r; ++t) {
                d.mu_leq[s][t] = mu_geq[r - s][r - t];
                d.mu_geq[s][t] = mu_leq[r - s][r - t];
                d.mu_mob[s][t] = mu_mob[r - t][r - s];
            }
        return d;
    }
};

struct RegularityReport {
    bool regular = false;
    std::string witness;  // empty when regular
};

enum class RegularityCriterion { definition, interval_count };

namespace detail {

inline RegularityReport check_regular_definition(const FiniteLattice& L, LatticeInvariants* out) {
    if (!L.is_graded()) return {false, "lattice is not graded"};
    const auto& rk = L.ranks();
    const int r = L.rank();
    LatticeInvariants inv(r);
    std::vector<std::optional<std::size_t>> rep(r + 1);  // representative T per rank
    for (std::size_t T = 0; T < L.size(); ++T) {
        const int t = rk[T];
        std::vector<Integer> below(r + 1, 0), above(r + 1, 0);
        for (std::size_t S = 0; S < L.size(); ++S) {
            if (L.leq(S, T)) ++below[rk[S]];
            if (L.leq(T, S)) ++above[rk[S]];
        }
        if (!rep[t]) {
            rep[t] = T;
            for (int s = 0; s <= r; ++s) {
                inv.mu_leq[s][t] = below[s];
                inv.mu_geq[s][t] = above[s];
            }
            continue;
        }
        for (int s = 0; s <= r; ++s) {
            if (inv.mu_leq[s][t] != below[s])
                return {false, "rank-" + std::to_string(s) + " counts below " + L.label(*rep[t]) + " vs below " +
                                   L.label(T) + " differ (" + inv.mu_leq[s][t].str() + " vs " + below[s].str() + ")"};
            if (inv.mu_geq[s][t] != above[s])
                return {false, "rank-" + std::to_string(s) + " counts above " + L.label(*rep[t]) + " vs above " +
                                   L.label(T) + " differ (" + inv.mu_geq[s][t].str() + " vs " + above[s].str() + ")"};
        }
    }
    std::vector<std::vector<std::optional<std::pair<std::size_t, std::size_t>>>> seen(
        r + 1, std::vector<std::optional<std::pair<std::size_t, std::size_t>>>(r + 1));
    for (std::size_t S = 0; S < L.size(); ++S)
        for (std::size_t T = 0; T < L.size(); ++T) {
            if (!L.leq(S, T)) continue;
            const int s = rk[S], t = rk[T];
            const Integer m = L.mobius(S, T);
            if (!seen[s][t]) {
                seen[s][t] = std::make_pair(S, T);
                inv.mu_mob[s][t] = m;
            } else if (inv.mu_mob[s][t] != m) {
                auto [S0, T0] = *seen[s][t];
                return {false, "mobius(" + L.label(S0) + "," + L.label(T0) + ") = " + inv.mu_mob[s][t].str() +
                                   " but mobius(" + L.label(S) + "," + L.label(T) + ") = " + m.str()};
            }
        }
    if (out) *out = std::move(inv);
    return {true, {}};
}

inline bool interval_counts_uniform(const FiniteLattice& L) {
    const auto& rk = L.ranks();
    const int r = L.rank();
    std::map<std::array<int, 3>, std::size_t> table;
    for (std::size_t S = 0; S < L.size(); ++S)
        for (std::size_t T = 0; T < L.size(); ++T) {
            if (!L.leq(S, T)) continue;
            std::vector<std::size_t> count(r + 1, 0);
            for (std::size_t U = 0; U < L.size(); ++U)
                if (L.leq(S, U) && L.leq(U, T)) ++count[rk[U]];
            for (int i = rk[S]; i <= rk[T]; ++i) {
                auto [it, fresh] = table.try_emplace({i, rk[S], rk[T]}, count[i]);
                if (!fresh && it->second != count[i]) return false;
            }
        }
    return true;
}

}  // namespace detail

/// Exhaustive regularity test over every representative. With the interval-count
/// criterion, a lattice whose interval rank counts are uniform is accepted directly;
/// otherwise the definition is checked.
inline RegularityReport check_regular(const FiniteLattice& L,
                                      RegularityCriterion criterion = RegularityCriterion::definition) {
    if (!L.is_graded()) return {false, "lattice is not graded"};
    if (criterion == RegularityCriterion::interval_count && detail::interval_counts_uniform(L)) return {true, {}};
    return detail::check_regular_definition(L, nullptr);
}

/// Invariant tables by enumeration; throws LatticeIrregular carrying the witness.
inline LatticeInvariants invariant_tables(const FiniteLattice& L) {
    LatticeInvariants inv;
    auto report = detail::check_regular_definition(L, &inv);
    if (!report.regular) throw LatticeIrregular("lattice is not regular: " + report.witness);
    return inv;
}

/// First (S, T, U) with S <= U and S v (T ^ U) != (S v T) ^ U, if any.
inline std::optional<std::array<std::size_t, 3>> check_modular(const FiniteLattice& L) {
    for (std::size_t S = 0; S < L.size(); ++S)
        for (std::size_t U = 0; U < L.size(); ++U) {
            if (!L.leq(S, U)) continue;
            for (std::size_t T = 0; T < L.size(); ++T)
                if (L.join(S, L.meet(T, U)) != L.meet(L.join(S, T), U)) return std::array{S, T, U};
        }
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// Builtin families

inline FiniteLattice chain_lattice(int r) {
    if (r < 0) throw InvalidArgument("chain rank must be >= 0");
    const std::size_t n = static_cast<std::size_t>(r) + 1;
    std::vector<char> leq(n * n, 0);
    std::vector<std::string> labels;
    for (std::size_t a = 0; a < n; ++a) {
        labels.push_back("S" + std::to_string(a));
        for (std::size_t b = a; b < n; ++b) leq[a * n + b] = 1;
    }
    return FiniteLattice::from_order(n, std::move(leq), std::move(labels));
}

inline std::string subset_label(std::uint64_t mask, int n) {
    std::string s = "{";
    bool first = true;
    for (int i = 0; i < n; ++i)
        if (mask >> i & 1) {
            s += (first ? "" : ",") + std::to_string(i + 1);
            first = false;
        }
    return s + "}";
}

/// Subsets of [n]; element index is the bitmask (bit i is element i+1).
inline FiniteLattice boolean_lattice(int n) {
    if (n < 0 || n > 12) throw InvalidArgument("boolean lattice size out of range");
    const std::size_t N = std::size_t{1} << n;
    std::vector<char> leq(N * N, 0);
    std::vector<std::string> labels;
    for (std::size_t a = 0; a < N; ++a) {
        labels.push_back(subset_label(a, n));
        for (std::size_t b = 0; b < N; ++b) leq[a * N + b] = (a & ~b) == 0;
    }
    return FiniteLattice::from_order(N, std::move(leq), std::move(labels));
}

/// Subsets of [n+1] avoiding n+1, plus [n+1] itself. Index = bitmask over [n] for the
/// former, 2^n for the top.
inline FiniteLattice punctured_boolean_lattice(int n) {
    if (n < 1 || n > 10) throw InvalidArgument("punctured boolean lattice size out of range");
    const std::size_t half = std::size_t{1} << n;
    const std::size_t N = half + 1;
    std::vector<char> leq(N * N, 0);
    std::vector<std::string> labels;
    for (std::size_t a = 0; a < N; ++a) {
        labels.push_back(a == half ? subset_label((std::uint64_t{1} << (n + 1)) - 1, n + 1) : subset_label(a, n));
        for (std::size_t b = 0; b < N; ++b) leq[a * N + b] = (b == half) || (a != half && (a & ~b) == 0);
    }
    return FiniteLattice::from_order(N, std::move(leq), std::move(labels));
}

/// Divisors of n ordered by divisibility.
inline FiniteLattice divisor_lattice(std::uint64_t n) {
    if (n < 1) throw InvalidArgument("divisor lattice needs n >= 1");
    std::vector<std::uint64_t> divs;
    for (std::uint64_t d = 1; d <= n; ++d)
        if (n % d == 0) divs.push_back(d);
    const std::size_t N = divs.size();
    std::vector<char> leq(N * N, 0);
    std::vector<std::string> labels;
    for (std::size_t a = 0; a < N; ++a) {
        labels.push_back(std::to_string(divs[a]));
        for (std::size_t b = 0; b < N; ++b) leq[a * N + b] = divs[b] % divs[a] == 0;
    }
    return FiniteLattice::from_order(N, std::move(leq), std::move(labels));
}

/// N_5: 0 < a < b < 1 and 0 < c < 1.
inline FiniteLattice pentagon_lattice() {
    return FiniteLattice::from_relations(5, {{0, 1}, {1, 2}, {2, 4}, {0, 3}, {3, 4}}, {"0", "a", "b", "c", "1"});
}

/// Subspaces of F_q^k, each held as its canonical (RREF) basis.
struct SubspaceLattice {
    GaloisField field;
    int k = 0;
    std::vector<FieldMatrix> bases;  // bases[i] spans lattice element i
    FiniteLattice lattice;

    std::size_t index_of(const FieldMatrix& any_spanning_rows) const {
        FieldMatrix basis = row_space_basis(field, any_spanning_rows);
        auto it = std::lower_bound(bases.begin(), bases.end(), basis, order);
        if (it == bases.end() || !(*it == basis)) throw InvalidArgument("subspace not found in lattice");
        return static_cast<std::size_t>(it - bases.begin());
    }

    static bool order(const FieldMatrix& a, const FieldMatrix& b) {
        if (a.rows != b.rows) return a.rows < b.rows;
        return a.data < b.data;
    }
};

inline std::string subspace_label(const FieldMatrix& basis) {
    std::string s = "<";
    for (std::size_t r = 0; r < basis.rows; ++r) {
        if (r) s += ",";
        for (std::size_t c = 0; c < basis.cols; ++c) s += std::to_string(basis.at(r, c));
    }
    return s + ">";
}

inline SubspaceLattice subspace_lattice(std::uint32_t q, int k) {
    if (k < 1 || k > 6) throw InvalidArgument("subspace lattice dimension out of range");
    SubspaceLattice out{GaloisField(q), k, {}, {}};
    const auto& F = out.field;
    const auto K = static_cast<std::size_t>(k);
    // Enumerate RREF matrices by pivot set and free entries.
    for (std::uint32_t pivots = 0; pivots < (1u << k); ++pivots) {
        std::vector<std::size_t> piv;
        for (std::size_t c = 0; c < K; ++c)
            if (pivots >> c & 1) piv.push_back(c);
        std::vector<std::pair<std::size_t, std::size_t>> free;
        for (std::size_t r = 0; r < piv.size(); ++r)
            for (std::size_t c = piv[r] + 1; c < K; ++c)
                if (!(pivots >> c & 1)) free.emplace_back(r, c);
        std::uint64_t combos = 1;
        for (std::size_t i = 0; i < free.size(); ++i) combos *= q;
        for (std::uint64_t code = 0; code < combos; ++code) {
            FieldMatrix M(piv.size(), K);
            for (std::size_t r = 0; r < piv.size(); ++r) M.at(r, piv[r]) = 1;
            std::uint64_t x = code;
            for (auto [r, c] : free) {
                M.at(r, c) = static_cast<std::uint32_t>(x % q);
                x /= q;
            }
            out.bases.push_back(std::move(M));
        }
    }
    std::sort(out.bases.begin(), out.bases.end(), SubspaceLattice::order);
    const std::size_t N = out.bases.size();
    std::vector<char> leq(N * N, 0);
    std::vector<std::string> labels;
    for (std::size_t a = 0; a < N; ++a) {
        labels.push_back(subspace_label(out.bases[a]));
        for (std::size_t b = 0; b < N; ++b) {
            const auto& A = out.bases[a];
            const auto& B = out.bases[b];
            if (A.rows > B.rows) continue;
            FieldMatrix stacked(A.rows + B.rows, K);
            std::copy(B.data.begin(), B.data.end(), stacked.data.begin());
            std::copy(A.data.begin(), A.data.end(), stacked.data.begin() + static_cast<std::ptrdiff_t>(B.data.size()));
            leq[a * N + b] = matrix_rank(F, stacked) == B.rows;
        }
    }
    out.lattice = FiniteLattice::from_order(N, std::move(leq), std::move(labels));
    return out;
}

/// Tagged builtin lattice family with its parameters.
struct LatticeFamily {
    enum class Kind { chain, boolean, subspace, punctured_boolean };
    Kind kind = Kind::chain;
    int size = 0;         // r for chain, n for boolean and punctured boolean, k for subspace
    std::uint32_t q = 0;  // subspace only

    static LatticeFamily chain(int r) { return {Kind::chain, r, 0}; }
    static LatticeFamily boolean(int n) { return {Kind::boolean, n, 0}; }
    static LatticeFamily subspace(std::uint32_t q, int k) { return {Kind::subspace, k, q}; }
    static LatticeFamily punctured_boolean(int n) { return {Kind::punctured_boolean, n, 0}; }
};

inline FiniteLattice make_lattice(const LatticeFamily& f) {
    switch (f.kind) {
        case LatticeFamily::Kind::chain: return chain_lattice(f.size);
        case LatticeFamily::Kind::boolean: return boolean_lattice(f.size);
        case LatticeFamily::Kind::subspace: return subspace_lattice(f.q, f.size).lattice;
        case LatticeFamily::Kind::punctured_boolean: return punctured_boolean_lattice(f.size);
    }
    throw InvalidArgument("unknown lattice family");
}

/// Invariant tables from the closed forms of each family.
inline LatticeInvariants closed_form_invariants(const LatticeFamily& f) {
    using K = LatticeFamily::Kind;
    if (f.size < 0) throw InvalidArgument("lattice family parameter must be >= 0");
    if (f.kind == K::chain) {
        LatticeInvariants inv(f.size);
        for (int s = 0; s <= f.size; ++s)
            for (int t = 0; t <= f.size; ++t) {
                inv.mu_leq[s][t] = s <= t ? 1 : 0;
                inv.mu_geq[s][t] = s >= t ? 1 : 0;
                inv.mu_mob[s][t] = s == t ? 1 : (t == s + 1 ? -1 : 0);
            }
        return inv;
    }
    if (f.kind == K::boolean) {
        const int n = f.size;
        LatticeInvariants inv(n);
        for (int s = 0; s <= n; ++s)
            for (int t = 0; t <= n; ++t) {
                inv.mu_leq[s][t] = binomial(t, s);
                inv.mu_geq[s][t] = binomial(n - t, s - t);
                inv.mu_mob[s][t] = s <= t ? ((t - s) % 2 ? -1 : 1) : 0;
            }
        return inv;
    }
    if (f.kind == K::subspace) {
        if (!GaloisField::supported(f.q)) throw InvalidArgument("subspace family needs a supported prime power q");
        const int k = f.size;
        LatticeInvariants inv(k);
        for (int s = 0; s <= k; ++s)
            for (int t = 0; t <= k; ++t) {
                inv.mu_leq[s][t] = q_binomial(t, s, f.q);
                inv.mu_geq[s][t] = q_binomial(k - t, s - t, f.q);
                if (s <= t) {
                    Integer v = ipow(Integer(f.q), static_cast<std::uint64_t>(choose2(t - s)));
                    inv.mu_mob[s][t] = (t - s) % 2 ? Integer(-v) : v;
                }
            }
        return inv;
    }
    if (f.kind == K::punctured_boolean) {
        const int n = f.size;
        if (n < 1) throw InvalidArgument("punctured boolean family needs n >= 1");
        LatticeInvariants inv(n + 1);
        for (int s = 0; s <= n + 1; ++s)
            for (int t = 0; t <= n + 1; ++t) {
                if (s > t) inv.mu_leq[s][t] = 0;
                else if (t <= n) inv.mu_leq[s][t] = binomial(t, s);
                else if (s <= n) inv.mu_leq[s][t] = binomial(n, s);
                else inv.mu_leq[s][t] = 1;

                if (s < t) inv.mu_geq[s][t] = 0;
                else if (s <= n) inv.mu_geq[s][t] = binomial(n - t, s - t);
                else inv.mu_geq[s][t] = 1;

                if (s == t) inv.mu_mob[s][t] = 1;
                else if (s < t && t <= n) inv.mu_mob[s][t] = (t - s) % 2 ? -1 : 1;
                else if (t == n + 1 && s == n) inv.mu_mob[s][t] = -1;
                else inv.mu_mob[s][t] = 0;
            }
        return inv;
    }
    throw InvalidArgument("unknown lattice family");
}

}  // namespace latmw
