#pragma once

#include "latmw/common.hpp"
#include "latmw/cyclotomic.hpp"
#include "latmw/group.hpp"
#include "latmw/lattice.hpp"
#include "latmw/support.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace latmw {

/// Square table K[a][b] of exact rationals. Row index is the weight on the side whose
/// elements are evaluated, column index the weight of the characters being summed.
struct KrawtchoukTable {
    enum class Provenance { regular_formula, regular_dual_formula, oracle, derived };

    std::vector<std::vector<Rational>> k;
    Provenance provenance = Provenance::derived;

    std::size_t rows() const noexcept { return k.size(); }
    std::size_t cols() const noexcept { return k.empty() ? 0 : k[0].size(); }
    const Rational& at(std::size_t a, std::size_t b) const { return k.at(a).at(b); }

    /// Value equality; provenance is ignored.
    bool operator==(const KrawtchoukTable& o) const { return k == o.k; }
};

inline std::string to_string(const KrawtchoukTable& t) {
    std::string s;
    for (const auto& row : t.k) {
        s += "[";
        for (std::size_t j = 0; j < row.size(); ++j) s += (j ? "," : "") + to_string(row[j]);
        s += "]";
    }
    return s;
}

inline KrawtchoukTable make_table(const std::vector<std::vector<std::int64_t>>& rows) {
    KrawtchoukTable t;
    for (const auto& r : rows) t.k.emplace_back(r.begin(), r.end());
    return t;
}

namespace detail {

inline void check_tables(const LatticeInvariants& inv, const std::vector<Integer>& gamma, int i, int j) {
    if (static_cast<int>(gamma.size()) != inv.r + 1) throw InvalidArgument("gamma table does not match lattice rank");
    if (i < 0 || j < 0 || i > inv.r || j > inv.r)
        throw InvalidArgument("Krawtchouk index (" + std::to_string(i) + "," + std::to_string(j) + ") out of range 0.." +
                              std::to_string(inv.r));
}

inline Integer mob(const LatticeInvariants& inv, int s, int t) { return s <= t ? inv.mobius(s, t) : Integer(0); }

}  // namespace detail

/// K(omega_sigma*, omega_sigma)(i, j) = sum_s gamma(s) mu(s,j) mu_<=(s, r-i) mu_>=(j, s).
inline Rational krawtchouk_regular(const LatticeInvariants& inv, const std::vector<Integer>& gamma, int i, int j) {
    detail::check_tables(inv, gamma, i, j);
    const int r = inv.r;
    Integer sum = 0;
    for (int s = 0; s <= r; ++s) sum += gamma[s] * detail::mob(inv, s, j) * inv.below(s, r - i) * inv.above(j, s);
    return Rational(sum);
}

/// K(omega_sigma, omega_sigma*)(i, j) = |G| sum_s mu(r-j, r-s) mu_>=(r-s, i) mu_<=(r-j, r-s) / gamma(r-s).
inline Rational krawtchouk_regular_dual(const LatticeInvariants& inv, const std::vector<Integer>& gamma,
                                        const Integer& group_order, int i, int j) {
    detail::check_tables(inv, gamma, i, j);
    const int r = inv.r;
    Rational sum = 0;
    for (int s = 0; s <= r; ++s) {
        const Integer num = detail::mob(inv, r - j, r - s) * inv.above(r - s, i) * inv.below(r - j, r - s);
        if (num != 0) sum += Rational(num, gamma[r - s]);
    }
    return sum * group_order;
}

namespace detail {

inline std::vector<char> attained(const WeightLabels& w, int r) {
    std::vector<char> a(r + 1, 0);
    for (int x : w) a.at(x) = 1;
    return a;
}

inline KrawtchoukTable masked_table(int r, const std::vector<char>& row_ok, const std::vector<char>& col_ok,
                                    KrawtchoukTable::Provenance p, auto&& cell) {
    KrawtchoukTable t;
    t.provenance = p;
    t.k.assign(r + 1, std::vector<Rational>(r + 1, 0));
    for (int i = 0; i <= r; ++i)
        for (int j = 0; j <= r; ++j)
            if (row_ok[i] && col_ok[j]) t.k[i][j] = cell(i, j);
    return t;
}

}  // namespace detail

/// Full table of K(omega_sigma*, omega_sigma): rows are dual weights, columns are weights on G.
/// Entries for unattained weights are 0.
inline KrawtchoukTable krawtchouk_table(const RegularSupport& s) {
    const auto dual = dual_support(s);
    return detail::masked_table(s.rank(), detail::attained(dual.weights(), s.rank()),
                                detail::attained(s.weights(), s.rank()),
                                KrawtchoukTable::Provenance::regular_formula, [&](int i, int j) {
                                    return krawtchouk_regular(s.invariants(), s.gamma(), i, j);
                                });
}

/// Full table of K(omega_sigma, omega_sigma*): rows are weights on G, columns are dual weights.
inline KrawtchoukTable krawtchouk_dual_table(const RegularSupport& s) {
    const auto dual = dual_support(s);
    const Integer order = s.group().order();
    return detail::masked_table(s.rank(), detail::attained(s.weights(), s.rank()),
                                detail::attained(dual.weights(), s.rank()),
                                KrawtchoukTable::Provenance::regular_dual_formula, [&](int i, int j) {
                                    return krawtchouk_regular_dual(s.invariants(), s.gamma(), order, i, j);
                                });
}

/// Evidence that a pair of labelings is not compatible: two elements of the same class
/// whose character sums over one dual class differ.
struct CompatibilityWitness {
    int a = 0;
    int b = 0;
    std::uint64_t g = 0;
    std::uint64_t h = 0;
    CyclotomicSum at_g{1, {0}};
    CyclotomicSum at_h{1, {0}};
    std::string message;
};

/// Exact character-sum table for labels omega on G and tau on the character group.
/// Cell (a, b) is sum over chi with tau(chi) = b of chi(g), for any g with omega(g) = a;
/// every representative g is checked.
struct CompatibilityResult {
    std::vector<std::vector<std::optional<CyclotomicSum>>> sums;  // nullopt where class a is empty
    std::optional<CompatibilityWitness> witness;

    bool compatible() const { return !witness.has_value(); }
};

inline CompatibilityResult compatibility_check(const FiniteAbelianGroup& G, const WeightLabels& omega,
                                               const WeightLabels& tau) {
    if (omega.size() != G.order() || tau.size() != G.order())
        throw InvalidArgument("compatibility_check: labelings must cover the whole group");
    for (int x : omega)
        if (x < 0) throw InvalidArgument("compatibility_check: labels must be nonnegative");
    for (int x : tau)
        if (x < 0) throw InvalidArgument("compatibility_check: labels must be nonnegative");
    const int na = *std::max_element(omega.begin(), omega.end()) + 1;
    const int nb = *std::max_element(tau.begin(), tau.end()) + 1;
    const std::uint32_t N = static_cast<std::uint32_t>(G.exponent());

    CompatibilityResult res;
    res.sums.assign(na, std::vector<std::optional<CyclotomicSum>>(nb));
    std::vector<std::optional<std::uint64_t>> first(na);
    std::vector<std::vector<std::int64_t>> raw(nb, std::vector<std::int64_t>(N));
    for (std::uint64_t g = 0; g < G.order(); ++g) {
        const int a = omega[g];
        for (auto& r : raw) std::fill(r.begin(), r.end(), 0);
        for (std::uint64_t chi = 0; chi < G.order(); ++chi) ++raw[tau[chi]][G.pairing_index(chi, g)];
        for (int b = 0; b < nb; ++b) {
            CyclotomicSum sum = cyclo_reduce(raw[b], N);
            auto& cell = res.sums[a][b];
            if (!cell) {
                cell = std::move(sum);
            } else if (!(*cell == sum)) {
                CompatibilityWitness w{a, b, *first[a], g, *cell, sum, {}};
                w.message = "class " + std::to_string(b) + " sums differ inside weight class " + std::to_string(a) +
                            ": " + cell->str() + " at " + to_string(G.element(*first[a])) + " vs " + sum.str() +
                            " at " + to_string(G.element(g));
                res.witness = std::move(w);
                return res;
            }
        }
        if (!first[a]) first[a] = g;
    }
    return res;
}

namespace detail {

inline KrawtchoukTable oracle_from(const CompatibilityResult& res, int r) {
    if (!res.compatible()) throw ArithmeticInconsistency("incompatible pair: " + res.witness->message);
    KrawtchoukTable t;
    t.provenance = KrawtchoukTable::Provenance::oracle;
    t.k.assign(r + 1, std::vector<Rational>(r + 1, 0));
    for (std::size_t a = 0; a < res.sums.size(); ++a)
        for (std::size_t b = 0; b < res.sums[a].size(); ++b)
            if (res.sums[a][b]) t.k[a][b] = Rational(res.sums[a][b]->integer_value());
    return t;
}

}  // namespace detail

/// Oracle counterpart of krawtchouk_table, evaluated by exact character sums.
inline KrawtchoukTable krawtchouk_oracle(const RegularSupport& s) {
    const auto dual = dual_support(s);
    // The canonical pairing is symmetric, so the characters of the character group are
    // indexed by G itself and the roles of the two labelings simply swap.
    return detail::oracle_from(compatibility_check(s.group(), dual.weights(), s.weights()), s.rank());
}

/// Oracle counterpart of krawtchouk_dual_table.
inline KrawtchoukTable krawtchouk_dual_oracle(const RegularSupport& s) {
    const auto dual = dual_support(s);
    return detail::oracle_from(compatibility_check(s.group(), s.weights(), dual.weights()), s.rank());
}

inline Rational krawtchouk_oracle(const RegularSupport& s, int i, int j) {
    if (i < 0 || j < 0 || i > s.rank() || j > s.rank()) throw InvalidArgument("Krawtchouk index out of range");
    return krawtchouk_oracle(s).at(i, j);
}

/// Maps each class label of `from` to the label of `to` on the same elements.
inline std::map<int, int> label_map(const WeightLabels& from, const WeightLabels& to) {
    if (!weights_equivalent(from, to)) throw InvalidArgument("label_map: labelings induce different partitions");
    std::map<int, int> m;
    for (std::size_t i = 0; i < from.size(); ++i) m[from[i]] = to[i];
    return m;
}

/// Renames row and column indices; the result is sized by the largest new label.
inline KrawtchoukTable relabel_table(const KrawtchoukTable& t, const std::map<int, int>& rows,
                                     const std::map<int, int>& cols) {
    int nr = 0, nc = 0;
    for (auto [o, n] : rows) nr = std::max(nr, n + 1);
    for (auto [o, n] : cols) nc = std::max(nc, n + 1);
    KrawtchoukTable out;
    out.provenance = t.provenance;
    out.k.assign(nr, std::vector<Rational>(nc, 0));
    for (auto [i, ni] : rows)
        for (auto [j, nj] : cols) out.k[ni][nj] = t.at(i, j);
    return out;
}

/// krawtchouk_table / krawtchouk_dual_table renamed by the support's reference weights.
inline KrawtchoukTable reference_table(const RegularSupport& s, bool dual_orientation) {
    const auto& ref = s.reference();
    if (!ref) throw InvalidArgument("support " + s.name() + " has no reference weight");
    const auto dual = dual_support(s);
    const auto g_map = label_map(s.weights(), ref->on_group);
    const auto c_map = label_map(dual.weights(), ref->on_characters);
    return dual_orientation ? relabel_table(krawtchouk_dual_table(s), g_map, c_map)
                            : relabel_table(krawtchouk_table(s), c_map, g_map);
}

/// Dual distribution (1/|C|) sum_a K(a, b) W_a; every entry must be a nonnegative integer.
inline WeightDistribution transform(const WeightDistribution& W, const KrawtchoukTable& K, const Integer& code_size) {
    if (W.counts.size() != K.rows())
        throw InvalidArgument("distribution has " + std::to_string(W.counts.size()) + " entries, table has " +
                              std::to_string(K.rows()) + " rows");
    if (code_size <= 0) throw InvalidArgument("code size must be positive");
    WeightDistribution out{std::vector<Integer>(K.cols(), 0)};
    for (std::size_t b = 0; b < K.cols(); ++b) {
        Rational acc = 0;
        for (std::size_t a = 0; a < K.rows(); ++a) acc += K.at(a, b) * W.counts[a];
        acc /= code_size;
        const Integer v = require_integer(acc, "transformed count W_" + std::to_string(b));
        if (v < 0) throw ArithmeticInconsistency("transformed count W_" + std::to_string(b) + " = " + v.str() + " is negative");
        out.counts[b] = v;
    }
    return out;
}

/// W(C*, omega_sigma*) from W(C, omega_sigma).
inline WeightDistribution macwilliams_forward(const RegularSupport& s, const WeightDistribution& W,
                                              const Integer& code_size) {
    return transform(W, krawtchouk_dual_table(s), code_size);
}

/// W(C, omega_sigma) from W(C*, omega_sigma*), where dual_size = |C*|.
inline WeightDistribution macwilliams_inverse(const RegularSupport& s, const WeightDistribution& W_dual,
                                              const Integer& dual_size) {
    return transform(W_dual, krawtchouk_table(s), dual_size);
}

// ---------------------------------------------------------------------------
// Products and symmetrization

inline Rational product_krawtchouk(const KrawtchoukTable& K, const std::vector<int>& a, const std::vector<int>& b) {
    if (a.size() != b.size()) throw InvalidArgument("product_krawtchouk: index vectors differ in length");
    Rational p = 1;
    for (std::size_t t = 0; t < a.size(); ++t) {
        if (a[t] < 0 || b[t] < 0 || static_cast<std::size_t>(a[t]) >= K.rows() ||
            static_cast<std::size_t>(b[t]) >= K.cols())
            throw InvalidArgument("product_krawtchouk: index out of range");
        p *= K.at(a[t], b[t]);
    }
    return p;
}

using Composition = std::vector<int>;

/// Weight vector sorted ascending with d[i] copies of weight i.
inline std::vector<int> sorted_weights(const Composition& d) {
    std::vector<int> v;
    for (std::size_t i = 0; i < d.size(); ++i) {
        if (d[i] < 0) throw InvalidArgument("composition entries must be nonnegative");
        v.insert(v.end(), d[i], static_cast<int>(i));
    }
    return v;
}

/// sum over b with composition e of prod_t K(a_t, b_t), a = sorted_weights(d).
inline Rational symmetrized_krawtchouk(const KrawtchoukTable& K, const Composition& d, const Composition& e, int n) {
    const auto a = sorted_weights(d);
    auto b = sorted_weights(e);
    if (static_cast<int>(a.size()) != n || static_cast<int>(b.size()) != n)
        throw InvalidArgument("compositions must both sum to n = " + std::to_string(n));
    Rational sum = 0;
    do {
        sum += product_krawtchouk(K, a, b);
    } while (std::next_permutation(b.begin(), b.end()));
    return sum;
}

/// All compositions of n into `parts` nonnegative entries, in lexicographic order.
inline std::vector<Composition> compositions(int n, int parts) {
    std::vector<Composition> out;
    Composition c(parts, 0);
    auto rec = [&](auto&& self, int pos, int left) -> void {
        if (pos == parts - 1) {
            c[pos] = left;
            out.push_back(c);
            return;
        }
        for (int x = 0; x <= left; ++x) {
            c[pos] = x;
            self(self, pos + 1, left - x);
        }
    };
    if (parts > 0) rec(rec, 0, n);
    return out;
}

// ---------------------------------------------------------------------------
// Partitions

/// The partition of the character group induced by the character sums over the blocks of
/// `labels`: chi ~ chi' iff their sums agree on every block. Returned as canonical labels
/// numbered by first occurrence.
inline WeightLabels dual_partition(const FiniteAbelianGroup& G, const WeightLabels& labels) {
    if (labels.size() != G.order()) throw InvalidArgument("dual_partition: labeling must cover the group");
    const int nb = *std::max_element(labels.begin(), labels.end()) + 1;
    const std::uint32_t N = static_cast<std::uint32_t>(G.exponent());
    std::map<std::vector<std::vector<std::int64_t>>, int> classes;
    WeightLabels out(G.order());
    std::vector<std::vector<std::int64_t>> raw(nb, std::vector<std::int64_t>(N));
    for (std::uint64_t chi = 0; chi < G.order(); ++chi) {
        for (auto& r : raw) std::fill(r.begin(), r.end(), 0);
        for (std::uint64_t g = 0; g < G.order(); ++g) ++raw[labels[g]][G.pairing_index(chi, g)];
        std::vector<std::vector<std::int64_t>> key;
        for (const auto& r : raw) key.push_back(cyclo_reduce(r, N).coeffs());
        out[chi] = classes.try_emplace(std::move(key), static_cast<int>(classes.size())).first->second;
    }
    return out;
}

inline bool is_fourier_reflexive(const FiniteAbelianGroup& G, const WeightLabels& labels) {
    return weights_equivalent(dual_partition(G, dual_partition(G, labels)), labels);
}

// ---------------------------------------------------------------------------
// Optimality

/// lhs = sum_{i<=s} W_i(C) mu_>=(s, i); rhs = |C| / gamma*(r-s) sum_{j<=r-s} W_j(C*) mu_<=(s, r-j),
/// with the right side taken from the enumerated dual code.
inline std::pair<Rational, Rational> implicit_identity_residual(const Code& C, const RegularSupport& s, int level) {
    const int r = s.rank();
    if (level < 0 || level > r) throw InvalidArgument("implicit identity level out of range");
    const auto dual = dual_support(s);
    const auto W = weight_distribution(C, s);
    const auto Wd = weight_distribution(dual_code(C), dual);
    const auto& inv = s.invariants();
    Rational lhs = 0, acc = 0;
    for (int i = 0; i <= level; ++i) lhs += W.counts[i] * inv.above(level, i);
    for (int j = 0; j <= r - level; ++j) acc += Wd.counts[j] * inv.below(level, r - j);
    const Rational rhs = acc * Integer(C.size()) / dual.gamma()[r - level];
    return {lhs, rhs};
}

/// |G| / gamma(d - 1) - |C|, where d is the minimum weight of C.
inline Rational singleton_defect(const Code& C, const RegularSupport& s) {
    const int d = min_weight(C, s);
    return Rational(Integer(s.group().order()), s.gamma()[d - 1]) - Integer(C.size());
}

inline bool is_optimal(const Code& C, const RegularSupport& s) { return singleton_defect(C, s) == 0; }

struct DualOptimalityReport {
    int d = 0;
    int d_dual = 0;
    bool dual_optimal = false;
    bool distance_bound = false;  // d_dual >= r - d + 2

    bool holds() const { return dual_optimal && distance_bound; }
};

inline DualOptimalityReport dual_optimality_check(const Code& C, const RegularSupport& s) {
    if (C.is_zero() || C.is_full()) throw InvalidArgument("dual optimality needs a non-trivial code");
    if (!is_optimal(C, s)) throw InvalidArgument("code is not optimal (defect " + to_string(singleton_defect(C, s)) + ")");
    const auto dual = dual_support(s);
    const Code Cd = dual_code(C);
    DualOptimalityReport rep;
    rep.d = min_weight(C, s);
    rep.d_dual = min_weight(Cd, dual);
    rep.dual_optimal = is_optimal(Cd, dual);
    rep.distance_bound = rep.d_dual >= s.rank() - rep.d + 2;
    return rep;
}

/// Weight distribution forced on an optimal code with minimum weight d, by forward
/// substitution in the unit lower-triangular system
/// mu_>=(s,0) + sum_{i=d}^{s} W_i mu_>=(s,i) = |G| mu_<=(s,r) / (gamma(d-1) gamma*(r-s)).
inline WeightDistribution optimal_distribution(const Integer& group_order, const LatticeInvariants& inv,
                                               const std::vector<Integer>& gamma,
                                               const std::vector<Integer>& gamma_dual, int d) {
    const int r = inv.r;
    if (d < 1 || d > r) throw InvalidArgument("minimum weight " + std::to_string(d) + " impossible for rank " + std::to_string(r));
    if (static_cast<int>(gamma.size()) != r + 1 || static_cast<int>(gamma_dual.size()) != r + 1)
        throw InvalidArgument("gamma tables do not match lattice rank");
    WeightDistribution W{std::vector<Integer>(r + 1, 0)};
    W.counts[0] = 1;
    for (int s = d; s <= r; ++s) {
        Rational rhs = Rational(group_order * inv.below(s, r), gamma[d - 1] * gamma_dual[r - s]);
        rhs -= inv.above(s, 0);
        for (int i = d; i < s; ++i) rhs -= W.counts[i] * inv.above(s, i);
        rhs /= inv.above(s, s);
        const Integer v = require_integer(rhs, "optimal W_" + std::to_string(s));
        if (v < 0) throw ArithmeticInconsistency("optimal W_" + std::to_string(s) + " = " + v.str() + " is negative");
        W.counts[s] = v;
    }
    return W;
}

inline WeightDistribution optimal_distribution(const RegularSupport& s, int d) {
    return optimal_distribution(s.group().order(), s.invariants(), s.gamma(), dual_support(s).gamma(), d);
}

}  // namespace latmw
