#pragma once

#include "latmw/common.hpp"
#include "latmw/finite_field.hpp"

#include <algorithm>
#include <cstdint>
#include <set>
#include <string>
#include <thread>
#include <utility>
#include <vector>

namespace latmw {

/// k x m matrices over F_q with 1 <= k <= m.
struct MatrixSpaceParams {
    std::uint32_t q = 2;
    int k = 1;
    int m = 1;

    void validate() const {
        if (!GaloisField::supported(q)) throw InvalidArgument("unsupported field order " + std::to_string(q));
        if (k < 1 || m < 1) throw InvalidArgument("matrix dimensions must be >= 1");
        if (k > m) throw InvalidArgument("expected k <= m (transpose the problem otherwise)");
    }
};

/// Linear constraint defining the code whose rank distribution is counted.
/// Positions are 0-based (row, column) pairs.
struct ConstraintSpec {
    enum class Kind { none, kernel, sum_zero, zero_block, zero_diagonal, symmetric, skew_symmetric };

    Kind kind = Kind::none;
    std::vector<std::pair<int, int>> indices;  // sum_zero: summed entries
    std::vector<int> diagonal;                 // zero_diagonal: diagonal positions forced to 0
    int block_rows = 0;                        // zero_block: top-left block forced to 0
    int block_cols = 0;
    FieldMatrix functional;                    // kernel: M with sum_{r,c} A_rc M_rc = 0

    static ConstraintSpec none() { return {}; }
    static ConstraintSpec sum_zero(std::vector<std::pair<int, int>> I) {
        ConstraintSpec c;
        c.kind = Kind::sum_zero;
        c.indices = std::move(I);
        return c;
    }
    static ConstraintSpec kernel(FieldMatrix A) {
        ConstraintSpec c;
        c.kind = Kind::kernel;
        c.functional = std::move(A);
        return c;
    }
    static ConstraintSpec zero_block(int rows, int cols) {
        ConstraintSpec c;
        c.kind = Kind::zero_block;
        c.block_rows = rows;
        c.block_cols = cols;
        return c;
    }
    static ConstraintSpec zero_diagonal(std::vector<int> I) {
        ConstraintSpec c;
        c.kind = Kind::zero_diagonal;
        c.diagonal = std::move(I);
        return c;
    }
    static ConstraintSpec symmetric() {
        ConstraintSpec c;
        c.kind = Kind::symmetric;
        return c;
    }
    static ConstraintSpec skew_symmetric() {
        ConstraintSpec c;
        c.kind = Kind::skew_symmetric;
        return c;
    }

    void validate(const MatrixSpaceParams& p) const {
        switch (kind) {
            case Kind::none:
                break;
            case Kind::kernel:
                if (static_cast<int>(functional.rows) != p.k || static_cast<int>(functional.cols) != p.m)
                    throw InvalidArgument("functional matrix must be k x m");
                for (auto v : functional.data)
                    if (v >= p.q) throw InvalidArgument("functional entry outside F_q");
                break;
            case Kind::sum_zero: {
                if (indices.empty()) throw InvalidArgument("sum_zero needs a nonempty index set");
                std::set<std::pair<int, int>> seen;
                for (auto [r, c] : indices) {
                    if (r < 0 || r >= p.k || c < 0 || c >= p.m) throw InvalidArgument("sum_zero index out of range");
                    if (!seen.insert({r, c}).second) throw InvalidArgument("sum_zero index repeated");
                }
                break;
            }
            case Kind::zero_block:
                if (block_rows < 1 || block_rows > p.k || block_cols < 1 || block_cols > p.m)
                    throw InvalidArgument("zero block must satisfy 1 <= k' <= k and 1 <= m' <= m");
                break;
            case Kind::zero_diagonal: {
                std::set<int> seen;
                for (int s : diagonal) {
                    if (s < 0 || s >= p.k) throw InvalidArgument("diagonal position out of range");
                    if (!seen.insert(s).second) throw InvalidArgument("diagonal position repeated");
                }
                break;
            }
            case Kind::symmetric:
            case Kind::skew_symmetric:
                if (p.k != p.m) throw InvalidArgument("symmetric constraints need square matrices");
                break;
        }
    }

    std::string describe() const {
        switch (kind) {
            case Kind::none: return "none";
            case Kind::kernel: return "kernel";
            case Kind::sum_zero: return "sum_zero";
            case Kind::zero_block: return "zero_block";
            case Kind::zero_diagonal: return "zero_diagonal";
            case Kind::symmetric: return "symmetric";
            case Kind::skew_symmetric: return "skew_symmetric";
        }
        return "?";
    }
};

namespace detail {

inline Integer qpow(std::uint64_t q, std::int64_t e) {
    if (e < 0) throw InvalidArgument("negative exponent");
    return ipow(Integer(q), static_cast<std::uint64_t>(e));
}

// (-1)^(j-s) q^(m s + C(j-s, 2)) [k-s, k-j]_q; zero whenever s > j.
inline Integer kkr_prefix(std::uint64_t q, int k, int m, int s, int j) {
    if (s > j) return 0;
    Integer v = qpow(q, static_cast<std::int64_t>(m) * s + choose2(j - s)) * q_binomial(k - s, k - j, q);
    return (j - s) % 2 == 0 ? v : Integer(-v);
}

inline Integer exact_quotient(const Integer& num, const Integer& den, const std::string& what) {
    return require_integer(Rational(num, den), what);
}

}  // namespace detail

/// Number of k x m matrices over F_q of rank i: [m, i]_q prod_{u<i} (q^k - q^u).
inline Integer count_rank(std::uint64_t q, int k, int m, int i) {
    if (i < 0 || i > std::min(k, m)) return 0;
    Integer v = q_binomial(m, i, q);
    for (int u = 0; u < i; ++u) v *= detail::qpow(q, k) - detail::qpow(q, u);
    return v;
}

/// Rank-metric Krawtchouk coefficient sum_s (-1)^(j-s) q^(ms + C(j-s,2)) [k-s, k-j] [k-i, s].
inline Integer rank_krawtchouk(std::uint64_t q, int k, int m, int i, int j) {
    if (i < 0 || j < 0 || i > k || j > k) throw InvalidArgument("rank Krawtchouk index out of range");
    Integer sum = 0;
    for (int s = 0; s <= k; ++s) sum += detail::kkr_prefix(q, k, m, s, j) * q_binomial(k - i, s, q);
    return sum;
}

/// Rank distribution of the trace dual: (1/|C|) sum_i K(i, j) W_i.
inline std::vector<Integer> rank_transform(const std::vector<Integer>& W, std::uint64_t q, int k, int m,
                                           const Integer& code_size) {
    if (static_cast<int>(W.size()) != k + 1) throw InvalidArgument("rank distribution must have k+1 entries");
    std::vector<Integer> out(k + 1);
    for (int j = 0; j <= k; ++j) {
        Integer acc = 0;
        for (int i = 0; i <= k; ++i) acc += rank_krawtchouk(q, k, m, i, j) * W[i];
        out[j] = detail::exact_quotient(acc, code_size, "dual rank count W_" + std::to_string(j));
        if (out[j] < 0) throw ArithmeticInconsistency("dual rank count W_" + std::to_string(j) + " is negative");
    }
    return out;
}

/// Rank-j matrices in the kernel of a nonzero linear functional whose defining matrix has rank R_f.
inline Integer count_kernel_rank(std::uint64_t q, int k, int m, int rf, int j) {
    if (rf < 1 || rf > k) throw InvalidArgument("functional rank must satisfy 1 <= R_f <= k");
    if (j < 0 || j > k) return 0;
    Integer sum = 0;
    for (int s = 0; s <= k; ++s)
        sum += detail::kkr_prefix(q, k, m, s, j) *
               (q_binomial(k, s, q) + Integer(q - 1) * q_binomial(k - rf, s, q));
    return detail::exact_quotient(sum, q, "kernel rank count");
}

/// The k x m 0/1 matrix with ones exactly on I.
inline FieldMatrix indicator_matrix(int k, int m, const std::vector<std::pair<int, int>>& I) {
    FieldMatrix M(k, m);
    for (auto [r, c] : I) M.at(r, c) = 1;
    return M;
}

/// Rank-j matrices whose entries on I sum to zero.
inline Integer count_index_sum_zero(std::uint64_t q, int k, int m, const std::vector<std::pair<int, int>>& I, int j) {
    if (I.empty()) throw InvalidArgument("index set must be nonempty");
    const GaloisField F(static_cast<std::uint32_t>(q));
    const auto rf = static_cast<int>(matrix_rank(F, indicator_matrix(k, m, I)));
    return count_kernel_rank(q, k, m, rf, j);
}

/// Rank-j matrices vanishing on a fixed k' x m' block.
inline Integer count_zero_block(std::uint64_t q, int k, int m, int kb, int mb, int j) {
    if (kb < 1 || kb > k || mb < 1 || mb > m) throw InvalidArgument("block must satisfy 1 <= k' <= k, 1 <= m' <= m");
    if (j < 0 || j > k) return 0;
    Integer sum = 0;
    for (int i = 0; i <= std::min(kb, mb); ++i) {
        Integer w = q_binomial(mb, i, q);
        for (int u = 0; u < i; ++u) w *= detail::qpow(q, kb) - detail::qpow(q, u);
        sum += w * rank_krawtchouk(q, k, m, i, j);
    }
    return detail::exact_quotient(sum, detail::qpow(q, static_cast<std::int64_t>(kb) * mb), "zero block count");
}

/// Rank-j matrices vanishing on |I| prescribed diagonal positions.
inline Integer count_zero_diagonal(std::uint64_t q, int k, int m, int diag, int j) {
    if (diag < 0 || diag > k) throw InvalidArgument("number of diagonal positions must be in [0, k]");
    if (j < 0 || j > k) return 0;
    Integer sum = 0;
    for (int i = 0; i <= diag; ++i)
        sum += binomial(diag, i) * ipow(Integer(q - 1), i) * rank_krawtchouk(q, k, m, i, j);
    return detail::exact_quotient(sum, detail::qpow(q, diag), "zero diagonal count");
}

/// Symmetric k x k matrices of rank i.
inline Integer count_symmetric(std::uint64_t q, int k, int i) {
    if (i < 0 || i > k) return 0;
    Integer sum = 0;
    for (int s = 0; s <= i; ++s) {
        Integer t = detail::qpow(q, choose2(s + 1) + choose2(i - s)) * q_binomial(i, s, q);
        sum += (i - s) % 2 == 0 ? t : Integer(-t);
    }
    return q_binomial(k, i, q) * sum;
}

/// Skew-symmetric (zero diagonal, M_ij = -M_ji) k x k matrices of rank i.
inline Integer count_skew(std::uint64_t q, int k, int i) {
    if (i < 0 || i > k) return 0;
    Integer sum = 0;
    for (int s = 0; s <= i; ++s) {
        Integer t = detail::qpow(q, choose2(s) + choose2(i - s)) * q_binomial(i, s, q);
        sum += (i - s) % 2 == 0 ? t : Integer(-t);
    }
    return q_binomial(k, i, q) * sum;
}

struct SymSkewReport {
    std::uint64_t q = 0;
    int k = 0;
    std::vector<Integer> lhs;   // W_j(Sym)
    std::vector<Rational> rhs;  // q^{-C(k,2)} sum_i W_i(sSym) K(i, j)

    bool holds() const {
        for (std::size_t j = 0; j < lhs.size(); ++j)
            if (Rational(lhs[j]) != rhs[j]) return false;
        return true;
    }
};

/// Evaluates both sides of the symmetric / skew-symmetric MacWilliams relation.
inline SymSkewReport sym_skew_identity_check(std::uint64_t q, int k) {
    if (k < 1) throw InvalidArgument("k must be >= 1");
    SymSkewReport rep{q, k, {}, {}};
    const Integer scale = detail::qpow(q, choose2(k));
    for (int j = 0; j <= k; ++j) {
        rep.lhs.push_back(count_symmetric(q, k, j));
        Integer acc = 0;
        for (int i = 0; i <= k; ++i) acc += count_skew(q, k, i) * rank_krawtchouk(q, k, k, i, j);
        rep.rhs.emplace_back(acc, scale);
    }
    return rep;
}

/// Closed-form count of rank-j matrices satisfying the constraint.
inline Integer closed_form_count(const MatrixSpaceParams& p, const ConstraintSpec& c, int j) {
    p.validate();
    c.validate(p);
    using K = ConstraintSpec::Kind;
    switch (c.kind) {
        case K::none:
            return count_rank(p.q, p.k, p.m, j);
        case K::kernel: {
            const GaloisField F(p.q);
            const auto rf = static_cast<int>(matrix_rank(F, c.functional));
            if (rf == 0) return count_rank(p.q, p.k, p.m, j);
            return count_kernel_rank(p.q, p.k, p.m, rf, j);
        }
        case K::sum_zero:
            return count_index_sum_zero(p.q, p.k, p.m, c.indices, j);
        case K::zero_block:
            return count_zero_block(p.q, p.k, p.m, c.block_rows, c.block_cols, j);
        case K::zero_diagonal:
            return count_zero_diagonal(p.q, p.k, p.m, static_cast<int>(c.diagonal.size()), j);
        case K::symmetric:
            return count_symmetric(p.q, p.k, j);
        case K::skew_symmetric:
            return count_skew(p.q, p.k, j);
    }
    throw InvalidArgument("unknown constraint");
}

namespace detail {

inline bool satisfies(const GaloisField& F, const FieldMatrix& M, const ConstraintSpec& c) {
    using K = ConstraintSpec::Kind;
    switch (c.kind) {
        case K::none:
            return true;
        case K::kernel: {
            std::uint32_t acc = 0;
            for (std::size_t t = 0; t < M.data.size(); ++t) acc = F.add(acc, F.mul(c.functional.data[t], M.data[t]));
            return acc == 0;
        }
        case K::sum_zero: {
            std::uint32_t acc = 0;
            for (auto [r, col] : c.indices) acc = F.add(acc, M.at(r, col));
            return acc == 0;
        }
        case K::zero_block:
            for (int r = 0; r < c.block_rows; ++r)
                for (int col = 0; col < c.block_cols; ++col)
                    if (M.at(r, col) != 0) return false;
            return true;
        case K::zero_diagonal:
            for (int s : c.diagonal)
                if (M.at(s, s) != 0) return false;
            return true;
        case K::symmetric:
            for (std::size_t r = 0; r < M.rows; ++r)
                for (std::size_t col = r + 1; col < M.cols; ++col)
                    if (M.at(r, col) != M.at(col, r)) return false;
            return true;
        case K::skew_symmetric:
            for (std::size_t r = 0; r < M.rows; ++r) {
                if (M.at(r, r) != 0) return false;
                for (std::size_t col = r + 1; col < M.cols; ++col)
                    if (M.at(r, col) != F.neg(M.at(col, r))) return false;
            }
            return true;
    }
    return false;
}

}  // namespace detail

/// Default enumeration cap for brute_force_count.
inline constexpr std::uint64_t kBruteForceCap = std::uint64_t{1} << 20;

/// Rank distribution (index = rank) of all matrices satisfying the constraint, by enumeration.
/// The matrix space is split into contiguous index ranges across worker threads.
inline std::vector<Integer> brute_force_distribution(const MatrixSpaceParams& p, const ConstraintSpec& c,
                                                     std::uint64_t cap = kBruteForceCap, unsigned workers = 0) {
    p.validate();
    c.validate(p);
    const std::uint64_t cells = static_cast<std::uint64_t>(p.k) * p.m;
    std::uint64_t total = 1;
    for (std::uint64_t t = 0; t < cells; ++t) {
        total *= p.q;
        if (total > cap) throw CapExceeded("q^(km) exceeds the enumeration cap of " + std::to_string(cap));
    }
    const GaloisField F(p.q);
    if (workers == 0) workers = std::max(1u, std::min(8u, std::thread::hardware_concurrency()));
    workers = static_cast<unsigned>(std::min<std::uint64_t>(workers, total));

    std::vector<std::vector<std::uint64_t>> partial(workers, std::vector<std::uint64_t>(p.k + 1, 0));
    auto work = [&](unsigned w) {
        const std::uint64_t lo = total * w / workers, hi = total * (w + 1) / workers;
        FieldMatrix M(p.k, p.m), scratch;
        for (std::uint64_t idx = lo; idx < hi; ++idx) {
            std::uint64_t x = idx;
            for (auto& v : M.data) {
                v = static_cast<std::uint32_t>(x % p.q);
                x /= p.q;
            }
            if (!detail::satisfies(F, M, c)) continue;
            scratch = M;
            ++partial[w][row_reduce(F, scratch)];
        }
    };
    std::vector<std::thread> pool;
    for (unsigned w = 1; w < workers; ++w) pool.emplace_back(work, w);
    work(0);
    for (auto& t : pool) t.join();

    std::vector<Integer> dist(p.k + 1, 0);
    for (const auto& part : partial)
        for (int j = 0; j <= p.k; ++j) dist[j] += part[j];
    return dist;
}

inline Integer brute_force_count(const MatrixSpaceParams& p, const ConstraintSpec& c, int j,
                                 std::uint64_t cap = kBruteForceCap) {
    if (j < 0 || j > p.k) {
        p.validate();
        return 0;
    }
    return brute_force_distribution(p, c, cap)[j];
}

}  // namespace latmw
