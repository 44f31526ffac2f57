#pragma once

#include "latmw/common.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace latmw {

/// GF(q) for q prime, or q in {4, 8, 9} via a fixed irreducible polynomial.
/// Elements are integers in [0, q) whose base-p digits are polynomial coefficients,
/// so the additive group is Z_p^e with digit i as coordinate i.
class GaloisField {
public:
    explicit GaloisField(std::uint32_t q) : q_(q) {
        if (q < 2) throw InvalidArgument("field order must be >= 2");
        if (is_prime(q)) {
            p_ = q;
            e_ = 1;
        } else {
            // x^2+x+1 over F_2, x^3+x+1 over F_2, x^2+1 over F_3 (low-degree coefficients first).
            if (q == 4) {
                p_ = 2;
                e_ = 2;
                modulus_ = {1, 1, 1};
            } else if (q == 8) {
                p_ = 2;
                e_ = 3;
                modulus_ = {1, 1, 0, 1};
            } else if (q == 9) {
                p_ = 3;
                e_ = 2;
                modulus_ = {1, 0, 1};
            } else {
                throw InvalidArgument("unsupported field order " + std::to_string(q));
            }
        }
        add_.assign(q_ * q_, 0);
        mul_.assign(q_ * q_, 0);
        for (std::uint32_t a = 0; a < q_; ++a)
            for (std::uint32_t b = 0; b < q_; ++b) {
                add_[a * q_ + b] = slow_add(a, b);
                mul_[a * q_ + b] = slow_mul(a, b);
            }
        neg_.assign(q_, 0);
        inv_.assign(q_, 0);
        for (std::uint32_t a = 0; a < q_; ++a)
            for (std::uint32_t b = 0; b < q_; ++b) {
                if (add(a, b) == 0) neg_[a] = b;
                if (mul(a, b) == 1) inv_[a] = b;
            }
    }

    std::uint32_t order() const noexcept { return q_; }
    std::uint32_t characteristic() const noexcept { return p_; }
    std::uint32_t degree() const noexcept { return e_; }

    std::uint32_t add(std::uint32_t a, std::uint32_t b) const { return add_[a * q_ + b]; }
    std::uint32_t sub(std::uint32_t a, std::uint32_t b) const { return add(a, neg_[b]); }
    std::uint32_t neg(std::uint32_t a) const { return neg_[a]; }
    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const { return mul_[a * q_ + b]; }
    std::uint32_t inv(std::uint32_t a) const {
        if (a == 0) throw InvalidArgument("inverse of zero");
        return inv_[a];
    }

    static bool is_prime(std::uint32_t n) {
        if (n < 2) return false;
        for (std::uint32_t d = 2; d * d <= n; ++d)
            if (n % d == 0) return false;
        return true;
    }

    /// Prime powers this class can instantiate.
    static bool supported(std::uint32_t q) { return is_prime(q) || q == 4 || q == 8 || q == 9; }

private:
    std::vector<std::uint32_t> digits(std::uint32_t a) const {
        std::vector<std::uint32_t> d(e_);
        for (std::uint32_t i = 0; i < e_; ++i, a /= p_) d[i] = a % p_;
        return d;
    }
    std::uint32_t from_digits(const std::vector<std::uint32_t>& d) const {
        std::uint32_t a = 0;
        for (std::uint32_t i = e_; i-- > 0;) a = a * p_ + d[i];
        return a;
    }
    std::uint32_t slow_add(std::uint32_t a, std::uint32_t b) const {
        auto x = digits(a), y = digits(b);
        for (std::uint32_t i = 0; i < e_; ++i) x[i] = (x[i] + y[i]) % p_;
        return from_digits(x);
    }
    std::uint32_t slow_mul(std::uint32_t a, std::uint32_t b) const {
        if (e_ == 1) return static_cast<std::uint32_t>(std::uint64_t{a} * b % p_);
        auto x = digits(a), y = digits(b);
        std::vector<std::uint32_t> prod(2 * e_ - 1, 0);
        for (std::uint32_t i = 0; i < e_; ++i)
            for (std::uint32_t j = 0; j < e_; ++j) prod[i + j] = (prod[i + j] + x[i] * y[j]) % p_;
        // modulus_ is monic of degree e_
        for (std::size_t k = prod.size(); k-- > e_;) {
            const std::uint32_t c = prod[k];
            if (c == 0) continue;
            for (std::uint32_t i = 0; i <= e_; ++i)
                prod[k - e_ + i] = (prod[k - e_ + i] + (p_ - c) * modulus_[i]) % p_;
        }
        prod.resize(e_);
        return from_digits(prod);
    }

    std::uint32_t q_, p_ = 0, e_ = 0;
    std::vector<std::uint32_t> modulus_;
    std::vector<std::uint32_t> add_, mul_, neg_, inv_;
};

/// Dense row-major matrix over a GaloisField.
struct FieldMatrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<std::uint32_t> data;

    FieldMatrix() = default;
    FieldMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c, 0) {}

    std::uint32_t& at(std::size_t r, std::size_t c) { return data[r * cols + c]; }
    std::uint32_t at(std::size_t r, std::size_t c) const { return data[r * cols + c]; }

    FieldMatrix transposed() const {
        FieldMatrix t(cols, rows);
        for (std::size_t r = 0; r < rows; ++r)
            for (std::size_t c = 0; c < cols; ++c) t.at(c, r) = at(r, c);
        return t;
    }

    bool operator==(const FieldMatrix&) const = default;
    auto operator<=>(const FieldMatrix&) const = default;
};

/// Reduced row echelon form in place; returns the rank. Zero rows end up at the bottom.
inline std::size_t row_reduce(const GaloisField& F, FieldMatrix& M) {
    std::size_t rank = 0;
    for (std::size_t c = 0; c < M.cols && rank < M.rows; ++c) {
        std::size_t pivot = rank;
        while (pivot < M.rows && M.at(pivot, c) == 0) ++pivot;
        if (pivot == M.rows) continue;
        if (pivot != rank)
            for (std::size_t k = 0; k < M.cols; ++k) std::swap(M.at(pivot, k), M.at(rank, k));
        const std::uint32_t inv = F.inv(M.at(rank, c));
        for (std::size_t k = 0; k < M.cols; ++k) M.at(rank, k) = F.mul(M.at(rank, k), inv);
        for (std::size_t r = 0; r < M.rows; ++r) {
            if (r == rank || M.at(r, c) == 0) continue;
            const std::uint32_t f = M.at(r, c);
            for (std::size_t k = 0; k < M.cols; ++k) M.at(r, k) = F.sub(M.at(r, k), F.mul(f, M.at(rank, k)));
        }
        ++rank;
    }
    return rank;
}

inline std::size_t matrix_rank(const GaloisField& F, FieldMatrix M) { return row_reduce(F, M); }

/// Canonical basis (nonzero RREF rows) of the row space.
inline FieldMatrix row_space_basis(const GaloisField& F, FieldMatrix M) {
    const std::size_t r = row_reduce(F, M);
    FieldMatrix out(r, M.cols);
    std::copy(M.data.begin(), M.data.begin() + static_cast<std::ptrdiff_t>(r * M.cols), out.data.begin());
    return out;
}

}  // namespace latmw
