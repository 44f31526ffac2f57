#pragma once

#include "latmw/common.hpp"

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <shared_mutex>
#include <span>
#include <string>
#include <vector>

namespace latmw {

namespace detail {

using Poly = std::vector<std::int64_t>;  // coefficients, lowest degree first

// Exact quotient of a by monic b; throws if the division leaves a remainder.
inline Poly exact_divide(Poly a, const Poly& b) {
    const std::size_t db = b.size() - 1;
    if (a.size() < b.size()) throw ArithmeticInconsistency("cyclotomic division: degree too small");
    Poly q(a.size() - db, 0);
    for (std::size_t k = a.size(); k-- > db;) {
        const std::int64_t c = a[k];
        q[k - db] = c;
        if (c == 0) continue;
        for (std::size_t i = 0; i <= db; ++i) a[k - db + i] -= c * b[i];
    }
    for (std::size_t i = 0; i < db; ++i)
        if (a[i] != 0) throw ArithmeticInconsistency("cyclotomic division left a remainder");
    return q;
}

class CyclotomicCache {
public:
    static CyclotomicCache& instance() {
        static CyclotomicCache cache;
        return cache;
    }

    std::shared_ptr<const Poly> get(std::uint32_t n) {
        {
            std::shared_lock lock(mutex_);
            if (auto it = table_.find(n); it != table_.end()) return it->second;
        }
        // x^n - 1 divided by every Phi_d for proper divisors d of n.
        Poly p(n + 1, 0);
        p[0] = -1;
        p[n] = 1;
        for (std::uint32_t d = 1; d < n; ++d)
            if (n % d == 0) p = exact_divide(std::move(p), *get(d));
        auto shared = std::make_shared<const Poly>(std::move(p));
        std::unique_lock lock(mutex_);
        return table_.try_emplace(n, shared).first->second;
    }

private:
    std::shared_mutex mutex_;
    std::map<std::uint32_t, std::shared_ptr<const Poly>> table_;
};

}  // namespace detail

/// Coefficients of the n-th cyclotomic polynomial, lowest degree first. Memoized, thread safe.
inline std::vector<std::int64_t> cyclotomic_polynomial(std::uint32_t n) {
    if (n == 0) throw InvalidArgument("cyclotomic_polynomial: n must be >= 1");
    return *detail::CyclotomicCache::instance().get(n);
}

/// A sum of N-th roots of unity, held as its canonical residue modulo Phi_N
/// (a polynomial in zeta_N of degree < phi(N)).
class CyclotomicSum {
public:
    CyclotomicSum(std::uint32_t root_order, std::vector<std::int64_t> residue)
        : n_(root_order), coeffs_(std::move(residue)) {}

    std::uint32_t root_order() const noexcept { return n_; }
    const std::vector<std::int64_t>& coeffs() const noexcept { return coeffs_; }

    bool is_integer() const {
        for (std::size_t i = 1; i < coeffs_.size(); ++i)
            if (coeffs_[i] != 0) return false;
        return true;
    }
    std::int64_t integer_value() const {
        if (!is_integer()) throw ArithmeticInconsistency("character sum " + str() + " is not a rational integer");
        return coeffs_.empty() ? 0 : coeffs_[0];
    }

    bool operator==(const CyclotomicSum& o) const { return n_ == o.n_ && coeffs_ == o.coeffs_; }

    std::string str() const {
        if (is_integer()) return std::to_string(coeffs_.empty() ? 0 : coeffs_[0]);
        std::string s;
        for (std::size_t i = 0; i < coeffs_.size(); ++i) {
            if (coeffs_[i] == 0) continue;
            if (!s.empty()) s += coeffs_[i] > 0 ? " + " : " - ";
            else if (coeffs_[i] < 0) s += "-";
            const auto a = coeffs_[i] < 0 ? -coeffs_[i] : coeffs_[i];
            if (i == 0 || a != 1) s += std::to_string(a);
            if (i > 0) s += (i == 1 ? "z" : "z^" + std::to_string(i));
        }
        return s + " (z = zeta_" + std::to_string(n_) + ")";
    }

private:
    std::uint32_t n_;
    std::vector<std::int64_t> coeffs_;
};

/// raw[j] is the multiplicity of zeta_N^j; the result is reduced modulo Phi_N.
inline CyclotomicSum cyclo_reduce(std::span<const std::int64_t> raw, std::uint32_t n) {
    if (n == 0 || raw.size() != n) throw InvalidArgument("cyclo_reduce: raw vector must have length N >= 1");
    const auto phi = detail::CyclotomicCache::instance().get(n);
    const std::size_t deg = phi->size() - 1;
    std::vector<std::int64_t> r(raw.begin(), raw.end());
    for (std::size_t k = r.size(); k-- > deg;) {
        const std::int64_t c = r[k];
        if (c == 0) continue;
        for (std::size_t i = 0; i <= deg; ++i) r[k - deg + i] -= c * (*phi)[i];
    }
    r.resize(deg);
    return CyclotomicSum(n, std::move(r));
}

}  // namespace latmw
