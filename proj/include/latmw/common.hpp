#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace latmw {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed parameters or inputs (shape mismatch, out-of-range index, unknown family).
class InvalidArgument : public Error {
public:
    using Error::Error;
};

/// A support map breaks one of the regular-support axioms.
class AxiomViolation : public Error {
public:
    AxiomViolation(char axiom, const std::string& witness)
        : Error(std::string("axiom (") + axiom + ") violated: " + witness), axiom_(axiom), witness_(witness) {}
    char axiom() const noexcept { return axiom_; }
    const std::string& witness() const noexcept { return witness_; }

private:
    char axiom_;
    std::string witness_;
};

/// A lattice is not graded or not regular.
class LatticeIrregular : public Error {
public:
    using Error::Error;
};

/// A quantity that must be a (nonnegative) integer is not, or two exact routes disagree.
class ArithmeticInconsistency : public Error {
public:
    using Error::Error;
};

/// Enumeration domain larger than the configured desk-scale cap.
class CapExceeded : public Error {
public:
    using Error::Error;
};

inline std::string to_string(const Integer& v) { return v.str(); }

/// Exact decimal form, "p/q" for non-integers.
inline std::string to_string(const Rational& v) {
    const Integer num = boost::multiprecision::numerator(v);
    const Integer den = boost::multiprecision::denominator(v);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

inline bool is_integer(const Rational& v) { return boost::multiprecision::denominator(v) == 1; }

/// Numerator of an integral rational; throws ArithmeticInconsistency otherwise.
inline Integer require_integer(const Rational& v, const std::string& what) {
    if (!is_integer(v)) throw ArithmeticInconsistency(what + " is not an integer: " + to_string(v));
    return boost::multiprecision::numerator(v);
}

inline Integer ipow(const Integer& base, std::uint64_t exp) {
    return boost::multiprecision::pow(base, static_cast<unsigned>(exp));
}

/// Binomial coefficient, zero outside 0 <= b <= a.
inline Integer binomial(std::int64_t a, std::int64_t b) {
    if (b < 0 || a < 0 || b > a) return 0;
    if (b > a - b) b = a - b;
    Integer r = 1;
    for (std::int64_t i = 1; i <= b; ++i) {
        r *= a - b + i;
        r /= i;
    }
    return r;
}

/// binom(x, 2) = x(x-1)/2 for any integer x (negative arguments included).
inline std::int64_t choose2(std::int64_t x) { return x * (x - 1) / 2; }

/// Gaussian binomial [a b]_q, zero outside 0 <= b <= a.
inline Integer q_binomial(std::int64_t a, std::int64_t b, std::uint64_t q) {
    if (b < 0 || a < 0 || b > a) return 0;
    Integer num = 1;
    Integer den = 1;
    const Integer Q = q;
    for (std::int64_t i = 0; i < b; ++i) {
        num *= ipow(Q, static_cast<std::uint64_t>(a - i)) - 1;
        den *= ipow(Q, static_cast<std::uint64_t>(i + 1)) - 1;
    }
    return num / den;
}

/// (-1)^e * q^x for x >= 0, as an exact rational.
inline Rational signed_power(std::int64_t sign_exp, const Integer& q, std::int64_t exp) {
    Rational v = exp >= 0 ? Rational(ipow(q, static_cast<std::uint64_t>(exp)))
                          : Rational(1, ipow(q, static_cast<std::uint64_t>(-exp)));
    return (sign_exp % 2 == 0) ? v : -v;
}

}  // namespace latmw
