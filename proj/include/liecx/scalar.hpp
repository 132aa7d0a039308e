#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace liecx {

/// Arbitrary-precision rational scalar. Always stored in canonical form
/// (reduced fraction, positive denominator) by the backend.
using Rational = boost::multiprecision::cpp_rational;

/// Backend properties shared by all generic code. Two instantiations:
/// exact rationals and 64-bit floats with relative tolerance eps.
template <class K>
struct scalar_traits;

template <>
struct scalar_traits<Rational> {
    static constexpr bool exact = true;

    static bool is_zero(const Rational& a) { return a.is_zero(); }
    static bool near(const Rational& a, const Rational& b) { return a == b; }
    static Rational abs(const Rational& a) { return a < 0 ? Rational(-a) : a; }
    static double to_double(const Rational& a) { return a.convert_to<double>(); }
    static Rational of(long long num, long long den = 1) { return Rational(num, den); }
};

template <>
struct scalar_traits<double> {
    static constexpr bool exact = false;
    /// Comparison tolerance: equality means |a-b| <= eps * max(1, |a|, |b|).
    static constexpr double eps = 1e-9;

    static bool is_zero(double a) { return std::fabs(a) <= eps; }
    static bool near(double a, double b) {
        double scale = std::max({1.0, std::fabs(a), std::fabs(b)});
        return std::fabs(a - b) <= eps * scale;
    }
    static double abs(double a) { return std::fabs(a); }
    static double to_double(double a) { return a; }
    static double of(long long num, long long den = 1) {
        return static_cast<double>(num) / static_cast<double>(den);
    }
};

template <class K>
concept ScalarField = requires(const K& a, const K& b) {
    { scalar_traits<K>::is_zero(a) } -> std::convertible_to<bool>;
    { scalar_traits<K>::near(a, b) } -> std::convertible_to<bool>;
    { scalar_traits<K>::abs(a) } -> std::convertible_to<K>;
    { scalar_traits<K>::to_double(a) } -> std::convertible_to<double>;
};

/// Renders a rational as "p" or "p/q" (the JSON wire format).
inline std::string to_string(const Rational& a) {
    if (denominator(a) == 1) return numerator(a).str();
    return numerator(a).str() + "/" + denominator(a).str();
}

/// Parses "p" or "p/q". Throws std::invalid_argument on malformed input.
inline Rational rational_from_string(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty rational literal");
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos)
            return Rational(boost::multiprecision::cpp_int(s));
        boost::multiprecision::cpp_int num(s.substr(0, slash));
        boost::multiprecision::cpp_int den(s.substr(slash + 1));
        if (den == 0) throw std::invalid_argument("zero denominator");
        return Rational(num, den);
    } catch (const std::runtime_error& e) {
        throw std::invalid_argument("malformed rational literal '" + s + "'");
    }
}

template <class K>
K scalar_from_rational(const Rational& r);

template <>
inline Rational scalar_from_rational<Rational>(const Rational& r) { return r; }

template <>
inline double scalar_from_rational<double>(const Rational& r) {
    return scalar_traits<Rational>::to_double(r);
}

}  // namespace liecx
