#pragma once

// Scalar backends. Every algebraic object in the library is templated on one
// of two fields: exact rationals over GMP integers, or IEEE binary64.

#include <gmpxx.h>

#include <cmath>
#include <concepts>
#include <string>
#include <string_view>

namespace hypersob {

using Rational = mpq_class;

template <class T>
struct scalar_traits;

template <>
struct scalar_traits<Rational> {
    static constexpr bool exact = true;
    static constexpr std::string_view name = "rational";
};

template <>
struct scalar_traits<double> {
    static constexpr bool exact = false;
    static constexpr std::string_view name = "float64";
};

template <class T>
concept Scalar = requires {
    { scalar_traits<T>::exact } -> std::convertible_to<bool>;
};

template <Scalar T>
inline constexpr bool is_exact_v = scalar_traits<T>::exact;

inline double to_double(const Rational& r) { return r.get_d(); }
inline double to_double(double x) { return x; }

inline bool is_zero(const Rational& r) { return sgn(r) == 0; }
inline bool is_zero(double x) { return x == 0.0; }

inline int sign(const Rational& r) { return sgn(r); }
inline int sign(double x) { return (x > 0.0) - (x < 0.0); }

inline Rational abs_value(const Rational& r) { return abs(r); }
inline double abs_value(double x) { return std::fabs(x); }

/// True for 0, -1, -2, ...
inline bool is_nonpositive_integer(const Rational& r) {
    return r.get_den() == 1 && sgn(r) <= 0;
}
inline bool is_nonpositive_integer(double x) { return x <= 0.0 && x == std::floor(x); }

template <Scalar T>
T from_int(long v) {
    return T(v);
}

template <Scalar T>
T from_ratio(long num, long den) {
    if constexpr (is_exact_v<T>) {
        Rational r(num, den);
        r.canonicalize();
        return r;
    } else {
        return static_cast<double>(num) / static_cast<double>(den);
    }
}

/// Converts between backends. Rational -> double rounds once; double ->
/// Rational is exact (every binary64 value is a dyadic rational).
template <Scalar U, Scalar T>
U scalar_cast(const T& v) {
    if constexpr (std::same_as<U, T>) {
        return v;
    } else if constexpr (is_exact_v<U>) {
        return Rational(v);
    } else {
        return to_double(v);
    }
}

std::string to_string(const Rational& r);
std::string to_string(double x);

/// A command-line style number: "3", "-2/7" stay exact; "0.25", "1e-3"
/// select the float backend.
struct ParsedNumber {
    std::string text;
    bool exact = true;
    Rational rational;
    double value = 0.0;
};

/// Throws InvalidParameter on malformed input or a zero denominator.
ParsedNumber parse_number(std::string_view text);

}  // namespace hypersob
