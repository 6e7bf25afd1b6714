#pragma once

// Terminating hypergeometric series and the polynomial families built on them.
//
//   sobolev_jacobi(n)   = F(-n, n+alpha+beta+1, delta_i+1 ; alpha+1, kappa_i+delta_i+1 ; x)
//   sobolev_laguerre(n) = F(-n, delta_i+1 ; alpha+1, kappa_i+delta_i+1 ; x)
//   hyper_jacobi(n)     = F(-n, n+a, num_j ; den_j ; x)
//   hyper_laguerre(n)   = F(-n, num_j ; den_j ; x)
//
// With every kappa_i = 0 the first two collapse to the classical jacobi() and
// laguerre() families, normalised to the value 1 at x = 0.

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "hypersob/error.hpp"
#include "hypersob/polynomial.hpp"
#include "hypersob/scalar.hpp"

namespace hypersob {

/// Rising factorial (c)_k = c (c+1) ... (c+k-1), (c)_0 = 1.
template <Scalar T>
T pochhammer(const T& c, unsigned k) {
    T out(1);
    for (unsigned i = 0; i < k; ++i) out *= c + T(static_cast<long>(i));
    return out;
}

/// sum_{k=0}^{n} (-n)_k prod (num_i)_k / prod (den_j)_k  x^k / k!
///
/// Each coefficient is obtained from the previous one by a single ratio
/// update. Throws NonPositiveIntegerDenominator if a den entry is 0, -1, ...
template <Scalar T>
Polynomial<T> terminating_series(unsigned n, std::span<const T> num, std::span<const T> den) {
    for (const auto& b : den) {
        if (is_nonpositive_integer(b)) {
            throw NonPositiveIntegerDenominator("lower parameter " + to_string(b) +
                                                " is a non-positive integer");
        }
    }
    std::vector<T> coeffs;
    coeffs.reserve(n + 1);
    T term(1);
    coeffs.push_back(term);
    for (unsigned k = 0; k < n; ++k) {
        const T kk(static_cast<long>(k));
        T ratio = T(static_cast<long>(k) - static_cast<long>(n));
        for (const auto& a : num) ratio *= a + kk;
        T denom(static_cast<long>(k + 1));
        for (const auto& b : den) denom *= b + kk;
        ratio /= denom;
        term *= ratio;
        coeffs.push_back(term);
    }
    return Polynomial<T>(std::move(coeffs));
}

template <Scalar T>
struct PParams {
    T alpha;
    T beta;
    std::vector<T> deltas;
    std::vector<unsigned> kappas;

    std::size_t rho() const { return deltas.size(); }
    unsigned kappa_total() const {
        unsigned s = 0;
        for (auto k : kappas) s += k;
        return s;
    }
};

template <Scalar T>
struct LParams {
    T alpha;
    std::vector<T> deltas;
    std::vector<unsigned> kappas;

    std::size_t rho() const { return deltas.size(); }
    unsigned kappa_total() const {
        unsigned s = 0;
        for (auto k : kappas) s += k;
        return s;
    }
};

/// Parameters of hyper_jacobi / hyper_laguerre; `a` is ignored by the latter.
template <Scalar T>
struct GenParams {
    T a;
    std::vector<T> num;
    std::vector<T> den;

    std::size_t p() const { return num.size(); }
    std::size_t q() const { return den.size(); }
};

namespace detail {

template <Scalar T>
void require_above_minus_one(const T& v, const char* name) {
    if (!(v > T(-1))) {
        throw InvalidParameter(std::string(name) + " must exceed -1, got " + to_string(v));
    }
}

template <Scalar T>
void validate_lifts(const std::vector<T>& deltas, const std::vector<unsigned>& kappas) {
    if (deltas.empty()) throw InvalidParameter("at least one delta/kappa pair is required");
    if (deltas.size() != kappas.size()) {
        throw InvalidParameter("deltas and kappas must have equal length");
    }
    for (const auto& d : deltas) require_above_minus_one(d, "delta");
}

}  // namespace detail

template <Scalar T>
void validate(const PParams<T>& p) {
    detail::require_above_minus_one(p.alpha, "alpha");
    detail::require_above_minus_one(p.beta, "beta");
    detail::validate_lifts(p.deltas, p.kappas);
}

template <Scalar T>
void validate(const LParams<T>& p) {
    detail::require_above_minus_one(p.alpha, "alpha");
    detail::validate_lifts(p.deltas, p.kappas);
}

/// `a > -1` for plain construction; numerator and denominator entries > 0.
template <Scalar T>
void validate(const GenParams<T>& p) {
    detail::require_above_minus_one(p.a, "a");
    for (const auto& v : p.num) {
        if (!(v > T(0))) throw InvalidParameter("numerator parameters must be positive, got " + to_string(v));
    }
    for (const auto& v : p.den) {
        if (is_nonpositive_integer(v)) {
            throw NonPositiveIntegerDenominator("lower parameter " + to_string(v) + " is a non-positive integer");
        }
        if (!(v > T(0))) throw InvalidParameter("denominator parameters must be positive, got " + to_string(v));
    }
}

/// Upper parameters (delta_i + 1) and lower parameters (alpha + 1, kappa_i + delta_i + 1)
/// shared by both Sobolev families.
template <Scalar T>
GenParams<T> to_general(const PParams<T>& p) {
    GenParams<T> g;
    g.a = p.alpha + p.beta + T(1);
    g.den.push_back(p.alpha + T(1));
    for (std::size_t i = 0; i < p.rho(); ++i) {
        g.num.push_back(p.deltas[i] + T(1));
        g.den.push_back(T(static_cast<long>(p.kappas[i])) + p.deltas[i] + T(1));
    }
    return g;
}

template <Scalar T>
GenParams<T> to_general(const LParams<T>& p) {
    GenParams<T> g;
    g.a = T(0);
    g.den.push_back(p.alpha + T(1));
    for (std::size_t i = 0; i < p.rho(); ++i) {
        g.num.push_back(p.deltas[i] + T(1));
        g.den.push_back(T(static_cast<long>(p.kappas[i])) + p.deltas[i] + T(1));
    }
    return g;
}

/// Drops the last (delta, kappa) pair. Requires rho >= 2.
template <class Params>
Params drop_last_lift(Params p) {
    if (p.rho() < 2) throw InvalidParameter("cannot drop the only delta/kappa pair");
    p.deltas.pop_back();
    p.kappas.pop_back();
    return p;
}

template <Scalar U, Scalar T>
PParams<U> convert(const PParams<T>& p) {
    PParams<U> out{scalar_cast<U>(p.alpha), scalar_cast<U>(p.beta), {}, p.kappas};
    for (const auto& d : p.deltas) out.deltas.push_back(scalar_cast<U>(d));
    return out;
}

template <Scalar U, Scalar T>
LParams<U> convert(const LParams<T>& p) {
    LParams<U> out{scalar_cast<U>(p.alpha), {}, p.kappas};
    for (const auto& d : p.deltas) out.deltas.push_back(scalar_cast<U>(d));
    return out;
}

template <Scalar U, Scalar T>
GenParams<U> convert(const GenParams<T>& p) {
    GenParams<U> out{scalar_cast<U>(p.a), {}, {}};
    for (const auto& v : p.num) out.num.push_back(scalar_cast<U>(v));
    for (const auto& v : p.den) out.den.push_back(scalar_cast<U>(v));
    return out;
}

namespace detail {

template <Scalar T>
Polynomial<T> full_degree_series(unsigned n, const std::vector<T>& num, const std::vector<T>& den) {
    // A numerator in {0, -1, ..., -(n-1)} would terminate the series early.
    for (const auto& a : num) {
        if (is_nonpositive_integer(a) && a > T(-static_cast<long>(n))) {
            throw DegenerateFamily("upper parameter " + to_string(a) + " truncates the series below degree " +
                                   std::to_string(n));
        }
    }
    auto poly = terminating_series<T>(n, num, den);
    if (poly.degree() != static_cast<int>(n)) {
        throw DegenerateFamily("member of degree " + std::to_string(n) + " lost its leading term");
    }
    return poly;
}

}  // namespace detail

template <Scalar T>
Polynomial<T> sobolev_jacobi(unsigned n, const PParams<T>& params) {
    validate(params);
    const auto g = to_general(params);
    std::vector<T> num{T(static_cast<long>(n)) + g.a};
    num.insert(num.end(), g.num.begin(), g.num.end());
    return detail::full_degree_series<T>(n, num, g.den);
}

template <Scalar T>
Polynomial<T> sobolev_laguerre(unsigned n, const LParams<T>& params) {
    validate(params);
    const auto g = to_general(params);
    return detail::full_degree_series<T>(n, g.num, g.den);
}

template <Scalar T>
Polynomial<T> hyper_jacobi(unsigned n, const GenParams<T>& params) {
    validate(params);
    std::vector<T> num{T(static_cast<long>(n)) + params.a};
    num.insert(num.end(), params.num.begin(), params.num.end());
    return detail::full_degree_series<T>(n, num, params.den);
}

template <Scalar T>
Polynomial<T> hyper_laguerre(unsigned n, const GenParams<T>& params) {
    validate(params);
    return detail::full_degree_series<T>(n, params.num, params.den);
}

/// F(-n, n+alpha+beta+1 ; alpha+1 ; x): orthogonal on [0,1] for x^alpha (1-x)^beta.
template <Scalar T>
Polynomial<T> jacobi(unsigned n, const T& alpha, const T& beta) {
    detail::require_above_minus_one(alpha, "alpha");
    detail::require_above_minus_one(beta, "beta");
    const std::vector<T> num{T(static_cast<long>(n)) + alpha + beta + T(1)};
    const std::vector<T> den{alpha + T(1)};
    return detail::full_degree_series<T>(n, num, den);
}

/// F(-n ; alpha+1 ; x): orthogonal on [0,inf) for x^alpha e^{-x}.
template <Scalar T>
Polynomial<T> laguerre(unsigned n, const T& alpha) {
    detail::require_above_minus_one(alpha, "alpha");
    const std::vector<T> den{alpha + T(1)};
    return detail::full_degree_series<T>(n, {}, den);
}

}  // namespace hypersob
