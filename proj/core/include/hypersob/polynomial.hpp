#pragma once

// Dense univariate polynomials in the monomial basis.

#include <algorithm>
#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <utility>
#include <vector>

#include "hypersob/scalar.hpp"

namespace hypersob {

/// Coefficient m is the coefficient of x^m. Trailing zeros are trimmed after
/// every operation, so the zero polynomial has no coefficients at all.
template <Scalar T>
class Polynomial {
public:
    Polynomial() = default;

    explicit Polynomial(std::vector<T> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

    Polynomial(std::initializer_list<T> coeffs) : coeffs_(coeffs) { trim(); }

    static Polynomial constant(const T& c) { return Polynomial(std::vector<T>{c}); }

    static Polynomial monomial(std::size_t m, const T& c = T(1)) {
        std::vector<T> v(m + 1, T(0));
        v[m] = c;
        return Polynomial(std::move(v));
    }

    /// -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    std::size_t size() const { return coeffs_.size(); }

    std::span<const T> coefficients() const { return coeffs_; }

    /// Zero past the degree.
    T coefficient(std::size_t m) const { return m < coeffs_.size() ? coeffs_[m] : T(0); }

    T leading() const { return coeffs_.empty() ? T(0) : coeffs_.back(); }

    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }

private:
    void trim() {
        while (!coeffs_.empty() && hypersob::is_zero(coeffs_.back())) {
            coeffs_.pop_back();
        }
    }

    std::vector<T> coeffs_;
};

template <Scalar T>
Polynomial<T> add(const Polynomial<T>& p, const Polynomial<T>& q) {
    std::vector<T> out(std::max(p.size(), q.size()), T(0));
    for (std::size_t i = 0; i < p.size(); ++i) out[i] += p.coefficients()[i];
    for (std::size_t i = 0; i < q.size(); ++i) out[i] += q.coefficients()[i];
    return Polynomial<T>(std::move(out));
}

template <Scalar T>
Polynomial<T> sub(const Polynomial<T>& p, const Polynomial<T>& q) {
    std::vector<T> out(std::max(p.size(), q.size()), T(0));
    for (std::size_t i = 0; i < p.size(); ++i) out[i] += p.coefficients()[i];
    for (std::size_t i = 0; i < q.size(); ++i) out[i] -= q.coefficients()[i];
    return Polynomial<T>(std::move(out));
}

template <Scalar T>
Polynomial<T> scale(const Polynomial<T>& p, const T& c) {
    std::vector<T> out(p.coefficients().begin(), p.coefficients().end());
    for (auto& v : out) v *= c;
    return Polynomial<T>(std::move(out));
}

template <Scalar T>
Polynomial<T> mul(const Polynomial<T>& p, const Polynomial<T>& q) {
    if (p.is_zero() || q.is_zero()) return {};
    std::vector<T> out(p.size() + q.size() - 1, T(0));
    const auto a = p.coefficients();
    const auto b = q.coefficients();
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (hypersob::is_zero(a[i])) continue;
        for (std::size_t j = 0; j < b.size(); ++j) {
            out[i + j] += a[i] * b[j];
        }
    }
    return Polynomial<T>(std::move(out));
}

/// Multiplies by x^m.
template <Scalar T>
Polynomial<T> shift_mul_x(const Polynomial<T>& p, std::size_t m) {
    if (p.is_zero()) return {};
    std::vector<T> out(m, T(0));
    out.insert(out.end(), p.coefficients().begin(), p.coefficients().end());
    return Polynomial<T>(std::move(out));
}

template <Scalar T>
Polynomial<T> derivative(const Polynomial<T>& p, std::size_t order = 1) {
    if (order == 0) return p;
    if (static_cast<int>(order) > p.degree()) return {};
    const auto a = p.coefficients();
    std::vector<T> out(a.size() - order);
    for (std::size_t m = order; m < a.size(); ++m) {
        // m (m-1) ... (m-order+1)
        T falling(1);
        for (std::size_t i = 0; i < order; ++i) falling *= T(static_cast<long>(m - i));
        out[m - order] = falling * a[m];
    }
    return Polynomial<T>(std::move(out));
}

template <Scalar T>
Polynomial<T> operator+(const Polynomial<T>& p, const Polynomial<T>& q) { return add(p, q); }
template <Scalar T>
Polynomial<T> operator-(const Polynomial<T>& p, const Polynomial<T>& q) { return sub(p, q); }
template <Scalar T>
Polynomial<T> operator*(const Polynomial<T>& p, const Polynomial<T>& q) { return mul(p, q); }

/// Horner evaluation in the coefficient field.
template <Scalar T>
T eval(const Polynomial<T>& p, const T& x) {
    T acc(0);
    const auto a = p.coefficients();
    for (auto it = a.rbegin(); it != a.rend(); ++it) {
        acc = acc * x + *it;
    }
    return acc;
}

/// Complex evaluation; float backend only.
inline std::complex<double> eval(const Polynomial<double>& p, std::complex<double> z) {
    std::complex<double> acc(0.0);
    const auto a = p.coefficients();
    for (auto it = a.rbegin(); it != a.rend(); ++it) {
        acc = acc * z + *it;
    }
    return acc;
}

/// Value at a binary64 point, rounded once. For rational coefficients the
/// point is taken exactly and Horner runs in exact arithmetic, so the result
/// carries no cancellation error however large the coefficients are.
double eval_at(const Polynomial<Rational>& p, double x);
inline double eval_at(const Polynomial<double>& p, double x) { return eval(p, x); }

template <Scalar U, Scalar T>
Polynomial<U> convert(const Polynomial<T>& p) {
    std::vector<U> out;
    out.reserve(p.size());
    for (const auto& c : p.coefficients()) out.push_back(scalar_cast<U>(c));
    return Polynomial<U>(std::move(out));
}

inline Polynomial<double> to_float(const Polynomial<Rational>& p) { return convert<double>(p); }
inline const Polynomial<double>& to_float(const Polynomial<double>& p) { return p; }

}  // namespace hypersob
