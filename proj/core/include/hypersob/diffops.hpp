#pragma once

// Linear differential operators with polynomial coefficients.
//
// The step operator with parameters (delta, k) is
//
//     y  ->  x^{-delta} (x^{k+delta} y)^{(k)} / (delta+1)_k ,
//
// which acts diagonally on monomials, x^m -> (delta+m+1)_k / (delta+1)_k x^m.
// The reduction operator is the product of step operators over all
// (delta_i, kappa_i) pairs, outermost first; it maps sobolev_jacobi(n) onto
// jacobi(n) and sobolev_laguerre(n) onto laguerre(n).

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "hypersob/error.hpp"
#include "hypersob/hypergeometric.hpp"
#include "hypersob/polynomial.hpp"

namespace hypersob {

/// sum_j c_j(x) d^j/dx^j. Trailing null coefficients are dropped, so the
/// top coefficient c_order is never the null polynomial.
template <Scalar T>
class DiffOperator {
public:
    /// The identity operator.
    DiffOperator() : coeffs_{Polynomial<T>::constant(T(1))} {}

    explicit DiffOperator(std::vector<Polynomial<T>> coeffs) : coeffs_(std::move(coeffs)) {
        while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
        if (coeffs_.empty()) throw InvalidParameter("differential operator has only null coefficients");
    }

    int order() const { return static_cast<int>(coeffs_.size()) - 1; }

    const Polynomial<T>& coefficient(std::size_t j) const { return coeffs_.at(j); }
    std::span<const Polynomial<T>> coefficients() const { return coeffs_; }

    Polynomial<T> apply(const Polynomial<T>& p) const {
        Polynomial<T> out;
        Polynomial<T> dp = p;
        for (const auto& c : coeffs_) {
            if (dp.is_zero()) break;
            out = add(out, mul(c, dp));
            dp = derivative(dp);
        }
        return out;
    }

    friend bool operator==(const DiffOperator& a, const DiffOperator& b) { return a.coeffs_ == b.coeffs_; }

private:
    std::vector<Polynomial<T>> coeffs_;
};

/// (outer o inner) y = outer(inner(y)), expanded by the product rule:
///   D^i (b_j y^{(j)}) = sum_l C(i,l) b_j^{(i-l)} y^{(j+l)}.
template <Scalar T>
DiffOperator<T> compose(const DiffOperator<T>& outer, const DiffOperator<T>& inner) {
    const auto a = outer.coefficients();
    const auto b = inner.coefficients();
    std::vector<Polynomial<T>> out(a.size() + b.size() - 1);
    for (std::size_t j = 0; j < b.size(); ++j) {
        std::vector<Polynomial<T>> b_derivs{b[j]};
        for (std::size_t i = 1; i < a.size(); ++i) b_derivs.push_back(derivative(b_derivs.back()));
        for (std::size_t i = 0; i < a.size(); ++i) {
            T binom(1);
            for (std::size_t l = 0; l <= i; ++l) {
                // binom == C(i, l)
                out[j + l] = add(out[j + l], scale(mul(a[i], b_derivs[i - l]), binom));
                binom = binom * T(static_cast<long>(i - l)) / T(static_cast<long>(l + 1));
            }
        }
    }
    return DiffOperator<T>(std::move(out));
}

/// Product of a non-empty list, ops[0] outermost.
template <Scalar T>
DiffOperator<T> compose(std::span<const DiffOperator<T>> ops) {
    if (ops.empty()) throw InvalidParameter("compose needs at least one operator");
    DiffOperator<T> acc = ops.back();
    for (std::size_t i = ops.size() - 1; i-- > 0;) acc = compose(ops[i], acc);
    return acc;
}

/// (delta+m+1)_k / (delta+1)_k
template <Scalar T>
T step_eigenvalue(const T& delta, unsigned k, unsigned m) {
    return pochhammer<T>(delta + T(static_cast<long>(m)) + T(1), k) / pochhammer<T>(delta + T(1), k);
}

/// Step operator applied through its diagonal action on monomials.
template <Scalar T>
Polynomial<T> step_apply(const T& delta, unsigned k, const Polynomial<T>& p) {
    detail::require_above_minus_one(delta, "delta");
    std::vector<T> out(p.coefficients().begin(), p.coefficients().end());
    for (std::size_t m = 0; m < out.size(); ++m) out[m] *= step_eigenvalue(delta, k, static_cast<unsigned>(m));
    return Polynomial<T>(std::move(out));
}

/// Step operator in derivative form, from the Leibniz rule:
///   sum_{i=0}^{k} C(k,i) (delta+i+1)_{k-i} / (delta+1)_k  x^i d^i/dx^i.
template <Scalar T>
DiffOperator<T> step_operator(const T& delta, unsigned k) {
    detail::require_above_minus_one(delta, "delta");
    const T norm = pochhammer<T>(delta + T(1), k);
    std::vector<Polynomial<T>> coeffs;
    T binom(1);
    for (unsigned i = 0; i <= k; ++i) {
        const T c = binom * pochhammer<T>(delta + T(static_cast<long>(i)) + T(1), k - i) / norm;
        coeffs.push_back(Polynomial<T>::monomial(i, c));
        binom = binom * T(static_cast<long>(k - i)) / T(static_cast<long>(i + 1));
    }
    return DiffOperator<T>(std::move(coeffs));
}

/// prod_i (delta_i+m+1)_{kappa_i} / (delta_i+1)_{kappa_i}; always positive.
template <Scalar T>
T reduction_eigenvalue(std::span<const T> deltas, std::span<const unsigned> kappas, unsigned m) {
    T out(1);
    for (std::size_t i = 0; i < deltas.size(); ++i) out *= step_eigenvalue(deltas[i], kappas[i], m);
    return out;
}

/// Reduction operator via the diagonal monomial action.
template <Scalar T>
Polynomial<T> reduce(std::span<const T> deltas, std::span<const unsigned> kappas, const Polynomial<T>& p) {
    if (deltas.size() != kappas.size()) throw InvalidParameter("deltas and kappas must have equal length");
    for (const auto& d : deltas) detail::require_above_minus_one(d, "delta");
    std::vector<T> out(p.coefficients().begin(), p.coefficients().end());
    for (std::size_t m = 0; m < out.size(); ++m) {
        out[m] *= reduction_eigenvalue<T>(deltas, kappas, static_cast<unsigned>(m));
    }
    return Polynomial<T>(std::move(out));
}

template <Scalar T>
Polynomial<T> reduce(const PParams<T>& params, const Polynomial<T>& p) {
    return reduce<T>(params.deltas, params.kappas, p);
}

template <Scalar T>
Polynomial<T> reduce(const LParams<T>& params, const Polynomial<T>& p) {
    return reduce<T>(params.deltas, params.kappas, p);
}

/// Reduction operator expanded into sum_j c_j(x) d^j/dx^j by symbolic
/// composition; its order is kappa_1 + ... + kappa_rho.
template <Scalar T>
DiffOperator<T> reduction_operator(std::span<const T> deltas, std::span<const unsigned> kappas) {
    if (deltas.empty() || deltas.size() != kappas.size()) {
        throw InvalidParameter("reduction operator needs equal-length, non-empty deltas and kappas");
    }
    std::vector<DiffOperator<T>> steps;
    steps.reserve(deltas.size());
    for (std::size_t i = 0; i < deltas.size(); ++i) steps.push_back(step_operator(deltas[i], kappas[i]));
    return compose<T>(steps);
}

template <Scalar T>
DiffOperator<T> reduction_operator(const PParams<T>& params) {
    return reduction_operator<T>(params.deltas, params.kappas);
}

template <Scalar T>
DiffOperator<T> reduction_operator(const LParams<T>& params) {
    return reduction_operator<T>(params.deltas, params.kappas);
}

/// theta = x d/dx operators acting on polynomials through their symbols:
///
///   lower(theta) = theta (theta+alpha) prod_j (theta+kappa_j+delta_j)
///   upper(theta) = prod_j (theta+delta_j+1)
///
/// and multiplication by x as a degree shift. The two pencils are
///
///   [lower - x theta (theta+alpha+beta+1) upper] P_n = -n(n+alpha+beta+1) x upper P_n
///   [lower - x theta upper]                      L_n = -n x upper L_n .
template <Scalar T>
class ThetaPencil {
public:
    ThetaPencil(T alpha, std::optional<T> beta, std::vector<T> deltas, std::vector<unsigned> kappas)
        : alpha_(std::move(alpha)), beta_(std::move(beta)), deltas_(std::move(deltas)), kappas_(std::move(kappas)) {
        if (deltas_.size() != kappas_.size()) throw InvalidParameter("deltas and kappas must have equal length");
    }

    static ThetaPencil jacobi_type(const PParams<T>& p) { return {p.alpha, p.beta, p.deltas, p.kappas}; }
    static ThetaPencil laguerre_type(const LParams<T>& p) { return {p.alpha, std::nullopt, p.deltas, p.kappas}; }

    T lower_symbol(unsigned m) const {
        const T mm(static_cast<long>(m));
        T out = mm * (mm + alpha_);
        for (std::size_t j = 0; j < deltas_.size(); ++j) out *= mm + T(static_cast<long>(kappas_[j])) + deltas_[j];
        return out;
    }

    T upper_symbol(unsigned m) const {
        const T mm(static_cast<long>(m));
        T out(1);
        for (const auto& d : deltas_) out *= mm + d + T(1);
        return out;
    }

    Polynomial<T> lower(const Polynomial<T>& p) const {
        return diagonal(p, [&](unsigned m) -> T { return lower_symbol(m); });
    }

    Polynomial<T> upper(const Polynomial<T>& p) const {
        return diagonal(p, [&](unsigned m) -> T { return upper_symbol(m); });
    }

    /// x * upper, the right-hand operator of both pencils.
    Polynomial<T> shifted_upper(const Polynomial<T>& p) const { return shift_mul_x(upper(p), 1); }

    /// lower - x theta (theta+alpha+beta+1) upper
    Polynomial<T> jacobi_lhs(const Polynomial<T>& p) const {
        if (!beta_) throw InvalidParameter("jacobi pencil needs beta");
        const T shift = alpha_ + *beta_ + T(1);
        const auto tail = diagonal(p, [&](unsigned m) -> T {
            const T mm(static_cast<long>(m));
            return mm * (mm + shift) * upper_symbol(m);
        });
        return sub(lower(p), shift_mul_x(tail, 1));
    }

    /// lower - x theta upper
    Polynomial<T> laguerre_lhs(const Polynomial<T>& p) const {
        const auto tail = diagonal(p, [&](unsigned m) -> T { return T(static_cast<long>(m)) * upper_symbol(m); });
        return sub(lower(p), shift_mul_x(tail, 1));
    }

    const T& alpha() const { return alpha_; }
    const std::optional<T>& beta() const { return beta_; }

private:
    template <class Symbol>
    static Polynomial<T> diagonal(const Polynomial<T>& p, Symbol&& symbol) {
        std::vector<T> out(p.coefficients().begin(), p.coefficients().end());
        for (std::size_t m = 0; m < out.size(); ++m) out[m] *= symbol(static_cast<unsigned>(m));
        return Polynomial<T>(std::move(out));
    }

    T alpha_;
    std::optional<T> beta_;
    std::vector<T> deltas_;
    std::vector<unsigned> kappas_;
};

/// jacobi_lhs(p) + n(n+alpha+beta+1) shifted_upper(p); null for p = sobolev_jacobi(n).
template <Scalar T>
Polynomial<T> pencil_residual(unsigned n, const PParams<T>& params, const Polynomial<T>& p) {
    const auto pencil = ThetaPencil<T>::jacobi_type(params);
    const T nn(static_cast<long>(n));
    const T eigen = nn * (nn + params.alpha + params.beta + T(1));
    return add(pencil.jacobi_lhs(p), scale(pencil.shifted_upper(p), eigen));
}

/// laguerre_lhs(p) + n shifted_upper(p); null for p = sobolev_laguerre(n).
template <Scalar T>
Polynomial<T> pencil_residual(unsigned n, const LParams<T>& params, const Polynomial<T>& p) {
    const auto pencil = ThetaPencil<T>::laguerre_type(params);
    return add(pencil.laguerre_lhs(p), scale(pencil.shifted_upper(p), T(static_cast<long>(n))));
}

template <Scalar T>
Polynomial<T> pencil_residual(unsigned n, const PParams<T>& params) {
    return pencil_residual(n, params, sobolev_jacobi(n, params));
}

template <Scalar T>
Polynomial<T> pencil_residual(unsigned n, const LParams<T>& params) {
    return pencil_residual(n, params, sobolev_laguerre(n, params));
}

}  // namespace hypersob
