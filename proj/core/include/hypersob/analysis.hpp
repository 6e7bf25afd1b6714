#pragma once

// Numerical and exact checks of the analytic identities satisfied by the
// hypergeometric families: generating functions, contour and Beta-integral
// representations, the five-term recurrence of the 3F3 family, and the
// unit-disc location of zeros.

#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "hypersob/error.hpp"
#include "hypersob/hypergeometric.hpp"
#include "hypersob/polynomial.hpp"
#include "hypersob/quadrature.hpp"

namespace hypersob {

using cplx = std::complex<double>;

/// Non-terminating pFq(num; den; z), summed term by term until
/// |term| < 1e-18 |partial sum| on a non-increasing tail. Throws
/// DomainViolation outside the disc of convergence and NoConvergence if
/// `max_terms` is exhausted.
cplx hypergeometric_series(std::span<const double> num, std::span<const double> den, cplx z,
                           int max_terms = 200000);

// ---------------------------------------------------------------------------
// Generating functions

struct GfResult {
    cplx lhs;
    cplx rhs_partial;
    double gap = 0.0;
    int truncation = 0;
};

/// True when some c in (0, 1/2) has |t| < c and |x| < 1/(4c) - 1/2.
bool jacobi_gf_admissible(cplx x, cplx t);

/// Deterministic points strictly inside the Jacobi-type region: c alternates
/// between 1/3 and 1/4, |t| = c/2, |x| = (1/(4c) - 1/2)/2.
std::vector<std::pair<cplx, cplx>> jacobi_gf_samples(int count);

/// Deterministic (x, t) pairs for the Laguerre-type identity. With
/// `unit_disc` both lie on |.| = 1/2; otherwise |x| in [1/2, 2], |t| in [1/2, 1].
std::vector<std::pair<cplx, cplx>> laguerre_gf_samples(int count, bool unit_disc);

namespace detail {

struct FloatGen {
    double a;
    std::vector<double> num;
    std::vector<double> den;
};

cplx jacobi_gf_lhs(const FloatGen& g, cplx x, cplx t);
cplx laguerre_gf_lhs(const FloatGen& g, cplx x, cplx t);

template <Scalar T>
FloatGen float_gen(const GenParams<T>& p) {
    const auto d = convert<double>(p);
    return {d.a, d.num, d.den};
}

}  // namespace detail

/// (1-t)^{-a} F(a/2, (a+1)/2, num; den; -4xt/(1-t)^2) against
/// sum_{n<=N} (a)_n / n! hyper_jacobi(n)(x) t^n. Needs p <= q-1, a > 0 and
/// (x, t) admissible; otherwise DomainViolation.
template <Scalar T>
GfResult gf_check_hyper_jacobi(const GenParams<T>& params, cplx x, cplx t, int truncation) {
    validate(params);
    if (params.p() + 1 > params.q()) throw DomainViolation("generating function needs p <= q - 1");
    if (!(params.a > T(0))) throw DomainViolation("generating function needs a > 0");
    if (!jacobi_gf_admissible(x, t)) throw DomainViolation("(x, t) outside the region of convergence");
    const auto g = detail::float_gen(params);
    GfResult r;
    r.truncation = truncation;
    r.lhs = detail::jacobi_gf_lhs(g, x, t);
    // (a)_n / n! t^n built incrementally.
    cplx weight(1.0);
    cplx sum(0.0);
    for (int n = 0; n <= truncation; ++n) {
        if (n > 0) weight *= (g.a + n - 1) / n * t;
        sum += weight * eval(to_float(hyper_jacobi(static_cast<unsigned>(n), params)), x);
    }
    r.rhs_partial = sum;
    r.gap = std::abs(r.lhs - r.rhs_partial);
    return r;
}

/// e^t pFq(num; den; -xt) against sum_{n<=N} hyper_laguerre(n)(x) t^n / n!.
/// Needs p <= q+1; for p = q+1 both |x| and |t| must be below 1.
template <Scalar T>
GfResult gf_check_hyper_laguerre(const GenParams<T>& params, cplx x, cplx t, int truncation) {
    validate(params);
    if (params.p() > params.q() + 1) throw DomainViolation("generating function needs p <= q + 1");
    if (params.p() == params.q() + 1 && !(std::abs(x) < 1.0 && std::abs(t) < 1.0)) {
        throw DomainViolation("for p = q + 1 the identity holds only for x, t in the unit disc");
    }
    const auto g = detail::float_gen(params);
    GfResult r;
    r.truncation = truncation;
    r.lhs = detail::laguerre_gf_lhs(g, x, t);
    cplx weight(1.0);
    cplx sum(0.0);
    for (int n = 0; n <= truncation; ++n) {
        if (n > 0) weight *= t / static_cast<double>(n);
        sum += weight * eval(to_float(hyper_laguerre(static_cast<unsigned>(n), params)), x);
    }
    r.rhs_partial = sum;
    r.gap = std::abs(r.lhs - r.rhs_partial);
    return r;
}

/// Jacobi-type specialization; additionally needs alpha + beta > -1.
template <Scalar T>
GfResult gf_check_sobolev_jacobi(const PParams<T>& params, cplx x, cplx t, int truncation) {
    validate(params);
    return gf_check_hyper_jacobi(to_general(params), x, t, truncation);
}

template <Scalar T>
GfResult gf_check_sobolev_laguerre(const LParams<T>& params, cplx x, cplx t, int truncation) {
    validate(params);
    return gf_check_hyper_laguerre(to_general(params), x, t, truncation);
}

// ---------------------------------------------------------------------------
// Integral representations

namespace detail {

ContourResult contour_sobolev_laguerre(unsigned n, const FloatGen& g, cplx x);
ContourResult contour_sobolev_jacobi(unsigned n, const FloatGen& g, cplx x);
double inverse_beta(double x, double y);

}  // namespace detail

/// n! (2 pi i)^{-1} \oint_{|z|=1} z^{-n-1} e^z F(delta+1; alpha+1, kappa+delta+1; -xz) dz
template <Scalar T>
ContourResult integral_rep_sobolev_laguerre(unsigned n, const LParams<T>& params, cplx x) {
    validate(params);
    return detail::contour_sobolev_laguerre(n, detail::float_gen(to_general(params)), x);
}

/// n!/(alpha+beta+1)_n (2 pi i)^{-1} \oint_{|z|=1/4} z^{-n-1} (1-z)^{-alpha-beta-1}
///   F((alpha+beta+1)/2, (alpha+beta+2)/2, delta+1; alpha+1, kappa+delta+1; -4xz/(1-z)^2) dz,
/// valid for |x| < 1/4 and alpha + beta > -1.
template <Scalar T>
ContourResult integral_rep_sobolev_jacobi(unsigned n, const PParams<T>& params, cplx x) {
    validate(params);
    if (!(params.alpha + params.beta > T(-1))) throw DomainViolation("contour representation needs alpha + beta > -1");
    if (!(std::abs(x) < 0.25)) throw DomainViolation("contour representation needs |x| < 1/4");
    return detail::contour_sobolev_jacobi(n, detail::float_gen(to_general(params)), x);
}

namespace detail {

template <class Params>
void require_positive_last_kappa(const Params& params) {
    if (params.kappas.back() < 1) throw DomainViolation("Beta-integral step needs the last kappa >= 1");
}

/// Gamma(kappa+delta+1)/(Gamma(delta+1)Gamma(kappa)) \int_0^1 t^delta (1-t)^{kappa-1} f(zt) dt
template <class F>
cplx beta_integral(double delta, unsigned kappa, unsigned degree, cplx z, F&& f) {
    const auto rule = gauss_jacobi01(static_cast<int>(degree) / 2 + 2, delta, static_cast<double>(kappa) - 1.0);
    cplx acc(0.0);
    for (std::size_t i = 0; i < rule.size(); ++i) acc += rule.weights[i] * f(z * rule.nodes[i]);
    return acc * inverse_beta(delta + 1.0, static_cast<double>(kappa));
}

}  // namespace detail

/// One Beta-integral step: the rho-level member at z from the (rho-1)-level
/// member (or the classical Jacobi polynomial when rho = 1). Needs
/// kappa_rho >= 1 and |z| < 1.
template <Scalar T>
cplx beta_step(unsigned n, const PParams<T>& params, cplx z) {
    validate(params);
    detail::require_positive_last_kappa(params);
    if (!(std::abs(z) < 1.0)) throw DomainViolation("Beta-integral representation needs |z| < 1");
    const auto inner = params.rho() >= 2 ? sobolev_jacobi(n, drop_last_lift(params))
                                         : jacobi(n, params.alpha, params.beta);
    const auto f = to_float(inner);
    return detail::beta_integral(to_double(params.deltas.back()), params.kappas.back(), n, z,
                                 [&](cplx w) { return eval(f, w); });
}

template <Scalar T>
cplx beta_step(unsigned n, const LParams<T>& params, cplx z) {
    validate(params);
    detail::require_positive_last_kappa(params);
    const auto inner = params.rho() >= 2 ? sobolev_laguerre(n, drop_last_lift(params)) : laguerre(n, params.alpha);
    const auto f = to_float(inner);
    return detail::beta_integral(to_double(params.deltas.back()), params.kappas.back(), n, z,
                                 [&](cplx w) { return eval(f, w); });
}

/// Applies beta_step at every level, down to the classical polynomial; a
/// rho-fold nested quadrature. Needs every kappa_i >= 1.
template <Scalar T>
cplx beta_nested(unsigned n, const PParams<T>& params, cplx z) {
    if (params.rho() == 1) return beta_step(n, params, z);
    validate(params);
    detail::require_positive_last_kappa(params);
    if (!(std::abs(z) < 1.0)) throw DomainViolation("Beta-integral representation needs |z| < 1");
    const auto lower = drop_last_lift(params);
    return detail::beta_integral(to_double(params.deltas.back()), params.kappas.back(), n, z,
                                 [&](cplx w) { return beta_nested(n, lower, w); });
}

template <Scalar T>
cplx beta_nested(unsigned n, const LParams<T>& params, cplx z) {
    if (params.rho() == 1) return beta_step(n, params, z);
    validate(params);
    detail::require_positive_last_kappa(params);
    const auto lower = drop_last_lift(params);
    return detail::beta_integral(to_double(params.deltas.back()), params.kappas.back(), n, z,
                                 [&](cplx w) { return beta_nested(n, lower, w); });
}

// ---------------------------------------------------------------------------
// Five-term recurrence of 3F3(-n, a1, a2; b1, b2, b3; x)

template <Scalar T>
struct RecurrenceCoeffs {
    T b1, b2, b3;
    T c;          ///< b1 + b2 + b3 + 6
    T b_hat;      ///< 7 + 3(b1+b2+b3) + b1 b2 + b1 b3 + b2 b3
    T d;          ///< (1+b1)(1+b2)(1+b3)
    T alpha_hat;  ///< 1 + a1 + a2
    T alpha_product;  ///< a1 a2
};

template <Scalar T>
RecurrenceCoeffs<T> recurrence_coeffs(const std::array<T, 2>& alphas, const std::array<T, 3>& betas) {
    for (const auto& b : betas) {
        if (is_nonpositive_integer(b)) throw NonPositiveIntegerDenominator("lower parameter " + to_string(b));
        if (!(b > T(0))) throw InvalidParameter("recurrence needs positive lower parameters");
    }
    RecurrenceCoeffs<T> r;
    r.b1 = betas[0] - T(1);
    r.b2 = betas[1] - T(1);
    r.b3 = betas[2] - T(1);
    const T s1 = r.b1 + r.b2 + r.b3;
    const T s2 = r.b1 * r.b2 + r.b1 * r.b3 + r.b2 * r.b3;
    const T s3 = r.b1 * r.b2 * r.b3;
    r.c = s1 + T(6);
    r.b_hat = T(7) + T(3) * s1 + s2;
    r.d = T(1) + s1 + s2 + s3;
    r.alpha_hat = T(1) + alphas[0] + alphas[1];
    r.alpha_product = alphas[0] * alphas[1];
    return r;
}

template <Scalar T>
RecurrenceCoeffs<T> recurrence_coeffs(const GenParams<T>& params) {
    if (params.p() != 2 || params.q() != 3) throw InvalidParameter("five-term recurrence needs p = 2, q = 3");
    return recurrence_coeffs<T>({params.num[0], params.num[1]}, {params.den[0], params.den[1], params.den[2]});
}

/// Left side minus x times the bracket on the right, as a polynomial in x.
/// `family[n]` is the degree-n member for n = 0..k+1; negative indices are
/// the zero polynomial.
template <Scalar T>
Polynomial<T> recurrence_residual(int k, const RecurrenceCoeffs<T>& r, std::span<const Polynomial<T>> family) {
    if (k < 0) throw InvalidParameter("recurrence index must be non-negative");
    if (static_cast<int>(family.size()) < k + 2) throw InvalidParameter("family too short for recurrence index");
    const auto member = [&](int n) { return n < 0 ? Polynomial<T>{} : family[static_cast<std::size_t>(n)]; };
    const T kk(static_cast<long>(k));
    const T k2 = kk * (kk - T(1));
    const T k3 = k2 * (kk - T(2));

    Polynomial<T> lhs;
    lhs = add(lhs, scale(member(k + 1), T(-k3 - k2 * r.c - kk * r.b_hat - r.d)));
    lhs = add(lhs, scale(member(k), T(T(4) * k3 + T(3) * k2 * r.c + T(2) * kk * r.b_hat + r.d)));
    lhs = add(lhs, scale(member(k - 1), T(T(-6) * k3 - T(3) * k2 * r.c - kk * r.b_hat)));
    lhs = add(lhs, scale(member(k - 2), T(T(4) * k3 + k2 * r.c)));
    lhs = add(lhs, scale(member(k - 3), T(-k3)));

    Polynomial<T> bracket;
    bracket = add(bracket, scale(member(k), T(k2 + kk * r.alpha_hat + r.alpha_product)));
    bracket = add(bracket, scale(member(k - 1), T(-(T(2) * k2 + kk * r.alpha_hat))));
    bracket = add(bracket, scale(member(k - 2), k2));

    return sub(lhs, shift_mul_x(bracket, 1));
}

template <Scalar T>
Polynomial<T> recurrence_residual(int k, const GenParams<T>& params) {
    const auto r = recurrence_coeffs(params);
    std::vector<Polynomial<T>> family;
    for (int n = 0; n <= k + 1; ++n) family.push_back(hyper_laguerre(static_cast<unsigned>(n), params));
    return recurrence_residual<T>(k, r, family);
}

/// Laguerre-type Sobolev family with rho = 2, through its 3F3 form.
template <Scalar T>
Polynomial<T> recurrence_residual(int k, const LParams<T>& params) {
    validate(params);
    if (params.rho() != 2) throw InvalidParameter("five-term recurrence applies to rho = 2");
    return recurrence_residual(k, to_general(params));
}

// ---------------------------------------------------------------------------
// Zeros

struct AberthOptions {
    double tolerance = 1e-13;
    int max_iterations = 200;
};

struct ZeroReport {
    std::vector<cplx> roots;
    double max_modulus = 0.0;
    /// Parameter condition holds and the reversed coefficient sequence is
    /// positive and non-decreasing, so the zeros are confined to the closed disc.
    bool ek_condition_met = false;
    bool parameter_condition = false;
    bool ratios_monotone = false;
    double max_coefficient_ratio = 0.0;
    /// max_k |p(root_k)|
    double residual_max = 0.0;
    /// max_k |p(root_k)| / sum_i |a_i| |root_k|^i
    double residual_relative = 0.0;
    /// |sum roots + a_{n-1}/a_n| / max(sum |roots|, |a_{n-1}/a_n|)
    double vieta_error = 0.0;
    int iterations = 0;
};

/// All complex roots by Aberth-Ehrlich iteration from equispaced starting
/// points on the Cauchy-bound circle. Throws NoConvergence on the cap.
ZeroReport zeros(const Polynomial<double>& p, const AberthOptions& options = {});

struct CoefficientRatios {
    bool positive = false;  ///< every |a_k| > 0 with alternating signs
    bool monotone = false;  ///< |a_k| / |a_{k+1}| <= 1 for all k
    double max_ratio = 0.0;
};

/// Ratios of consecutive coefficients of p(-z); exact for rational input.
template <Scalar T>
CoefficientRatios coefficient_ratios(const Polynomial<T>& p) {
    CoefficientRatios out;
    out.positive = true;
    out.monotone = true;
    const auto a = p.coefficients();
    for (std::size_t k = 0; k < a.size(); ++k) {
        // coefficient of z^k in p(-z) is (-1)^k a_k
        const int s = sign(a[k]) * (k % 2 == 0 ? 1 : -1);
        if (s <= 0) out.positive = false;
    }
    if (!out.positive) {
        out.monotone = false;
        return out;
    }
    for (std::size_t k = 0; k + 1 < a.size(); ++k) {
        const T ratio = abs_value(a[k]) / abs_value(a[k + 1]);
        out.max_ratio = std::max(out.max_ratio, to_double(ratio));
        if (ratio > T(1)) out.monotone = false;
    }
    return out;
}

/// p >= q+1, num_j >= den_j for j <= q, num_j >= 1 for j > q.
template <Scalar T>
bool zero_parameter_condition(const GenParams<T>& params) {
    if (params.p() < params.q() + 1) return false;
    for (std::size_t j = 0; j < params.q(); ++j) {
        if (params.num[j] < params.den[j]) return false;
    }
    for (std::size_t j = params.q(); j < params.p(); ++j) {
        if (params.num[j] < T(1)) return false;
    }
    return true;
}

namespace detail {

template <Scalar T>
ZeroReport zero_report(const Polynomial<T>& poly, bool parameter_condition, const AberthOptions& options) {
    if (poly.degree() < 1) throw InvalidParameter("zeros needs degree >= 1");
    auto report = zeros(to_float(poly), options);
    const auto ratios = coefficient_ratios(poly);
    report.parameter_condition = parameter_condition;
    report.ratios_monotone = ratios.monotone;
    report.max_coefficient_ratio = ratios.max_ratio;
    report.ek_condition_met = parameter_condition && ratios.monotone;
    return report;
}

}  // namespace detail

template <Scalar T>
ZeroReport zero_report_hyper_jacobi(unsigned n, const GenParams<T>& params, const AberthOptions& options = {}) {
    return detail::zero_report(hyper_jacobi(n, params), zero_parameter_condition(params), options);
}

template <Scalar T>
ZeroReport zero_report_hyper_laguerre(unsigned n, const GenParams<T>& params, const AberthOptions& options = {}) {
    return detail::zero_report(hyper_laguerre(n, params), zero_parameter_condition(params), options);
}

}  // namespace hypersob
