#include "hypersob/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace hypersob {

cplx hypergeometric_series(std::span<const double> num, std::span<const double> den, cplx z, int max_terms) {
    const std::size_t p = num.size();
    const std::size_t q = den.size();
    for (double b : den) {
        if (b <= 0.0 && std::floor(b) == b) throw NonPositiveIntegerDenominator("denominator " + to_string(b));
    }
    if (z != 0.0) {
        if (p > q + 1) throw DomainViolation("pFq with p > q + 1 diverges for z != 0");
        if (p == q + 1 && !(std::abs(z) < 1.0)) throw DomainViolation("pFq with p = q + 1 needs |z| < 1");
    }
    cplx term(1.0);
    cplx sum(1.0);
    double prev = 1.0;
    for (int k = 0; k < max_terms; ++k) {
        cplx ratio = z / static_cast<double>(k + 1);
        for (double a : num) ratio *= a + k;
        for (double b : den) ratio /= b + k;
        term *= ratio;
        sum += term;
        const double mag = std::abs(term);
        if (mag == 0.0) return sum;
        if (mag < 1e-18 * std::abs(sum) && mag <= prev) return sum;
        prev = mag;
    }
    throw NoConvergence("hypergeometric series did not converge in " + std::to_string(max_terms) + " terms");
}

bool jacobi_gf_admissible(cplx x, cplx t) {
    const double at = std::abs(t);
    if (!(at < 0.5)) return false;
    if (at == 0.0) return true;
    // sup over c in (|t|, 1/2) of 1/(4c) - 1/2 is approached as c -> |t|.
    return std::abs(x) < 1.0 / (4.0 * at) - 0.5;
}

namespace {

// Low-discrepancy angle in [0, 2 pi).
double angle(int i, double step) {
    const double frac = std::fmod(static_cast<double>(i) * step + 0.1, 1.0);
    return 2.0 * std::numbers::pi * frac;
}

constexpr double golden = 0.6180339887498949;
constexpr double silver = 0.4142135623730951;

}  // namespace

std::vector<std::pair<cplx, cplx>> jacobi_gf_samples(int count) {
    std::vector<std::pair<cplx, cplx>> out;
    for (int i = 0; i < count; ++i) {
        const double c = i % 2 == 0 ? 1.0 / 3.0 : 0.25;
        const double t_mod = c / 2.0;
        const double x_mod = (1.0 / (4.0 * c) - 0.5) / 2.0;
        out.emplace_back(std::polar(x_mod, angle(i, silver)), std::polar(t_mod, angle(i, golden)));
    }
    return out;
}

std::vector<std::pair<cplx, cplx>> laguerre_gf_samples(int count, bool unit_disc) {
    std::vector<std::pair<cplx, cplx>> out;
    for (int i = 0; i < count; ++i) {
        const double frac = std::fmod(i * golden, 1.0);
        const double x_mod = unit_disc ? 0.5 : 0.5 + 1.5 * frac;
        const double t_mod = unit_disc ? 0.5 : 0.5 + 0.5 * std::fmod(i * silver, 1.0);
        out.emplace_back(std::polar(x_mod, angle(i, silver)), std::polar(t_mod, angle(i, golden)));
    }
    return out;
}

namespace detail {

namespace {

std::vector<double> jacobi_upper(const FloatGen& g) {
    std::vector<double> up{g.a / 2.0, (g.a + 1.0) / 2.0};
    up.insert(up.end(), g.num.begin(), g.num.end());
    return up;
}

}  // namespace

cplx jacobi_gf_lhs(const FloatGen& g, cplx x, cplx t) {
    const auto up = jacobi_upper(g);
    const cplx u = 1.0 - t;
    return std::pow(u, -g.a) * hypergeometric_series(up, g.den, -4.0 * x * t / (u * u));
}

cplx laguerre_gf_lhs(const FloatGen& g, cplx x, cplx t) {
    return std::exp(t) * hypergeometric_series(g.num, g.den, -x * t);
}

double inverse_beta(double x, double y) {
    if (x + y < 170.0) return std::tgamma(x + y) / (std::tgamma(x) * std::tgamma(y));
    return std::exp(std::lgamma(x + y) - std::lgamma(x) - std::lgamma(y));
}

ContourResult contour_sobolev_laguerre(unsigned n, const FloatGen& g, cplx x) {
    auto r = taylor_coeff_adaptive(
        [&](cplx z) { return std::exp(z) * hypergeometric_series(g.num, g.den, -x * z); }, static_cast<int>(n), 1.0);
    const double scale = std::tgamma(static_cast<double>(n) + 1.0);
    r.value *= scale;
    r.last_change *= scale;
    return r;
}

ContourResult contour_sobolev_jacobi(unsigned n, const FloatGen& g, cplx x) {
    const auto up = jacobi_upper(g);
    auto r = taylor_coeff_adaptive(
        [&](cplx z) {
            const cplx u = 1.0 - z;
            return std::pow(u, -g.a) * hypergeometric_series(up, g.den, -4.0 * x * z / (u * u));
        },
        static_cast<int>(n), 0.25);
    // n! / (a)_n
    double scale = 1.0;
    for (unsigned k = 0; k < n; ++k) scale *= (k + 1.0) / (g.a + k);
    r.value *= scale;
    r.last_change *= scale;
    return r;
}

}  // namespace detail

namespace {

struct HornerPair {
    cplx value;
    cplx slope;
};

HornerPair horner(std::span<const double> a, cplx z) {
    cplx v(0.0), d(0.0);
    for (std::size_t i = a.size(); i-- > 0;) {
        d = d * z + v;
        v = v * z + a[i];
    }
    return {v, d};
}

double abs_scale(std::span<const double> a, double r) {
    double s = 0.0;
    for (std::size_t i = a.size(); i-- > 0;) s = s * r + std::fabs(a[i]);
    return s;
}

}  // namespace

ZeroReport zeros(const Polynomial<double>& p, const AberthOptions& options) {
    const int n = p.degree();
    if (n < 1) throw InvalidParameter("zeros needs degree >= 1");
    const auto a = p.coefficients();
    const double lead = a[static_cast<std::size_t>(n)];

    double cauchy = 0.0;
    for (int i = 0; i < n; ++i) cauchy = std::max(cauchy, std::fabs(a[static_cast<std::size_t>(i)] / lead));
    cauchy += 1.0;

    ZeroReport report;
    report.roots.resize(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) {
        const double phase = 2.0 * std::numbers::pi * k / n + std::numbers::pi / (2.0 * n);
        report.roots[static_cast<std::size_t>(k)] = std::polar(cauchy, phase);
    }

    std::vector<bool> done(static_cast<std::size_t>(n), false);
    int iter = 0;
    for (; iter < options.max_iterations; ++iter) {
        bool all_done = true;
        for (std::size_t k = 0; k < report.roots.size(); ++k) {
            if (done[k]) continue;
            const cplx z = report.roots[k];
            const auto h = horner(a, z);
            if (h.value == 0.0) {
                done[k] = true;
                continue;
            }
            // Residual at rounding level counts as converged, but the root keeps
            // moving: clusters stall the step test long before the roots settle.
            const double noise = 4.0 * n * std::numeric_limits<double>::epsilon() * abs_scale(a, std::abs(z));
            const bool settled = std::abs(h.value) <= noise;
            const cplx ratio = h.value / h.slope;
            cplx repulsion(0.0);
            for (std::size_t j = 0; j < report.roots.size(); ++j) {
                if (j != k) repulsion += 1.0 / (z - report.roots[j]);
            }
            const cplx step = ratio / (1.0 - ratio * repulsion);
            report.roots[k] = z - step;
            if (std::abs(step) <= options.tolerance * std::abs(report.roots[k])) {
                done[k] = true;
            } else if (!settled) {
                all_done = false;
            }
        }
        if (all_done) break;
    }
    if (iter == options.max_iterations) {
        throw NoConvergence("Aberth-Ehrlich iteration did not converge in " + std::to_string(options.max_iterations) +
                            " iterations");
    }
    report.iterations = iter + 1;

    cplx root_sum(0.0);
    double abs_sum = 0.0;
    for (const auto& r : report.roots) {
        const double m = std::abs(r);
        report.max_modulus = std::max(report.max_modulus, m);
        const double res = std::abs(horner(a, r).value);
        report.residual_max = std::max(report.residual_max, res);
        report.residual_relative = std::max(report.residual_relative, res / abs_scale(a, m));
        root_sum += r;
        abs_sum += m;
    }
    const double expected = -a[static_cast<std::size_t>(n - 1)] / lead;
    const double denom = std::max(abs_sum, std::fabs(expected));
    report.vieta_error = denom > 0.0 ? std::abs(root_sum - expected) / denom : 0.0;
    std::sort(report.roots.begin(), report.roots.end(), [](cplx l, cplx r) {
        return l.real() != r.real() ? l.real() < r.real() : l.imag() < r.imag();
    });
    return report;
}

}  // namespace hypersob
