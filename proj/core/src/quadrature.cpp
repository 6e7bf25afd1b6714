#include "hypersob/quadrature.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "hypersob/error.hpp"
#include "hypersob/scalar.hpp"

namespace hypersob {
namespace {

void require_exponent(double e, const char* name) {
    if (!(e > -1.0) || !std::isfinite(e)) {
        throw InvalidParameter(std::string(name) + " must exceed -1, got " + to_string(e));
    }
}

void require_points(int n) {
    if (n < 1) throw InvalidParameter("quadrature needs at least one node, got " + std::to_string(n));
}

double beta_function(double x, double y) {
    if (x + y < 170.0) return std::tgamma(x) * std::tgamma(y) / std::tgamma(x + y);
    return std::exp(std::lgamma(x) + std::lgamma(y) - std::lgamma(x + y));
}

struct OrthonormalValues {
    double value;  // p_n(x) with p_0 = 1
    double slope;  // p_n'(x)
    double sum_squares;  // sum_{k<n} p_k(x)^2
};

// Orthonormal recurrence sqrt(b_{k+1}) p_{k+1} = (x - a_k) p_k - sqrt(b_k) p_{k-1}, scaled so p_0 = 1.
OrthonormalValues orthonormal_eval(const Recurrence& rec, int n, double x) {
    double p_prev = 0.0, p = 1.0;
    double d_prev = 0.0, d = 0.0;
    double sum = 0.0;
    for (int k = 0; k < n; ++k) {
        sum += p * p;
        const double sb_next = std::sqrt(rec.beta[k + 1]);
        const double sb = k > 0 ? std::sqrt(rec.beta[k]) : 0.0;
        const double p_next = ((x - rec.alpha[k]) * p - sb * p_prev) / sb_next;
        const double d_next = (p + (x - rec.alpha[k]) * d - sb * d_prev) / sb_next;
        p_prev = p;
        p = p_next;
        d_prev = d;
        d = d_next;
    }
    return {p, d, sum};
}

}  // namespace

double WeightDescriptor::operator()(double x) const {
    if (x < lower || x > upper) return 0.0;
    switch (family) {
        case WeightFamily::jacobi01:
            return std::pow(x, a_exp) * std::pow(1.0 - x, b_exp);
        case WeightFamily::jacobi_pm01:
            return std::pow(1.0 - x, a_exp) * std::pow(1.0 + x, b_exp);
        case WeightFamily::laguerre:
            return std::pow(x, a_exp) * std::exp(-x);
    }
    return 0.0;
}

std::string WeightDescriptor::describe() const {
    std::ostringstream os;
    os.precision(17);
    switch (family) {
        case WeightFamily::jacobi01:
            os << "x^" << a_exp << " (1-x)^" << b_exp << " on [0,1]";
            break;
        case WeightFamily::jacobi_pm01:
            os << "(1-x)^" << a_exp << " (1+x)^" << b_exp << " on [0,1]";
            break;
        case WeightFamily::laguerre:
            os << "x^" << a_exp << " exp(-x) on [0,inf)";
            break;
    }
    return os.str();
}

Recurrence jacobi01_recurrence(int n, double a_exp, double b_exp) {
    require_exponent(a_exp, "a_exp");
    require_exponent(b_exp, "b_exp");
    // Monic Jacobi recurrence on [-1,1] for (1-t)^ja (1+t)^jb, pulled back by t = 2x - 1.
    const double ja = b_exp;
    const double jb = a_exp;
    const double s = ja + jb;
    Recurrence rec;
    rec.alpha.resize(n + 1);
    rec.beta.resize(n + 1);
    for (int k = 0; k <= n; ++k) {
        double a_k;
        if (k == 0) {
            a_k = (jb - ja) / (s + 2.0);
        } else {
            const double t = 2.0 * k + s;
            a_k = (jb * jb - ja * ja) / (t * (t + 2.0));
        }
        rec.alpha[k] = 0.5 * (a_k + 1.0);

        if (k == 0) {
            rec.beta[k] = beta_function(a_exp + 1.0, b_exp + 1.0);
        } else if (k == 1) {
            rec.beta[k] = 0.25 * 4.0 * (1.0 + ja) * (1.0 + jb) / ((2.0 + s) * (2.0 + s) * (3.0 + s));
        } else {
            const double t = 2.0 * k + s;
            rec.beta[k] = 0.25 * 4.0 * k * (k + ja) * (k + jb) * (k + s) / (t * t * (t + 1.0) * (t - 1.0));
        }
    }
    return rec;
}

Recurrence laguerre_recurrence(int n, double a_exp) {
    require_exponent(a_exp, "a_exp");
    Recurrence rec;
    rec.alpha.resize(n + 1);
    rec.beta.resize(n + 1);
    for (int k = 0; k <= n; ++k) {
        rec.alpha[k] = 2.0 * k + a_exp + 1.0;
        rec.beta[k] = k == 0 ? std::tgamma(a_exp + 1.0) : k * (k + a_exp);
    }
    return rec;
}

Recurrence discretized_stieltjes(std::span<const double> nodes, std::span<const double> weights, int n) {
    if (nodes.size() != weights.size() || static_cast<int>(nodes.size()) <= n) {
        throw InvalidParameter("discrete measure needs more than n support points");
    }
    const std::size_t m = nodes.size();
    double mass = 0.0;
    for (double w : weights) mass += w;

    Recurrence rec;
    rec.alpha.resize(n + 1);
    rec.beta.resize(n + 1);
    rec.beta[0] = mass;

    std::vector<double> p_prev(m, 0.0), p(m, 1.0 / std::sqrt(mass)), r(m);
    for (int k = 0;; ++k) {
        double a = 0.0;
        for (std::size_t i = 0; i < m; ++i) a += weights[i] * nodes[i] * p[i] * p[i];
        rec.alpha[k] = a;
        if (k == n) break;
        const double sb = k > 0 ? std::sqrt(rec.beta[k]) : 0.0;
        double b = 0.0;
        for (std::size_t i = 0; i < m; ++i) {
            r[i] = (nodes[i] - a) * p[i] - sb * p_prev[i];
            b += weights[i] * r[i] * r[i];
        }
        rec.beta[k + 1] = b;
        const double sb_next = std::sqrt(b);
        for (std::size_t i = 0; i < m; ++i) {
            p_prev[i] = p[i];
            p[i] = r[i] / sb_next;
        }
    }
    return rec;
}

QuadRule golub_welsch(const Recurrence& rec, int n, const WeightDescriptor& weight) {
    require_points(n);
    if (static_cast<int>(rec.alpha.size()) < n + 1 || static_cast<int>(rec.beta.size()) < n + 1) {
        throw InvalidParameter("recurrence too short for the requested rule");
    }

    Eigen::VectorXd diag(n);
    Eigen::VectorXd sub(std::max(n - 1, 0));
    for (int k = 0; k < n; ++k) diag(k) = rec.alpha[k];
    for (int k = 0; k + 1 < n; ++k) sub(k) = std::sqrt(rec.beta[k + 1]);

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
    solver.computeFromTridiagonal(diag, sub, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success) {
        throw EigenNoConvergence("tridiagonal eigensolver did not converge for a " + std::to_string(n) +
                                 "-point rule");
    }

    QuadRule rule;
    rule.weight = weight;
    rule.weight.mass = rec.beta[0];
    rule.exactness = 2 * n - 1;
    rule.nodes.resize(n);
    rule.weights.resize(n);

    const auto& eig = solver.eigenvalues();
    for (int i = 0; i < n; ++i) {
        double x = eig(i);
        for (int it = 0; it < 3; ++it) {
            const auto v = orthonormal_eval(rec, n, x);
            if (v.slope == 0.0 || !std::isfinite(v.slope)) break;
            const double step = v.value / v.slope;
            if (!std::isfinite(step) || std::fabs(step) > 1e-6 * (1.0 + std::fabs(x))) break;
            x -= step;
            if (std::fabs(step) <= 4.0 * std::numeric_limits<double>::epsilon() * std::fabs(x)) break;
        }
        rule.nodes[i] = x;
        rule.weights[i] = rec.beta[0] / orthonormal_eval(rec, n, x).sum_squares;
    }

    for (int i = 0; i < n; ++i) {
        const bool inside = rule.nodes[i] > weight.lower && rule.nodes[i] < weight.upper;
        const bool ordered = i == 0 || rule.nodes[i] > rule.nodes[i - 1];
        if (inside && ordered && rule.weights[i] == 0.0) {
            throw EigenNoConvergence("Gauss weight underflows double precision at index " + std::to_string(i) +
                                     " of " + std::to_string(n));
        }
        if (!inside || !ordered || !(rule.weights[i] > 0.0)) {
            throw EigenNoConvergence("Golub-Welsch produced an invalid node/weight at index " + std::to_string(i));
        }
    }
    return rule;
}

QuadRule gauss_jacobi01(int n, double a_exp, double b_exp) {
    require_points(n);
    WeightDescriptor w{WeightFamily::jacobi01, a_exp, b_exp, 0.0, 1.0, 0.0};
    return golub_welsch(jacobi01_recurrence(n, a_exp, b_exp), n, w);
}

QuadRule gauss_laguerre(int n, double a_exp) {
    require_points(n);
    WeightDescriptor w{WeightFamily::laguerre, a_exp, 0.0, 0.0, std::numeric_limits<double>::infinity(), 0.0};
    return golub_welsch(laguerre_recurrence(n, a_exp), n, w);
}

QuadRule gauss_jacobi_pm01(int n, double a_exp, double b_exp) {
    require_points(n);
    require_exponent(a_exp, "a_exp");
    require_exponent(b_exp, "b_exp");
    // (1+x)^b is analytic on [0,1]; a fine rule for (1-x)^a resolves it to
    // machine precision.
    const auto base = gauss_jacobi01(std::max(4 * n + 40, 120), 0.0, a_exp);
    std::vector<double> weights(base.weights);
    for (std::size_t i = 0; i < weights.size(); ++i) weights[i] *= std::pow(1.0 + base.nodes[i], b_exp);
    WeightDescriptor w{WeightFamily::jacobi_pm01, a_exp, b_exp, 0.0, 1.0, 0.0};
    return golub_welsch(discretized_stieltjes(base.nodes, weights, n), n, w);
}

std::complex<double> taylor_coeff_contour(const ComplexFunction& f, int n, double radius, int points) {
    if (points < 4) throw InvalidParameter("contour rule needs at least 4 points");
    if (n < 0) throw InvalidParameter("Taylor index must be non-negative");
    if (!(radius > 0.0)) throw InvalidParameter("contour radius must be positive");
    std::complex<double> acc(0.0);
    const double two_pi = 2.0 * std::numbers::pi;
    for (int j = 0; j < points; ++j) {
        const double phase = two_pi * static_cast<double>(j) / points;
        const auto z = std::polar(radius, phase);
        // z^{-n} = r^{-n} e^{-i n phase}; reduce n*j mod points for an exact angle.
        const long turns = (static_cast<long>(n) * j) % points;
        const auto inv_pow = std::polar(std::pow(radius, -n), -two_pi * static_cast<double>(turns) / points);
        acc += f(z) * inv_pow;
    }
    return acc / static_cast<double>(points);
}

ContourResult taylor_coeff_adaptive(const ComplexFunction& f, int n, double radius, double tol, int start_points,
                                    int max_points) {
    int m = std::max(start_points, 4);
    while (m < 2 * (n + 1)) m *= 2;
    ContourResult out;
    out.value = taylor_coeff_contour(f, n, radius, m);
    out.points = m;
    while (2 * m <= max_points) {
        m *= 2;
        const auto next = taylor_coeff_contour(f, n, radius, m);
        out.last_change = std::abs(next - out.value);
        out.value = next;
        out.points = m;
        if (out.last_change <= tol * std::max(1.0, std::abs(next))) {
            out.converged = true;
            break;
        }
    }
    return out;
}

}  // namespace hypersob
