#pragma once

// Gaussian quadrature on [0,1] and [0,inf), plus trapezoidal Cauchy integrals
// for Taylor coefficients.

#include <complex>
#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <vector>

namespace hypersob {

enum class WeightFamily {
    jacobi01,     ///< x^a (1-x)^b on [0,1]
    jacobi_pm01,  ///< (1-x)^a (1+x)^b on [0,1]
    laguerre,     ///< x^a e^{-x} on [0,inf)
};

struct WeightDescriptor {
    WeightFamily family = WeightFamily::jacobi01;
    double a_exp = 0.0;
    double b_exp = 0.0;
    double lower = 0.0;
    double upper = 1.0;
    /// Integral of the weight over its support.
    double mass = 1.0;

    double operator()(double x) const;
    std::string describe() const;
};

/// Three-term recurrence of the monic orthogonal polynomials of a weight:
///   pi_{k+1}(x) = (x - alpha[k]) pi_k(x) - beta[k] pi_{k-1}(x),
/// with beta[0] equal to the total mass.
struct Recurrence {
    std::vector<double> alpha;
    std::vector<double> beta;
};

struct QuadRule {
    std::vector<double> nodes;    ///< strictly increasing, inside the support
    std::vector<double> weights;  ///< strictly positive
    WeightDescriptor weight;
    int exactness = -1;  ///< integrates x^d exactly for d <= exactness (2N-1)

    std::size_t size() const { return nodes.size(); }

    template <class F>
    double integrate(F&& f) const {
        double acc = 0.0;
        for (std::size_t i = 0; i < nodes.size(); ++i) acc += weights[i] * f(nodes[i]);
        return acc;
    }
};

Recurrence jacobi01_recurrence(int n, double a_exp, double b_exp);
Recurrence laguerre_recurrence(int n, double a_exp);

/// Recurrence of an arbitrary discrete measure (orthonormal Stieltjes procedure).
Recurrence discretized_stieltjes(std::span<const double> nodes, std::span<const double> weights, int n);

/// Golub-Welsch: nodes are the eigenvalues of the symmetric tridiagonal
/// Jacobi matrix, weights are mass times the squared first eigenvector
/// components. `rec` must hold at least n+1 entries of alpha and beta.
///
/// The eigenvalues are polished by Newton steps on the orthonormal recurrence
/// and the first components come from the same recurrence,
///   v_0(x)^2 = 1 / sum_k p_k(x)^2 ,
/// so that tiny tail weights keep full relative accuracy.
/// Throws EigenNoConvergence if the eigensolver fails.
QuadRule golub_welsch(const Recurrence& rec, int n, const WeightDescriptor& weight);

/// N-point rule for x^a (1-x)^b on [0,1]; a, b > -1, N >= 1.
QuadRule gauss_jacobi01(int n, double a_exp, double b_exp);

/// N-point rule for x^a e^{-x} on [0,inf); a > -1, N >= 1.
QuadRule gauss_laguerre(int n, double a_exp);

/// N-point rule for (1-x)^a (1+x)^b on [0,1], from a discretized Stieltjes
/// recurrence on a fine Gauss-Jacobi grid.
QuadRule gauss_jacobi_pm01(int n, double a_exp, double b_exp);

using ComplexFunction = std::function<std::complex<double>(std::complex<double>)>;

/// M-point trapezoidal rule for (1/2 pi i) \oint_{|z|=r} z^{-n-1} f(z) dz,
/// i.e. the n-th Taylor coefficient of f at 0.
std::complex<double> taylor_coeff_contour(const ComplexFunction& f, int n, double radius, int points);

struct ContourResult {
    std::complex<double> value;
    int points = 0;
    double last_change = 0.0;
    bool converged = false;
};

/// Doubles the point count from `start_points` until two successive answers
/// agree to `tol` (relative to max(1, |value|)) or `max_points` is reached.
ContourResult taylor_coeff_adaptive(const ComplexFunction& f, int n, double radius, double tol = 1e-12,
                                    int start_points = 16, int max_points = 4096);

}  // namespace hypersob
