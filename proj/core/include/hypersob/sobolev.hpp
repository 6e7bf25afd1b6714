#pragma once

// Sobolev inner products with the rank-one matrix measure
//
//     M(x) = c(x)^T c(x),   c(x) = (c_0(x), ..., c_kappa(x)),
//
// where c_j are the coefficients of the expanded reduction operator. Since
// (p, p', ..., p^{(kappa)}) M(x) (q, ..., q^{(kappa)})^T = (Rp)(x) (Rq)(x) for
// the reduction operator R, the Gram matrix of the Sobolev families equals
// the classical Jacobi / Laguerre Gram matrix and is diagonal.

#include <Eigen/Core>

#include <cmath>
#include <cstddef>
#include <string>
#include <type_traits>
#include <vector>

#include "hypersob/diffops.hpp"
#include "hypersob/error.hpp"
#include "hypersob/hypergeometric.hpp"
#include "hypersob/parallel.hpp"
#include "hypersob/polynomial.hpp"
#include "hypersob/quadrature.hpp"

namespace hypersob {

enum class SobolevFamily { jacobi_type, laguerre_type };

/// Weight used for the Jacobi-type form on [0,1].
enum class JacobiWeight {
    hypergeometric,  ///< x^alpha (1-x)^beta, the weight of F(-n, n+alpha+beta+1; alpha+1; x)
    as_displayed,    ///< (1-x)^alpha (1+x)^beta
};

enum class InnerPath {
    matrix,   ///< derivative vectors contracted with M(x)
    reduced,  ///< product of reduced polynomials
};

std::string to_string(JacobiWeight w);
std::string to_string(SobolevFamily f);

/// c(x)^T c(x) at one point; c_j evaluated exactly for rational operators.
template <Scalar T>
Eigen::MatrixXd moment_matrix_eval(const DiffOperator<T>& op, double x) {
    const auto coeffs = op.coefficients();
    Eigen::VectorXd c(coeffs.size());
    for (std::size_t j = 0; j < coeffs.size(); ++j) c(static_cast<Eigen::Index>(j)) = eval_at(coeffs[j], x);
    return c * c.transpose();
}

template <Scalar T>
class SobolevForm {
public:
    /// Rule size is max_degree + 2 nodes, exact for every Gram entry up to max_degree.
    static SobolevForm jacobi_type(PParams<T> params, int max_degree,
                                   JacobiWeight weight = JacobiWeight::hypergeometric) {
        validate(params);
        SobolevForm f(reduction_operator(params), max_degree);
        f.family_ = SobolevFamily::jacobi_type;
        f.weight_kind_ = weight;
        const double a = to_double(params.alpha);
        const double b = to_double(params.beta);
        f.rule_ = weight == JacobiWeight::hypergeometric ? gauss_jacobi01(max_degree + 2, a, b)
                                                         : gauss_jacobi_pm01(max_degree + 2, a, b);
        f.p_params_ = std::move(params);
        f.cache_coefficients();
        return f;
    }

    static SobolevForm laguerre_type(LParams<T> params, int max_degree) {
        validate(params);
        SobolevForm f(reduction_operator(params), max_degree);
        f.family_ = SobolevFamily::laguerre_type;
        f.rule_ = gauss_laguerre(max_degree + 2, to_double(params.alpha));
        f.l_params_ = std::move(params);
        f.cache_coefficients();
        return f;
    }

    SobolevFamily family() const { return family_; }
    JacobiWeight jacobi_weight() const { return weight_kind_; }
    const DiffOperator<T>& reduction() const { return reduction_; }
    int kappa() const { return reduction_.order(); }
    int max_degree() const { return max_degree_; }
    const QuadRule& rule() const { return rule_; }

    Polynomial<T> member(unsigned n) const {
        return family_ == SobolevFamily::jacobi_type ? sobolev_jacobi(n, p_params_) : sobolev_laguerre(n, l_params_);
    }

    /// Reduction through the diagonal monomial action.
    Polynomial<T> reduce(const Polynomial<T>& p) const {
        return family_ == SobolevFamily::jacobi_type ? hypersob::reduce(p_params_, p) : hypersob::reduce(l_params_, p);
    }

    /// Node values used by the matrix path: exact at the binary64 node for
    /// the rational backend, so the contraction with M(x) rounds only once.
    using NodeValue = std::conditional_t<is_exact_v<T>, Rational, double>;
    using DerivativeStack = std::vector<std::vector<NodeValue>>;

    /// [j][i] = p^{(j)}(node_i), j = 0..kappa.
    DerivativeStack derivative_values(const Polynomial<T>& p) const {
        DerivativeStack out;
        Polynomial<T> dp = p;
        for (int j = 0; j <= kappa(); ++j) {
            std::vector<NodeValue> row(rule_.size());
            for (std::size_t i = 0; i < rule_.size(); ++i) row[i] = node_value(dp, i);
            out.push_back(std::move(row));
            dp = derivative(dp);
        }
        return out;
    }

    std::vector<double> reduced_values(const Polynomial<T>& p) const {
        const auto r = reduce(p);
        std::vector<double> out(rule_.size());
        for (std::size_t i = 0; i < rule_.size(); ++i) out[i] = eval_at(r, rule_.nodes[i]);
        return out;
    }

    /// sum_i w_i  u(x_i)^T M(x_i) v(x_i)
    double contract(const DerivativeStack& u, const DerivativeStack& v) const {
        const std::size_t k = c_values_.size();
        double acc = 0.0;
        NodeValue local, row, m_ab;
        for (std::size_t i = 0; i < rule_.size(); ++i) {
            local = 0;
            for (std::size_t a = 0; a < k; ++a) {
                row = 0;
                for (std::size_t b = 0; b < k; ++b) {
                    m_ab = c_values_[a][i] * c_values_[b][i];
                    row += m_ab * v[b][i];
                }
                local += u[a][i] * row;
            }
            acc += rule_.weights[i] * to_double(local);
        }
        return acc;
    }

    /// sum_i w_i u(x_i) v(x_i)
    double contract(const std::vector<double>& u, const std::vector<double>& v) const {
        double acc = 0.0;
        for (std::size_t i = 0; i < rule_.size(); ++i) acc += rule_.weights[i] * u[i] * v[i];
        return acc;
    }

    /// Integral of (p,...,p^{(kappa)}) M (q,...,q^{(kappa)})^T against the weight.
    double inner(const Polynomial<T>& p, const Polynomial<T>& q) const {
        require_exact(p, q);
        return contract(derivative_values(p), derivative_values(q));
    }

    /// Integral of (Rp)(Rq) against the weight.
    double inner_reduced(const Polynomial<T>& p, const Polynomial<T>& q) const {
        require_exact(p, q);
        return contract(reduced_values(p), reduced_values(q));
    }

    Eigen::MatrixXd moment_matrix(double x) const { return moment_matrix_eval(reduction_, x); }

private:
    SobolevForm(DiffOperator<T> op, int max_degree) : reduction_(std::move(op)), max_degree_(max_degree) {
        if (max_degree < 0) throw InvalidParameter("max_degree must be non-negative");
    }

    NodeValue node_value(const Polynomial<T>& p, std::size_t i) const {
        if constexpr (is_exact_v<T>) {
            return eval(p, exact_nodes_[i]);
        } else {
            return eval(p, rule_.nodes[i]);
        }
    }

    void cache_coefficients() {
        if constexpr (is_exact_v<T>) {
            exact_nodes_.assign(rule_.nodes.begin(), rule_.nodes.end());
        }
        c_values_.clear();
        for (const auto& c : reduction_.coefficients()) {
            std::vector<NodeValue> row(rule_.size());
            for (std::size_t i = 0; i < rule_.size(); ++i) row[i] = node_value(c, i);
            c_values_.push_back(std::move(row));
        }
    }

    void require_exact(const Polynomial<T>& p, const Polynomial<T>& q) const {
        if (p.degree() + q.degree() > rule_.exactness) {
            throw RuleTooShort("degrees " + std::to_string(p.degree()) + " + " + std::to_string(q.degree()) +
                               " exceed the rule exactness " + std::to_string(rule_.exactness));
        }
    }

    SobolevFamily family_ = SobolevFamily::jacobi_type;
    JacobiWeight weight_kind_ = JacobiWeight::hypergeometric;
    DiffOperator<T> reduction_;
    int max_degree_ = 0;
    QuadRule rule_;
    PParams<T> p_params_{};
    LParams<T> l_params_{};
    std::vector<Rational> exact_nodes_;
    std::vector<std::vector<NodeValue>> c_values_;
};

struct GramReport {
    int size = 0;  ///< N+1 members, degrees 0..N
    Eigen::MatrixXd matrix;
    std::vector<double> diagonal;
    /// max_{n != m} |G[n][m]| / min_n G[n][n]
    double max_offdiag_ratio = 0.0;
    /// max_{n,m} |G[n][m] - G[m][n]| / max |G|
    double symmetry_error = 0.0;
    bool diagonal_positive = false;

    bool passed(double threshold = 1e-10) const { return diagonal_positive && max_offdiag_ratio < threshold; }
};

GramReport summarize_gram(Eigen::MatrixXd matrix);

/// Gram matrix of the first N+1 family members. Members are built and
/// evaluated independently, on up to `threads` workers.
template <Scalar T>
GramReport gram(const SobolevForm<T>& form, int n_max, InnerPath path = InnerPath::matrix, unsigned threads = 1) {
    if (n_max < 1) throw InvalidParameter("gram needs N >= 1");
    if (n_max > form.max_degree()) {
        throw RuleTooShort("form was built for degree " + std::to_string(form.max_degree()) + ", gram needs " +
                           std::to_string(n_max));
    }
    const std::size_t count = static_cast<std::size_t>(n_max) + 1;
    std::vector<typename SobolevForm<T>::DerivativeStack> deriv(count);
    std::vector<std::vector<double>> reduced(count);
    parallel_for(count, threads, [&](std::size_t n) {
        const auto p = form.member(static_cast<unsigned>(n));
        if (path == InnerPath::matrix) {
            deriv[n] = form.derivative_values(p);
        } else {
            reduced[n] = form.reduced_values(p);
        }
    });

    Eigen::MatrixXd g(count, count);
    parallel_for(count, threads, [&](std::size_t n) {
        for (std::size_t m = 0; m < count; ++m) {
            g(n, m) = path == InnerPath::matrix ? form.contract(deriv[n], deriv[m]) : form.contract(reduced[n], reduced[m]);
        }
    });
    return summarize_gram(std::move(g));
}

/// max_{n,m} |A[n][m] - B[n][m]| / sqrt(B[n][n] B[m][m]).
double gram_deviation(const GramReport& a, const GramReport& b);

extern template class SobolevForm<Rational>;
extern template class SobolevForm<double>;

}  // namespace hypersob
