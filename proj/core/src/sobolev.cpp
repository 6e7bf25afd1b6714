#include "hypersob/sobolev.hpp"

#include <algorithm>
#include <limits>

namespace hypersob {

std::string to_string(JacobiWeight w) {
    return w == JacobiWeight::hypergeometric ? "x^alpha(1-x)^beta" : "(1-x)^alpha(1+x)^beta";
}

std::string to_string(SobolevFamily f) { return f == SobolevFamily::jacobi_type ? "P" : "L"; }

GramReport summarize_gram(Eigen::MatrixXd matrix) {
    GramReport r;
    r.size = static_cast<int>(matrix.rows());
    r.diagonal.resize(r.size);
    double min_diag = std::numeric_limits<double>::infinity();
    r.diagonal_positive = true;
    for (int n = 0; n < r.size; ++n) {
        r.diagonal[n] = matrix(n, n);
        min_diag = std::min(min_diag, matrix(n, n));
        if (!(matrix(n, n) > 0.0)) r.diagonal_positive = false;
    }
    double max_off = 0.0;
    double max_abs = 0.0;
    double max_asym = 0.0;
    for (int n = 0; n < r.size; ++n) {
        for (int m = 0; m < r.size; ++m) {
            max_abs = std::max(max_abs, std::fabs(matrix(n, m)));
            max_asym = std::max(max_asym, std::fabs(matrix(n, m) - matrix(m, n)));
            if (n != m) max_off = std::max(max_off, std::fabs(matrix(n, m)));
        }
    }
    r.max_offdiag_ratio = min_diag > 0.0 ? max_off / min_diag : std::numeric_limits<double>::infinity();
    r.symmetry_error = max_abs > 0.0 ? max_asym / max_abs : 0.0;
    r.matrix = std::move(matrix);
    return r;
}

double gram_deviation(const GramReport& a, const GramReport& b) {
    if (a.size != b.size) throw InvalidParameter("gram_deviation: size mismatch");
    double worst = 0.0;
    for (int n = 0; n < a.size; ++n) {
        for (int m = 0; m < a.size; ++m) {
            const double scale = std::sqrt(std::fabs(b.matrix(n, n) * b.matrix(m, m)));
            worst = std::max(worst, std::fabs(a.matrix(n, m) - b.matrix(n, m)) / scale);
        }
    }
    return worst;
}

template class SobolevForm<Rational>;
template class SobolevForm<double>;

}  // namespace hypersob
