#include "hypersob/polynomial.hpp"

namespace hypersob {

double eval_at(const Polynomial<Rational>& p, double x) {
    const Rational xq(x);
    Rational acc(0);
    const auto a = p.coefficients();
    for (auto it = a.rbegin(); it != a.rend(); ++it) {
        acc *= xq;
        acc += *it;
    }
    return acc.get_d();
}

template class Polynomial<Rational>;
template class Polynomial<double>;

}  // namespace hypersob
