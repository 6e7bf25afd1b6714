#include <gtest/gtest.h>

#include <hypersob/polynomial.hpp>

#include "random.hpp"

using namespace hypersob;
using hypersob::testing::q;
using P = Polynomial<Rational>;

TEST(Polynomial, TrimsTrailingZeros) {
    const P p{q(1), q(2), q(0), q(0)};
    EXPECT_EQ(p.degree(), 1);
    EXPECT_TRUE(P({q(0)}).is_zero());
    EXPECT_EQ(P{}.degree(), -1);
}

TEST(Polynomial, EvalExamples) {
    EXPECT_EQ(eval(P{}, q(7)), 0);
    EXPECT_EQ(eval(P{q(1), q(-1, 2)}, q(2)), 0);
    EXPECT_EQ(eval(P{q(1), q(-2)}, q(1, 2)), 0);
}

TEST(Polynomial, ComplexEval) {
    const Polynomial<double> p{1.0, 0.0, 1.0};
    EXPECT_NEAR(std::abs(eval(p, std::complex<double>(0.0, 1.0))), 0.0, 1e-15);
}

TEST(Polynomial, ExactEvalAtDouble) {
    // x^2 - 2x + 1 near x = 1 cancels badly in float Horner.
    const P p{q(1), q(-2), q(1)};
    const double x = 1.0 + std::ldexp(1.0, -30);
    EXPECT_EQ(eval_at(p, x), std::ldexp(1.0, -60));
}

TEST(Polynomial, DerivativeExamples) {
    EXPECT_TRUE(derivative(P::constant(q(5)), 1).is_zero());
    EXPECT_EQ(derivative(P::monomial(3), 2), (P{q(0), q(6)}));
    const P p{q(1), q(2), q(3)};
    EXPECT_EQ(derivative(p, 0), p);
    EXPECT_TRUE(derivative(p, 5).is_zero());
}

TEST(Polynomial, RingExamples) {
    const P p{q(3), q(-1, 2), q(4)};
    EXPECT_EQ(mul(p, P::constant(q(1))), p);
    EXPECT_TRUE(add(p, scale(p, q(-1))).is_zero());
    EXPECT_EQ(mul(P{q(1), q(-1)}, P{q(1), q(1)}), (P{q(1), q(0), q(-1)}));
    EXPECT_EQ(shift_mul_x(P{q(2)}, 3), P::monomial(3, q(2)));
}

TEST(PolynomialProperty, RingAxioms) {
    hypersob::testing::Sampler s(11);
    for (int trial = 0; trial < 40; ++trial) {
        const auto a = s.polynomial(static_cast<int>(s.integer(0, 12)));
        const auto b = s.polynomial(static_cast<int>(s.integer(0, 12)));
        const auto c = s.polynomial(static_cast<int>(s.integer(0, 12)));
        EXPECT_EQ(a + b, b + a);
        EXPECT_EQ(a * b, b * a);
        EXPECT_EQ((a + b) + c, a + (b + c));
        EXPECT_EQ((a * b) * c, a * (b * c));
        EXPECT_EQ(a * (b + c), a * b + a * c);
    }
}

TEST(PolynomialProperty, ProductRule) {
    hypersob::testing::Sampler s(12);
    for (int trial = 0; trial < 40; ++trial) {
        const auto a = s.polynomial(static_cast<int>(s.integer(0, 12)));
        const auto b = s.polynomial(static_cast<int>(s.integer(0, 12)));
        EXPECT_EQ(derivative(a * b), derivative(a) * b + a * derivative(b));
    }
}

TEST(Polynomial, ConvertRoundsOnce) {
    const P p{q(1, 3), q(2, 7)};
    const auto f = to_float(p);
    EXPECT_EQ(f.coefficient(0), 1.0 / 3.0);
    EXPECT_EQ(f.coefficient(1), 2.0 / 7.0);
}
