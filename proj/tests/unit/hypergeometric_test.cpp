#include <gtest/gtest.h>

#include <hypersob/hypergeometric.hpp>

#include "random.hpp"

using namespace hypersob;
using hypersob::testing::q;
using P = Polynomial<Rational>;

TEST(Pochhammer, Examples) {
    EXPECT_EQ(pochhammer(q(5, 3), 0), 1);
    EXPECT_EQ(pochhammer(q(3), 4), 360);
    // (1)_4 = 4^2 (1/2)_2 (1)_2
    EXPECT_EQ(pochhammer(q(1), 4), 16 * pochhammer(q(1, 2), 2) * pochhammer(q(1), 2));
}

TEST(PochhammerProperty, DuplicationFormula) {
    hypersob::testing::Sampler s(21);
    for (int trial = 0; trial < 30; ++trial) {
        const auto a = s.open_rational(0, 5);
        const auto k = static_cast<unsigned>(s.integer(0, 8));
        Rational four_k = 1;
        for (unsigned i = 0; i < k; ++i) four_k *= 4;
        EXPECT_EQ(pochhammer<Rational>(a, 2 * k),
                  four_k * pochhammer<Rational>(a / 2, k) * pochhammer<Rational>((a + 1) / 2, k));
    }
}

TEST(TerminatingSeries, Examples) {
    const std::vector<Rational> none;
    EXPECT_EQ(terminating_series<Rational>(0, std::vector{q(3)}, std::vector{q(2)}), P::constant(q(1)));
    EXPECT_EQ(terminating_series<Rational>(1, std::vector{q(1)}, std::vector{q(1), q(2)}), (P{q(1), q(-1, 2)}));
    EXPECT_EQ(terminating_series<Rational>(2, none, std::vector{q(1)}), (P{q(1), q(-2), q(1, 2)}));
}

TEST(TerminatingSeries, RejectsNonPositiveIntegerDenominator) {
    const std::vector<Rational> none;
    EXPECT_THROW(terminating_series<Rational>(3, none, std::vector{q(-2)}), NonPositiveIntegerDenominator);
    EXPECT_THROW(terminating_series<Rational>(3, none, std::vector{q(0)}), NonPositiveIntegerDenominator);
}

TEST(Families, ClassicalExamples) {
    EXPECT_EQ(laguerre<Rational>(1, q(0)), (P{q(1), q(-1)}));
    EXPECT_EQ(jacobi<Rational>(0, q(1, 3), q(2)), P::constant(q(1)));
    EXPECT_EQ(jacobi<Rational>(1, q(0), q(0)), (P{q(1), q(-2)}));
}

TEST(Families, SobolevExamples) {
    const PParams<Rational> pp{q(0), q(0), {q(0)}, {1}};
    EXPECT_EQ(sobolev_jacobi(1, pp), (P{q(1), q(-1)}));
    EXPECT_EQ(sobolev_jacobi(0, pp), P::constant(q(1)));
    const LParams<Rational> lp{q(0), {q(0)}, {1}};
    EXPECT_EQ(sobolev_laguerre(1, lp), (P{q(1), q(-1, 2)}));
    EXPECT_EQ(sobolev_laguerre(0, lp), P::constant(q(1)));
}

TEST(Families, HyperLaguerreDegreeOne) {
    const GenParams<Rational> g{q(0), {q(2), q(3, 5)}, {q(7, 2)}};
    EXPECT_EQ(hyper_laguerre(1, g), (P{q(1), -(q(2) * q(3, 5)) / q(7, 2)}));
}

TEST(Families, ParameterValidation) {
    EXPECT_THROW(sobolev_jacobi(2, PParams<Rational>{q(-1), q(0), {q(0)}, {1}}), InvalidParameter);
    EXPECT_THROW(sobolev_jacobi(2, PParams<Rational>{q(0), q(0), {q(-3, 2)}, {1}}), InvalidParameter);
    EXPECT_THROW(sobolev_laguerre(2, LParams<Rational>{q(0), {q(0), q(1)}, {1}}), InvalidParameter);
    EXPECT_THROW(sobolev_laguerre(2, LParams<Rational>{q(0), {}, {}}), InvalidParameter);
    EXPECT_THROW(hyper_laguerre(2, GenParams<Rational>{q(0), {q(1)}, {q(-1)}}), NonPositiveIntegerDenominator);
    EXPECT_THROW(hyper_laguerre(2, GenParams<Rational>{q(0), {q(-1, 2)}, {q(1)}}), InvalidParameter);
}

TEST(Families, LooseRangeForConstruction) {
    // a in (-1, 0) is admitted for plain construction.
    const GenParams<Rational> g{q(-1, 2), {q(1)}, {q(2)}};
    EXPECT_EQ(hyper_jacobi(3, g).degree(), 3);
}

TEST(Families, DegenerateGuard) {
    // An upper parameter of -1 stops the degree-3 series after the linear term.
    EXPECT_THROW(detail::full_degree_series<Rational>(3, {q(-1)}, {q(2)}), DegenerateFamily);
    EXPECT_NO_THROW(detail::full_degree_series<Rational>(3, {q(-3)}, {q(2)}));
}

TEST(FamiliesProperty, DegreeAndConstantTerm) {
    hypersob::testing::Sampler s(31);
    for (int trial = 0; trial < 10; ++trial) {
        const auto pp = s.p_params(static_cast<std::size_t>(s.integer(1, 3)), 0, 3);
        const auto lp = s.l_params(static_cast<std::size_t>(s.integer(1, 3)), 0, 3);
        for (unsigned n = 0; n <= 12; ++n) {
            const auto a = sobolev_jacobi(n, pp);
            const auto b = sobolev_laguerre(n, lp);
            EXPECT_EQ(a.degree(), static_cast<int>(n));
            EXPECT_EQ(b.degree(), static_cast<int>(n));
            EXPECT_EQ(a.coefficient(0), 1);
            EXPECT_EQ(b.coefficient(0), 1);
        }
    }
}

TEST(FamiliesProperty, LaguerreTypeSignsAlternate) {
    hypersob::testing::Sampler s(32);
    for (int trial = 0; trial < 10; ++trial) {
        LParams<Rational> lp{s.open_rational(0, 4), {s.open_rational(0, 3), s.open_rational(0, 3)}, s.kappas(2, 0, 3)};
        const auto p = sobolev_laguerre(10, lp);
        for (std::size_t k = 0; k < p.size(); ++k) EXPECT_EQ(sgn(p.coefficient(k)), k % 2 == 0 ? 1 : -1);
    }
}

TEST(FamiliesProperty, ZeroKappaGivesClassical) {
    hypersob::testing::Sampler s(33);
    for (int trial = 0; trial < 10; ++trial) {
        const auto pp = s.p_params(static_cast<std::size_t>(s.integer(1, 3)), 0, 0);
        const auto lp = s.l_params(static_cast<std::size_t>(s.integer(1, 3)), 0, 0);
        for (unsigned n = 0; n <= 20; ++n) {
            EXPECT_EQ(sobolev_jacobi(n, pp), jacobi(n, pp.alpha, pp.beta));
            EXPECT_EQ(sobolev_laguerre(n, lp), laguerre(n, lp.alpha));
        }
    }
}

TEST(FamiliesProperty, SpecializationMaps) {
    hypersob::testing::Sampler s(34);
    for (int trial = 0; trial < 10; ++trial) {
        const auto pp = s.p_params(static_cast<std::size_t>(s.integer(1, 3)), 0, 3);
        const auto lp = s.l_params(static_cast<std::size_t>(s.integer(1, 3)), 0, 3);
        const auto gp = to_general(pp);
        const auto gl = to_general(lp);
        EXPECT_EQ(gp.a, pp.alpha + pp.beta + 1);
        for (unsigned n = 0; n <= 12; ++n) {
            EXPECT_EQ(hyper_jacobi(n, gp), sobolev_jacobi(n, pp));
            EXPECT_EQ(hyper_laguerre(n, gl), sobolev_laguerre(n, lp));
        }
    }
}

TEST(Families, FloatBackendMatchesExact) {
    const PParams<Rational> pp{q(1, 2), q(1, 3), {q(1, 2), q(-1, 3)}, {2, 1}};
    const auto exact = to_float(sobolev_jacobi(8, pp));
    const auto approx = sobolev_jacobi(8, convert<double>(pp));
    ASSERT_EQ(exact.degree(), approx.degree());
    for (std::size_t k = 0; k < exact.size(); ++k) {
        EXPECT_NEAR(approx.coefficient(k), exact.coefficient(k), 1e-12 * std::fabs(exact.coefficient(k)));
    }
}
