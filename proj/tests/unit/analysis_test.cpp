#include <gtest/gtest.h>

#include <hypersob/analysis.hpp>

#include <cmath>

#include "random.hpp"

using namespace hypersob;
using hypersob::testing::q;
using hypersob::testing::Sampler;
using P = Polynomial<Rational>;

// --- series and generating functions -------------------------------------

TEST(Series, ElementaryFunctions) {
    const std::vector<double> none;
    EXPECT_NEAR(std::abs(hypergeometric_series(none, none, cplx(0.7, -0.2)) - std::exp(cplx(0.7, -0.2))), 0.0, 1e-15);
    const std::vector<double> one{1.0};
    EXPECT_NEAR(std::abs(hypergeometric_series(one, none, cplx(0.5)) - 2.0), 0.0, 1e-14);
}

TEST(Series, DomainChecks) {
    const std::vector<double> none;
    const std::vector<double> one{1.0};
    const std::vector<double> two{1.0, 2.0};
    EXPECT_THROW(hypergeometric_series(one, none, cplx(1.0)), DomainViolation);
    EXPECT_THROW(hypergeometric_series(two, none, cplx(0.1)), DomainViolation);
    EXPECT_NO_THROW(hypergeometric_series(two, none, cplx(0.0)));
}

TEST(GfJacobi, AdmissibleRegion) {
    EXPECT_TRUE(jacobi_gf_admissible(cplx(0.3), cplx(0.2)));
    EXPECT_FALSE(jacobi_gf_admissible(cplx(0.0), cplx(0.5)));
    EXPECT_FALSE(jacobi_gf_admissible(cplx(1.0), cplx(0.2)));
    for (const auto& [x, t] : jacobi_gf_samples(20)) EXPECT_TRUE(jacobi_gf_admissible(x, t));
}

TEST(GfJacobi, DegenerateArguments) {
    const GenParams<Rational> g{q(3, 2), {q(1, 2)}, {q(2), q(5, 3)}};
    const auto at_zero_x = gf_check_hyper_jacobi(g, cplx(0.0), cplx(0.3, 0.1), 40);
    EXPECT_NEAR(std::abs(at_zero_x.lhs - std::pow(1.0 - cplx(0.3, 0.1), -1.5)), 0.0, 1e-14);
    EXPECT_LT(at_zero_x.gap, 1e-10);
    const auto at_zero_t = gf_check_hyper_jacobi(g, cplx(0.4), cplx(0.0), 5);
    EXPECT_EQ(at_zero_t.lhs, cplx(1.0));
    EXPECT_EQ(at_zero_t.rhs_partial, cplx(1.0));
}

TEST(GfJacobi, SampledGaps) {
    const GenParams<Rational> g{q(3, 2), {q(1, 2)}, {q(2), q(5, 3)}};
    for (const auto& [x, t] : jacobi_gf_samples(20)) EXPECT_LT(gf_check_hyper_jacobi(g, x, t, 40).gap, 1e-10);
}

TEST(GfJacobi, GapShrinksWithTruncation) {
    const GenParams<Rational> g{q(2), {q(1)}, {q(3, 2), q(2)}};
    const auto [x, t] = jacobi_gf_samples(3).back();
    double prev = INFINITY;
    for (int n : {5, 10, 20, 40}) {
        const double gap = gf_check_hyper_jacobi(g, x, t, n).gap;
        EXPECT_LT(gap, prev + 1e-15);
        prev = gap;
    }
}

TEST(GfJacobi, Preconditions) {
    const GenParams<Rational> too_many{q(1), {q(1), q(2)}, {q(2), q(3)}};
    EXPECT_THROW(gf_check_hyper_jacobi(too_many, cplx(0.1), cplx(0.1), 10), DomainViolation);
    const GenParams<Rational> negative_a{q(-1, 2), {q(1)}, {q(2), q(3)}};
    EXPECT_THROW(gf_check_hyper_jacobi(negative_a, cplx(0.1), cplx(0.1), 10), DomainViolation);
    const GenParams<Rational> ok{q(1), {q(1)}, {q(2), q(3)}};
    EXPECT_THROW(gf_check_hyper_jacobi(ok, cplx(2.0), cplx(0.2), 10), DomainViolation);
}

TEST(GfJacobi, SobolevSpecialization) {
    const PParams<Rational> pp{q(1, 2), q(1, 3), {q(1, 4)}, {1}};
    for (const auto& [x, t] : jacobi_gf_samples(6)) EXPECT_LT(gf_check_sobolev_jacobi(pp, x, t, 40).gap, 1e-10);
}

TEST(GfLaguerre, ZeroX) {
    const GenParams<Rational> g{q(0), {q(1, 2)}, {q(2), q(3)}};
    const auto r = gf_check_hyper_laguerre(g, cplx(0.0), cplx(0.7, 0.3), 40);
    EXPECT_NEAR(std::abs(r.lhs - std::exp(cplx(0.7, 0.3))), 0.0, 1e-14);
    EXPECT_LT(r.gap, 1e-12);
}

TEST(GfLaguerre, SobolevExample) {
    const LParams<Rational> lp{q(0), {q(0)}, {1}};
    EXPECT_LT(gf_check_sobolev_laguerre(lp, cplx(1.0), cplx(0.5), 30).gap, 1e-12);
}

TEST(GfLaguerre, SampledGaps) {
    const GenParams<Rational> g1{q(0), {q(1, 2), q(3)}, {q(2), q(5, 3)}};
    for (const auto& [x, t] : laguerre_gf_samples(20, false)) EXPECT_LT(gf_check_hyper_laguerre(g1, x, t, 40).gap, 1e-10);
    const GenParams<Rational> g2{q(0), {q(1, 2), q(3)}, {q(2)}};
    for (const auto& [x, t] : laguerre_gf_samples(20, true)) EXPECT_LT(gf_check_hyper_laguerre(g2, x, t, 40).gap, 1e-10);
}

TEST(GfLaguerre, Preconditions) {
    const GenParams<Rational> g{q(0), {q(1), q(2)}, {q(2)}};
    EXPECT_THROW(gf_check_hyper_laguerre(g, cplx(1.5), cplx(0.2), 10), DomainViolation);
    const GenParams<Rational> too_many{q(0), {q(1), q(2), q(3)}, {q(2)}};
    EXPECT_THROW(gf_check_hyper_laguerre(too_many, cplx(0.1), cplx(0.1), 10), DomainViolation);
}

TEST(GfLaguerre, TaylorRoute) {
    const LParams<Rational> lp{q(1, 2), {q(1, 4)}, {1}};
    const auto g = detail::float_gen(to_general(lp));
    const cplx x(1.3, -0.4);
    for (unsigned n = 0; n <= 6; ++n) {
        const auto c = taylor_coeff_adaptive([&](cplx t) { return detail::laguerre_gf_lhs(g, x, t); },
                                             static_cast<int>(n), 0.5);
        const cplx direct = eval(to_float(sobolev_laguerre(n, lp)), x);
        EXPECT_NEAR(std::abs(c.value * std::tgamma(n + 1.0) - direct), 0.0, 1e-10);
    }
}

// --- integral representations ---------------------------------------------

TEST(IntegralRep, DegreeZero) {
    const LParams<Rational> lp{q(1, 2), {q(1, 4)}, {1}};
    EXPECT_NEAR(std::abs(integral_rep_sobolev_laguerre(0, lp, cplx(2.0)).value - 1.0), 0.0, 1e-12);
    const PParams<Rational> pp{q(1, 2), q(1, 2), {q(0)}, {1}};
    EXPECT_NEAR(std::abs(integral_rep_sobolev_jacobi(0, pp, cplx(0.1)).value - 1.0), 0.0, 1e-12);
}

TEST(IntegralRep, LaguerreExample) {
    const LParams<Rational> lp{q(1, 2), {q(1, 4)}, {1}};
    const auto r = integral_rep_sobolev_laguerre(3, lp, cplx(2.0));
    EXPECT_TRUE(r.converged);
    EXPECT_NEAR(std::abs(r.value - eval(to_float(sobolev_laguerre(3, lp)), cplx(2.0))), 0.0, 1e-9);
}

TEST(IntegralRep, JacobiExample) {
    const PParams<Rational> pp{q(1, 2), q(1, 2), {q(0)}, {1}};
    const auto r = integral_rep_sobolev_jacobi(2, pp, cplx(0.125));
    EXPECT_TRUE(r.converged);
    EXPECT_NEAR(std::abs(r.value - eval(to_float(sobolev_jacobi(2, pp)), cplx(0.125))), 0.0, 1e-9);
}

TEST(IntegralRep, Preconditions) {
    const PParams<Rational> pp{q(1, 2), q(1, 2), {q(0)}, {1}};
    EXPECT_THROW(integral_rep_sobolev_jacobi(2, pp, cplx(0.3)), DomainViolation);
    const PParams<Rational> low{q(-3, 4), q(-1, 2), {q(0)}, {1}};
    EXPECT_THROW(integral_rep_sobolev_jacobi(2, low, cplx(0.1)), DomainViolation);
}

TEST(IntegralRepProperty, RandomInputs) {
    Sampler s(71);
    for (int trial = 0; trial < 8; ++trial) {
        const auto lp = s.l_params(static_cast<std::size_t>(s.integer(1, 3)), 0, 2);
        auto pp = s.p_params(static_cast<std::size_t>(s.integer(1, 3)), 0, 2);
        if (pp.alpha + pp.beta <= -1) pp.beta = 0;
        const cplx xl = std::polar(s.uniform(0.0, 3.0), s.uniform(0.0, 6.28));
        const cplx xp = std::polar(s.uniform(0.0, 0.24), s.uniform(0.0, 6.28));
        for (unsigned n = 0; n <= 6; ++n) {
            const cplx l = eval(to_float(sobolev_laguerre(n, lp)), xl);
            const cplx p = eval(to_float(sobolev_jacobi(n, pp)), xp);
            EXPECT_NEAR(std::abs(integral_rep_sobolev_laguerre(n, lp, xl).value - l), 0.0, 1e-9);
            EXPECT_NEAR(std::abs(integral_rep_sobolev_jacobi(n, pp, xp).value - p), 0.0, 1e-9);
        }
    }
}

TEST(BetaStep, DegreeZero) {
    const PParams<Rational> pp{q(1, 2), q(1, 3), {q(1, 4)}, {2}};
    EXPECT_NEAR(std::abs(beta_step(0, pp, cplx(0.5)) - 1.0), 0.0, 1e-14);
}

TEST(BetaStep, JacobiFromClassical) {
    const PParams<Rational> pp{q(1, 2), q(1, 3), {q(1, 4)}, {2}};
    const cplx z(0.6, 0.2);
    EXPECT_NEAR(std::abs(beta_step(3, pp, z) - eval(to_float(sobolev_jacobi(3, pp)), z)), 0.0, 1e-11);
}

TEST(BetaStep, LaguerreChain) {
    const LParams<Rational> lp{q(1, 3), {q(1, 2), q(-1, 4)}, {1, 2}};
    const cplx z(1.7, -0.5);
    const cplx direct = eval(to_float(sobolev_laguerre(4, lp)), z);
    EXPECT_NEAR(std::abs(beta_step(4, lp, z) - direct), 0.0, 1e-11);
    EXPECT_NEAR(std::abs(beta_nested(4, lp, z) - direct), 0.0, 1e-11);
}

TEST(BetaStep, Preconditions) {
    const PParams<Rational> zero_kappa{q(1, 2), q(1, 3), {q(1, 4)}, {0}};
    EXPECT_THROW(beta_step(2, zero_kappa, cplx(0.5)), DomainViolation);
    const PParams<Rational> pp{q(1, 2), q(1, 3), {q(1, 4)}, {1}};
    EXPECT_THROW(beta_step(2, pp, cplx(1.0)), DomainViolation);
}

// --- five-term recurrence --------------------------------------------------

TEST(Recurrence, UnitLowerParameters) {
    const auto r = recurrence_coeffs<Rational>({q(1, 2), q(3)}, {q(1), q(1), q(1)});
    EXPECT_EQ(r.b1, 0);
    EXPECT_EQ(r.b2, 0);
    EXPECT_EQ(r.b3, 0);
    EXPECT_EQ(r.c, 6);
    EXPECT_EQ(r.b_hat, 7);
    EXPECT_EQ(r.d, 1);
    EXPECT_EQ(r.alpha_hat, q(9, 2));
}

TEST(RecurrenceProperty, ProductForm) {
    Sampler s(81);
    for (int trial = 0; trial < 30; ++trial) {
        const std::array<Rational, 3> b{s.open_rational(0, 5), s.open_rational(0, 5), s.open_rational(0, 5)};
        const std::array<Rational, 2> a{s.open_rational(0, 5), s.open_rational(0, 5)};
        const auto r = recurrence_coeffs(a, b);
        EXPECT_EQ(r.d, b[0] * b[1] * b[2]);
        EXPECT_EQ(r.alpha_hat, 1 + a[0] + a[1]);
    }
}

TEST(Recurrence, PositiveUnderLowerBound) {
    Sampler s(82);
    for (int trial = 0; trial < 20; ++trial) {
        const std::array<Rational, 3> b{s.open_rational(1, 5), s.open_rational(1, 5), s.open_rational(1, 5)};
        const auto r = recurrence_coeffs<Rational>({q(1), q(1)}, b);
        for (const auto& v : {r.b1, r.b2, r.b3, r.c, r.b_hat, r.d}) EXPECT_GT(v, 0);
    }
}

TEST(Recurrence, DegreeOneFromFirstStep) {
    // k = 0 leaves -d L1 + d L0 = x a1 a2 L0.
    const GenParams<Rational> g{q(0), {q(2, 3), q(5)}, {q(3, 2), q(2), q(7, 4)}};
    const auto r = recurrence_coeffs(g);
    const auto l1 = hyper_laguerre(1, g);
    EXPECT_EQ(l1, (P{q(1), -(r.alpha_product / r.d)}));
    EXPECT_TRUE(recurrence_residual(0, g).is_zero());
}

TEST(RecurrenceProperty, ResidualVanishes) {
    Sampler s(83);
    for (int trial = 0; trial < 5; ++trial) {
        const GenParams<Rational> g{q(0),
                                    {s.open_rational(0, 4), s.open_rational(0, 4)},
                                    {s.open_rational(1, 5), s.open_rational(1, 5), s.open_rational(1, 5)}};
        for (int k = 0; k <= 15; ++k) EXPECT_TRUE(recurrence_residual(k, g).is_zero()) << "k=" << k;
    }
}

TEST(Recurrence, LaguerreTypeSpecialization) {
    Sampler s(84);
    for (int trial = 0; trial < 3; ++trial) {
        const auto lp = s.l_params(2, 0, 3);
        for (int k = 0; k <= 15; ++k) EXPECT_TRUE(recurrence_residual(k, lp).is_zero()) << "k=" << k;
    }
    EXPECT_THROW(recurrence_residual(3, LParams<Rational>{q(0), {q(0)}, {1}}), InvalidParameter);
}

TEST(Recurrence, MutationBreaksIt) {
    const GenParams<Rational> g{q(0), {q(2, 3), q(5)}, {q(3, 2), q(2), q(7, 4)}};
    const auto r = recurrence_coeffs(g);
    const int k = 6;
    std::vector<P> family;
    for (int n = 0; n <= k + 1; ++n) family.push_back(hyper_laguerre(static_cast<unsigned>(n), g));
    ASSERT_TRUE(recurrence_residual<Rational>(k, r, family).is_zero());
    for (int n = std::max(0, k - 3); n <= k + 1; ++n) {
        for (std::size_t c = 0; c < family[static_cast<std::size_t>(n)].size(); ++c) {
            auto mutated = family;
            std::vector<Rational> coeffs(mutated[n].coefficients().begin(), mutated[n].coefficients().end());
            coeffs[c] += 1;
            mutated[n] = P(coeffs);
            EXPECT_FALSE(recurrence_residual<Rational>(k, r, mutated).is_zero()) << "n=" << n << " c=" << c;
        }
    }
}

TEST(Recurrence, Preconditions) {
    EXPECT_THROW(recurrence_coeffs<Rational>({q(1), q(1)}, {q(1), q(-2), q(1)}), NonPositiveIntegerDenominator);
    EXPECT_THROW(recurrence_coeffs(GenParams<Rational>{q(0), {q(1)}, {q(1), q(2), q(3)}}), InvalidParameter);
}

// --- zeros -----------------------------------------------------------------

TEST(Zeros, LinearExample) {
    const GenParams<Rational> g{q(0), {q(2)}, {}};
    const auto report = zero_report_hyper_laguerre(1, g);
    ASSERT_EQ(report.roots.size(), 1u);
    EXPECT_NEAR(std::abs(report.roots[0] - 0.5), 0.0, 1e-15);
    EXPECT_TRUE(report.ek_condition_met);
    EXPECT_LT(report.max_modulus, 1.0);
}

TEST(Zeros, KnownRoots) {
    // (x-1)(x-2)(x+3) = x^3 - 7x + 6
    const auto report = zeros(Polynomial<double>{6.0, -7.0, 0.0, 1.0});
    ASSERT_EQ(report.roots.size(), 3u);
    EXPECT_NEAR(std::abs(report.roots[0] - (-3.0)), 0.0, 1e-12);
    EXPECT_NEAR(std::abs(report.roots[1] - 1.0), 0.0, 1e-12);
    EXPECT_NEAR(std::abs(report.roots[2] - 2.0), 0.0, 1e-12);
    EXPECT_LT(report.vieta_error, 1e-12);
}

TEST(Zeros, ClusteredRootsStopAtRoundingLevel) {
    // Roots crowd toward 1; the relative step alone never gets below 1e-13.
    const GenParams<Rational> g{q(2), {q(1, 2)}, {q(3), q(2)}};
    for (unsigned n : {12u, 14u, 16u}) {
        const auto report = zero_report_hyper_jacobi(n, g);
        EXPECT_LE(report.iterations, 200) << n;
        EXPECT_LT(report.residual_relative, 1e-13) << n;
        EXPECT_LT(report.vieta_error, 1e-9) << n;
    }
}

TEST(Zeros, RejectsConstant) {
    EXPECT_THROW(zeros(Polynomial<double>{3.0}), InvalidParameter);
}

TEST(ZerosProperty, InsideDiscUnderCondition) {
    Sampler s(91);
    for (int trial = 0; trial < 10; ++trial) {
        // p = q + 1, num_j >= den_j, last num >= 1
        const auto qn = static_cast<std::size_t>(s.integer(0, 2));
        GenParams<Rational> g{s.open_rational(0, 3), {}, {}};
        for (std::size_t j = 0; j < qn; ++j) {
            g.den.push_back(s.open_rational(0, 3));
            g.num.push_back(g.den.back() + s.rational(0, 2));
        }
        g.num.push_back(1 + s.rational(0, 3));
        ASSERT_TRUE(zero_parameter_condition(g));
        for (unsigned n = 1; n <= 10; ++n) {
            for (const auto& report : {zero_report_hyper_jacobi(n, g), zero_report_hyper_laguerre(n, g)}) {
                EXPECT_TRUE(report.ek_condition_met);
                EXPECT_LE(report.max_coefficient_ratio, 1.0);
                EXPECT_LT(report.max_modulus, 1.0 + 1e-8);
                EXPECT_LT(report.vieta_error, 1e-9);
                EXPECT_LT(report.residual_relative, 1e-9);
                EXPECT_EQ(report.roots.size(), n);
            }
        }
    }
}

TEST(Zeros, ConditionFailsWithoutDominance) {
    const GenParams<Rational> g{q(1), {q(1, 2)}, {q(3)}};
    EXPECT_FALSE(zero_parameter_condition(g));
    const auto report = zero_report_hyper_laguerre(4, g);
    EXPECT_FALSE(report.ek_condition_met);
    EXPECT_GT(report.max_modulus, 1.0);
}

TEST(Zeros, NegativeShiftBreaksTheBound) {
    // The parameter condition alone does not confine the root when a < 0:
    // 1 + (-1)(1/2)(1) x has its root at 2.
    const GenParams<Rational> g{q(-1, 2), {q(1)}, {}};
    EXPECT_TRUE(zero_parameter_condition(g));
    const auto report = zero_report_hyper_jacobi(1, g);
    EXPECT_NEAR(report.max_modulus, 2.0, 1e-14);
    EXPECT_FALSE(report.ratios_monotone);
    EXPECT_FALSE(report.ek_condition_met);
}
