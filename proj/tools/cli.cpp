#include "cli.hpp"

#include <hypersob/analysis.hpp>
#include <hypersob/diffops.hpp>
#include <hypersob/hypergeometric.hpp>
#include <hypersob/parallel.hpp>
#include <hypersob/quadrature.hpp>
#include <hypersob/sobolev.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <limits>
#include <ostream>
#include <sstream>
#include <thread>

namespace hypersob::cli {
namespace {

using json = nlohmann::ordered_json;

constexpr double float_identity_tol = 1e-10;
constexpr double gram_tol = 1e-10;
constexpr double two_path_tol = 1e-12;
constexpr double gf_tol = 1e-10;
constexpr double representation_tol = 1e-9;
constexpr double zero_bound = 1.0 + 1e-8;
constexpr double vieta_tol = 1e-9;
constexpr double root_residual_tol = 1e-9;
constexpr double moment_tol = 1e-12;

enum class Family { P, L, bigP, bigL };

Family parse_family(const std::string& s) {
    if (s == "P") return Family::P;
    if (s == "L") return Family::L;
    if (s == "bigP") return Family::bigP;
    if (s == "bigL") return Family::bigL;
    throw InvalidInput("--family must be one of P, L, bigP, bigL (got '" + s + "')");
}

struct Report {
    json body;
    bool pass = true;
    bool required = true;
};

Report make_report(const std::string& check, const json& params, json tolerance, json observed, bool pass,
                   bool required = true) {
    Report r;
    r.pass = pass;
    r.required = required;
    r.body["check"] = check;
    r.body["params"] = params;
    r.body["tolerance"] = std::move(tolerance);
    r.body["observed"] = std::move(observed);
    r.body["pass"] = pass;
    r.body["required"] = required;
    return r;
}

json complex_json(cplx z) { return json{{"re", z.real()}, {"im", z.imag()}}; }

/// Finite doubles as numbers; inf/nan as strings so the document stays valid JSON.
json number(double v) {
    if (std::isfinite(v)) return v;
    return std::isnan(v) ? "nan" : (v > 0 ? "inf" : "-inf");
}

cplx parse_complex(const std::string& text, const char* flag) {
    const auto comma = text.find(',');
    try {
        if (comma == std::string::npos) return {parse_number(text).value, 0.0};
        return {parse_number(text.substr(0, comma)).value, parse_number(text.substr(comma + 1)).value};
    } catch (const InvalidParameter&) {
        throw InvalidInput(std::string(flag) + " must be 're' or 're,im' (got '" + text + "')");
    }
}

// ---------------------------------------------------------------------------
// Parameter parsing

struct ParsedInputs {
    std::optional<ParsedNumber> alpha, beta, a;
    std::vector<ParsedNumber> deltas, num, den;
    std::vector<unsigned> kappas;
    bool exact = true;
};

ParsedNumber parse_field(const std::string& text, const char* flag) {
    try {
        return parse_number(text);
    } catch (const InvalidParameter& e) {
        throw InvalidInput(std::string(flag) + ": " + e.what());
    }
}

ParsedInputs parse_inputs(const RunConfig& cfg) {
    ParsedInputs in;
    auto one = [&](const std::optional<std::string>& s, std::optional<ParsedNumber>& dst, const char* flag) {
        if (!s) return;
        dst = parse_field(*s, flag);
        in.exact = in.exact && dst->exact;
    };
    auto many = [&](const std::vector<std::string>& src, std::vector<ParsedNumber>& dst, const char* flag) {
        for (const auto& s : src) {
            dst.push_back(parse_field(s, flag));
            in.exact = in.exact && dst.back().exact;
        }
    };
    one(cfg.alpha, in.alpha, "--alpha");
    one(cfg.beta, in.beta, "--beta");
    one(cfg.a, in.a, "--a");
    many(cfg.deltas, in.deltas, "--deltas");
    many(cfg.num, in.num, "--num");
    many(cfg.den, in.den, "--den");
    for (const auto& s : cfg.kappas) {
        unsigned v = 0;
        const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
        if (ec != std::errc() || ptr != s.data() + s.size()) {
            throw InvalidInput("--kappas entries must be non-negative integers (got '" + s + "')");
        }
        in.kappas.push_back(v);
    }
    return in;
}

template <Scalar T>
T pick(const ParsedNumber& p) {
    if constexpr (is_exact_v<T>) {
        return p.rational;
    } else {
        return p.value;
    }
}

template <Scalar T>
std::vector<T> pick_all(const std::vector<ParsedNumber>& v) {
    std::vector<T> out;
    for (const auto& p : v) out.push_back(pick<T>(p));
    return out;
}

const ParsedNumber& require(const std::optional<ParsedNumber>& v, const char* flag, const char* family) {
    if (!v) throw InvalidInput(std::string("family ") + family + " needs " + flag);
    return *v;
}

template <Scalar T>
struct Context {
    const RunConfig& cfg;
    Family family;
    json params;
    std::optional<PParams<T>> p;
    std::optional<LParams<T>> l;
    std::optional<GenParams<T>> g;  ///< general form of whichever family was given

    Polynomial<T> member(unsigned n) const {
        switch (family) {
            case Family::P:
                return sobolev_jacobi(n, *p);
            case Family::L:
                return sobolev_laguerre(n, *l);
            case Family::bigP:
                return hyper_jacobi(n, *g);
            case Family::bigL:
                return hyper_laguerre(n, *g);
        }
        return {};
    }

    bool jacobi_like() const { return family == Family::P || family == Family::bigP; }
};

template <Scalar T>
Context<T> build_context(const RunConfig& cfg, Family family, const ParsedInputs& in) {
    Context<T> ctx{cfg, family, {}, {}, {}, {}};
    auto lifts = [&] {
        if (in.deltas.empty() || in.deltas.size() != in.kappas.size()) {
            throw InvalidInput("--deltas and --kappas must be non-empty and of equal length");
        }
    };
    switch (family) {
        case Family::P:
            lifts();
            ctx.p = PParams<T>{pick<T>(require(in.alpha, "--alpha", "P")), pick<T>(require(in.beta, "--beta", "P")),
                               pick_all<T>(in.deltas), in.kappas};
            validate(*ctx.p);
            ctx.g = to_general(*ctx.p);
            break;
        case Family::L:
            lifts();
            ctx.l = LParams<T>{pick<T>(require(in.alpha, "--alpha", "L")), pick_all<T>(in.deltas), in.kappas};
            validate(*ctx.l);
            ctx.g = to_general(*ctx.l);
            break;
        case Family::bigP:
        case Family::bigL: {
            const T a = family == Family::bigP ? pick<T>(require(in.a, "--a", "bigP"))
                                               : (in.a ? pick<T>(*in.a) : T(0));
            ctx.g = GenParams<T>{a, pick_all<T>(in.num), pick_all<T>(in.den)};
            validate(*ctx.g);
            break;
        }
    }

    json& j = ctx.params;
    j["family"] = cfg.family;
    j["backend"] = std::string(scalar_traits<T>::name);
    auto text = [](const std::optional<ParsedNumber>& v) { return v ? json(v->text) : json(nullptr); };
    auto texts = [](const std::vector<ParsedNumber>& v) {
        json arr = json::array();
        for (const auto& p : v) arr.push_back(p.text);
        return arr;
    };
    if (family == Family::P || family == Family::L) {
        j["alpha"] = text(in.alpha);
        if (family == Family::P) j["beta"] = text(in.beta);
        j["deltas"] = texts(in.deltas);
        j["kappas"] = in.kappas;
    } else {
        if (family == Family::bigP) j["a"] = text(in.a);
        j["num"] = texts(in.num);
        j["den"] = texts(in.den);
    }
    return ctx;
}

// ---------------------------------------------------------------------------
// Helpers

std::vector<unsigned> degrees(const RunConfig& cfg, int lowest, const char* command) {
    if (cfg.n) return {static_cast<unsigned>(*cfg.n)};
    if (!cfg.n_max) throw InvalidInput(std::string(command) + " needs --n or --n-max");
    std::vector<unsigned> out;
    for (int n = lowest; n <= *cfg.n_max; ++n) out.push_back(static_cast<unsigned>(n));
    return out;
}

template <Scalar T>
double max_abs(const Polynomial<T>& p) {
    double m = 0.0;
    for (const auto& c : p.coefficients()) m = std::max(m, std::fabs(to_double(c)));
    return m;
}

/// Exact backend: 0 for the zero polynomial, else its largest coefficient.
/// Float backend: largest coefficient relative to `scale`.
template <Scalar T>
double residual_measure(const Polynomial<T>& residual, double scale) {
    if constexpr (is_exact_v<T>) {
        return residual.is_zero() ? 0.0 : std::max(max_abs(residual), std::numeric_limits<double>::min());
    } else {
        return max_abs(residual) / std::max(scale, std::numeric_limits<double>::min());
    }
}

template <Scalar T>
double identity_tolerance(const RunConfig& cfg) {
    if (cfg.tol) return *cfg.tol;
    return is_exact_v<T> ? 0.0 : float_identity_tol;
}

template <Scalar T>
bool identity_holds(double observed, double tol) {
    if constexpr (is_exact_v<T>) {
        return observed == 0.0 || observed <= tol;
    } else {
        return observed <= tol;
    }
}

template <Scalar T>
json scalar_json(const T& v) {
    if constexpr (is_exact_v<T>) {
        return to_string(v);
    } else {
        return number(v);
    }
}

// ---------------------------------------------------------------------------
// Subcommands

template <Scalar T>
std::vector<Report> cmd_poly(const Context<T>& ctx) {
    std::vector<Report> reports;
    for (unsigned n : degrees(ctx.cfg, 0, "poly")) {
        const auto p = ctx.member(n);
        const bool ok = p.degree() == static_cast<int>(n) && p.coefficient(0) == T(1);
        auto r = make_report("poly", ctx.params, nullptr, p.degree(), ok);
        json coeffs = json::array();
        for (const auto& c : p.coefficients()) coeffs.push_back(number(to_double(c)));
        r.body["details"]["n"] = n;
        r.body["details"]["coefficients"] = coeffs;
        if constexpr (is_exact_v<T>) {
            json exact = json::array();
            for (const auto& c : p.coefficients()) exact.push_back(to_string(c));
            r.body["details"]["coefficients_exact"] = exact;
        }
        reports.push_back(std::move(r));
    }
    return reports;
}

json gram_details(const GramReport& g, const std::string& weight) {
    json d;
    d["weight"] = weight;
    d["size"] = g.size;
    d["max_offdiag_ratio"] = number(g.max_offdiag_ratio);
    d["diagonal_positive"] = g.diagonal_positive;
    d["symmetry_error"] = number(g.symmetry_error);
    json diag = json::array();
    for (double v : g.diagonal) diag.push_back(number(v));
    d["diagonal"] = diag;
    json m = json::array();
    for (int i = 0; i < g.size; ++i) {
        json row = json::array();
        for (int k = 0; k < g.size; ++k) row.push_back(number(g.matrix(i, k)));
        m.push_back(row);
    }
    d["matrix"] = m;
    return d;
}

template <Scalar T>
std::vector<Report> cmd_gram(const Context<T>& ctx) {
    const auto& cfg = ctx.cfg;
    if (ctx.family != Family::P && ctx.family != Family::L) throw InvalidInput("gram supports --family P or L");
    if (!cfg.n_max) throw InvalidInput("gram needs --n-max");
    if (*cfg.n_max < 1) throw InvalidInput("gram needs --n-max >= 1");
    if (cfg.weight != "both" && cfg.weight != "hypergeometric" && cfg.weight != "displayed") {
        throw InvalidInput("--weight must be hypergeometric, displayed or both");
    }
    const int n_max = *cfg.n_max;
    const double tol = cfg.tol.value_or(gram_tol);

    std::vector<std::pair<SobolevForm<T>, bool>> forms;
    if (ctx.family == Family::L) {
        forms.emplace_back(SobolevForm<T>::laguerre_type(*ctx.l, n_max), true);
    } else {
        // The displayed weight is reported for comparison; it only gates the
        // exit code when requested on its own.
        if (cfg.weight != "displayed") {
            forms.emplace_back(SobolevForm<T>::jacobi_type(*ctx.p, n_max, JacobiWeight::hypergeometric), true);
        }
        if (cfg.weight != "hypergeometric") {
            forms.emplace_back(SobolevForm<T>::jacobi_type(*ctx.p, n_max, JacobiWeight::as_displayed),
                               cfg.weight == "displayed");
        }
    }

    std::vector<Report> reports;
    for (const auto& [form, required] : forms) {
        const auto matrix_path = gram(form, n_max, InnerPath::matrix, cfg.threads);
        const auto reduced_path = gram(form, n_max, InnerPath::reduced, cfg.threads);
        const std::string weight = form.rule().weight.describe();
        json params = ctx.params;
        params["n_max"] = n_max;
        params["weight"] = weight;

        auto r = make_report("gram", params, tol, number(matrix_path.max_offdiag_ratio), matrix_path.passed(tol),
                             required);
        r.body["details"] = gram_details(matrix_path, weight);
        reports.push_back(std::move(r));

        const double dev = gram_deviation(matrix_path, reduced_path);
        reports.push_back(make_report("gram-two-path", params, two_path_tol, number(dev), dev < two_path_tol, required));
    }
    return reports;
}

template <Scalar T>
std::vector<Report> cmd_ode(const Context<T>& ctx) {
    if (ctx.family != Family::P && ctx.family != Family::L) throw InvalidInput("ode-check supports --family P or L");
    const double tol = identity_tolerance<T>(ctx.cfg);
    json per = json::array();
    double worst = 0.0;
    bool ok = true;
    for (unsigned n : degrees(ctx.cfg, 0, "ode-check")) {
        const auto p = ctx.member(n);
        Polynomial<T> residual;
        double size = 1.0;
        const T nn(static_cast<long>(n));
        if (ctx.family == Family::P) {
            const auto pencil = ThetaPencil<T>::jacobi_type(*ctx.p);
            residual = pencil_residual(n, *ctx.p, p);
            const T eigen = nn * (nn + ctx.p->alpha + ctx.p->beta + T(1));
            size = std::max(max_abs(pencil.jacobi_lhs(p)), max_abs(scale(pencil.shifted_upper(p), eigen)));
        } else {
            const auto pencil = ThetaPencil<T>::laguerre_type(*ctx.l);
            residual = pencil_residual(n, *ctx.l, p);
            size = std::max(max_abs(pencil.laguerre_lhs(p)), max_abs(scale(pencil.shifted_upper(p), nn)));
        }
        const double measure = residual_measure(residual, size);
        const bool holds = identity_holds<T>(measure, tol);
        ok = ok && holds;
        worst = std::max(worst, measure);
        per.push_back(json{{"n", n}, {"residual", number(measure)}, {"pass", holds}});
    }
    auto r = make_report("ode", ctx.params, tol, number(worst), ok);
    r.body["details"]["per_degree"] = per;
    return {std::move(r)};
}

template <Scalar T>
std::vector<Report> cmd_recur(const Context<T>& ctx) {
    if (ctx.family != Family::L && ctx.family != Family::bigL) throw InvalidInput("recur-check supports --family L or bigL");
    if (ctx.family == Family::L && ctx.l->rho() != 2) throw InvalidInput("recur-check with --family L needs two delta/kappa pairs");
    const auto& g = *ctx.g;
    if (g.p() != 2 || g.q() != 3) throw InvalidInput("recur-check needs two --num and three --den values");
    const int k_max = ctx.cfg.n ? *ctx.cfg.n : ctx.cfg.n_max.value_or(15);
    const double tol = identity_tolerance<T>(ctx.cfg);

    const auto coeffs = recurrence_coeffs(g);
    std::vector<Polynomial<T>> family;
    double family_scale = 1.0;
    for (int n = 0; n <= k_max + 1; ++n) {
        family.push_back(hyper_laguerre(static_cast<unsigned>(n), g));
        family_scale = std::max(family_scale, max_abs(family.back()));
    }
    double coeff_scale = 1.0;
    for (const auto& c : {coeffs.c, coeffs.b_hat, coeffs.d, coeffs.alpha_hat, coeffs.alpha_product}) {
        coeff_scale = std::max(coeff_scale, std::fabs(to_double(c)));
    }

    json per = json::array();
    double worst = 0.0;
    bool ok = true;
    for (int k = 0; k <= k_max; ++k) {
        const auto residual = recurrence_residual<T>(k, coeffs, family);
        const double kk = k + 1.0;
        const double measure = residual_measure(residual, kk * kk * kk * coeff_scale * family_scale);
        const bool holds = identity_holds<T>(measure, tol);
        ok = ok && holds;
        worst = std::max(worst, measure);
        per.push_back(json{{"k", k}, {"residual", number(measure)}, {"pass", holds}});
    }
    auto r = make_report("recurrence", ctx.params, tol, number(worst), ok);
    json c;
    c["b1"] = scalar_json(coeffs.b1);
    c["b2"] = scalar_json(coeffs.b2);
    c["b3"] = scalar_json(coeffs.b3);
    c["c"] = scalar_json(coeffs.c);
    c["b_hat"] = scalar_json(coeffs.b_hat);
    c["d"] = scalar_json(coeffs.d);
    c["alpha_hat"] = scalar_json(coeffs.alpha_hat);
    r.body["details"]["coefficients"] = c;
    r.body["details"]["per_index"] = per;
    return {std::move(r)};
}

template <Scalar T>
std::vector<Report> cmd_gf(const Context<T>& ctx) {
    const auto& cfg = ctx.cfg;
    if (cfg.truncation < 0 || cfg.truncation > 400) throw InvalidInput("--truncation must lie in [0, 400]");
    std::vector<std::pair<cplx, cplx>> samples;
    if (cfg.x || cfg.t) {
        if (!cfg.x || !cfg.t) throw InvalidInput("gf-check needs both --x and --t, or neither");
        samples.emplace_back(parse_complex(*cfg.x, "--x"), parse_complex(*cfg.t, "--t"));
    } else {
        if (cfg.samples < 1 || cfg.samples > 1000) throw InvalidInput("--samples must lie in [1, 1000]");
        const bool disc = ctx.g->p() == ctx.g->q() + 1;
        samples = ctx.jacobi_like() ? jacobi_gf_samples(cfg.samples) : laguerre_gf_samples(cfg.samples, disc);
    }
    // Preconditions are checked up front so a bad sample is reported as input error.
    std::vector<GfResult> results(samples.size());
    auto one = [&](std::size_t i) {
        const auto [x, t] = samples[i];
        switch (ctx.family) {
            case Family::P:
                results[i] = gf_check_sobolev_jacobi(*ctx.p, x, t, cfg.truncation);
                break;
            case Family::L:
                results[i] = gf_check_sobolev_laguerre(*ctx.l, x, t, cfg.truncation);
                break;
            case Family::bigP:
                results[i] = gf_check_hyper_jacobi(*ctx.g, x, t, cfg.truncation);
                break;
            case Family::bigL:
                results[i] = gf_check_hyper_laguerre(*ctx.g, x, t, cfg.truncation);
                break;
        }
    };
    one(0);
    parallel_for(samples.size() - 1, cfg.threads, [&](std::size_t i) { one(i + 1); });

    const double tol = cfg.tol.value_or(gf_tol);
    double worst = 0.0;
    json list = json::array();
    for (std::size_t i = 0; i < samples.size(); ++i) {
        worst = std::max(worst, results[i].gap);
        list.push_back(json{{"x", complex_json(samples[i].first)},
                            {"t", complex_json(samples[i].second)},
                            {"lhs", complex_json(results[i].lhs)},
                            {"rhs_partial", complex_json(results[i].rhs_partial)},
                            {"gap", number(results[i].gap)}});
    }
    json params = ctx.params;
    params["truncation"] = cfg.truncation;
    auto r = make_report("generating-function", params, tol, number(worst), worst < tol);
    r.body["details"]["samples"] = list;
    return {std::move(r)};
}

template <Scalar T>
std::vector<Report> cmd_intrep(const Context<T>& ctx) {
    const auto& cfg = ctx.cfg;
    if (ctx.family != Family::P && ctx.family != Family::L) throw InvalidInput("intrep-check supports --family P or L");
    const bool is_p = ctx.family == Family::P;
    const cplx x = cfg.x ? parse_complex(*cfg.x, "--x") : cplx(is_p ? 0.125 : 2.0);
    const double tol = cfg.tol.value_or(representation_tol);
    RunConfig local = cfg;
    if (!local.n && !local.n_max) local.n_max = 6;
    const auto ns = degrees(local, 0, "intrep-check");

    json params = ctx.params;
    params["x"] = complex_json(x);

    std::vector<Report> reports;
    json per = json::array();
    double worst = 0.0;
    for (unsigned n : ns) {
        const cplx direct = eval(to_float(ctx.member(n)), x);
        const auto c = is_p ? integral_rep_sobolev_jacobi(n, *ctx.p, x) : integral_rep_sobolev_laguerre(n, *ctx.l, x);
        const double err = std::abs(c.value - direct);
        worst = std::max(worst, err);
        per.push_back(json{{"n", n},
                           {"contour", complex_json(c.value)},
                           {"direct", complex_json(direct)},
                           {"error", number(err)},
                           {"points", c.points},
                           {"converged", c.converged}});
    }
    auto r = make_report("contour", params, tol, number(worst), worst < tol);
    r.body["details"]["per_degree"] = per;
    reports.push_back(std::move(r));

    const auto& kappas = is_p ? ctx.p->kappas : ctx.l->kappas;
    if (kappas.back() < 1) {
        auto skipped = make_report("beta-step", params, tol, nullptr, true, false);
        skipped.body["details"]["skipped"] = "last kappa is 0";
        reports.push_back(std::move(skipped));
        return reports;
    }
    const bool nested = std::all_of(kappas.begin(), kappas.end(), [](unsigned k) { return k >= 1; });
    json steps = json::array();
    double worst_step = 0.0;
    for (unsigned n : ns) {
        const cplx direct = eval(to_float(ctx.member(n)), x);
        const cplx one = is_p ? beta_step(n, *ctx.p, x) : beta_step(n, *ctx.l, x);
        json entry{{"n", n}, {"beta_step", complex_json(one)}, {"error", number(std::abs(one - direct))}};
        worst_step = std::max(worst_step, std::abs(one - direct));
        if (nested) {
            const cplx all = is_p ? beta_nested(n, *ctx.p, x) : beta_nested(n, *ctx.l, x);
            entry["beta_nested"] = complex_json(all);
            entry["nested_error"] = number(std::abs(all - direct));
            worst_step = std::max(worst_step, std::abs(all - direct));
        }
        steps.push_back(entry);
    }
    auto b = make_report("beta-step", params, tol, number(worst_step), worst_step < tol);
    b.body["details"]["nested"] = nested;
    b.body["details"]["per_degree"] = steps;
    reports.push_back(std::move(b));
    return reports;
}

template <Scalar T>
std::vector<Report> cmd_zeros(const Context<T>& ctx) {
    const auto ns = degrees(ctx.cfg, 1, "zeros");
    for (unsigned n : ns) {
        if (n < 1) throw InvalidInput("zeros needs degree >= 1");
    }
    std::vector<ZeroReport> found(ns.size());
    parallel_for(ns.size(), ctx.cfg.threads, [&](std::size_t i) {
        found[i] = ctx.jacobi_like() ? zero_report_hyper_jacobi(ns[i], *ctx.g) : zero_report_hyper_laguerre(ns[i], *ctx.g);
    });
    std::vector<Report> reports;
    const json tol{{"modulus_bound", zero_bound}, {"vieta", vieta_tol}, {"residual_relative", root_residual_tol}};
    for (std::size_t i = 0; i < ns.size(); ++i) {
        const auto& z = found[i];
        const bool inside = z.max_modulus < zero_bound;
        const bool ok = z.vieta_error < vieta_tol && z.residual_relative < root_residual_tol && (!z.ek_condition_met || inside);
        json params = ctx.params;
        params["n"] = ns[i];
        auto r = make_report("zeros", params, tol, number(z.max_modulus), ok);
        json roots = json::array();
        for (const auto& root : z.roots) roots.push_back(complex_json(root));
        auto& d = r.body["details"];
        d["roots"] = roots;
        d["inside_disc"] = inside;
        d["ek_condition_met"] = z.ek_condition_met;
        d["parameter_condition"] = z.parameter_condition;
        d["ratios_monotone"] = z.ratios_monotone;
        d["max_coefficient_ratio"] = number(z.max_coefficient_ratio);
        d["residual_max"] = number(z.residual_max);
        d["residual_relative"] = number(z.residual_relative);
        d["vieta_error"] = number(z.vieta_error);
        d["iterations"] = z.iterations;
        reports.push_back(std::move(r));
    }
    return reports;
}

std::vector<Report> cmd_quad(const RunConfig& cfg, const ParsedInputs& in) {
    if (!cfg.n) throw InvalidInput("quad needs --n (number of nodes)");
    if (*cfg.n < 1) throw InvalidInput("quad needs --n >= 1");
    if (cfg.family != "P" && cfg.family != "L") throw InvalidInput("quad supports --family P or L");
    const int n = *cfg.n;
    const double a = require(in.alpha, "--alpha", cfg.family.c_str()).value;
    const bool jacobi_type = cfg.family == "P";
    const double b = jacobi_type ? require(in.beta, "--beta", "P").value : 0.0;
    const bool displayed = jacobi_type && cfg.weight == "displayed";
    if (cfg.weight != "both" && cfg.weight != "hypergeometric" && cfg.weight != "displayed") {
        throw InvalidInput("--weight must be hypergeometric or displayed");
    }
    if (!(a > -1.0) || !(b > -1.0)) throw InvalidInput("quadrature exponents must exceed -1");

    const QuadRule rule = displayed ? gauss_jacobi_pm01(n, a, b) : jacobi_type ? gauss_jacobi01(n, a, b) : gauss_laguerre(n, a);

    json params;
    params["family"] = cfg.family;
    params["n"] = n;
    params["weight"] = rule.weight.describe();

    json details;
    json nodes = json::array(), weights = json::array();
    for (double v : rule.nodes) nodes.push_back(number(v));
    for (double v : rule.weights) weights.push_back(number(v));
    details["nodes"] = nodes;
    details["weights"] = weights;
    details["mass"] = number(rule.weight.mass);
    details["exactness"] = rule.exactness;

    if (displayed) {
        // No closed-form moments for this weight; report structural validity.
        bool valid = true;
        for (std::size_t i = 0; i < rule.size(); ++i) {
            valid = valid && rule.nodes[i] > 0.0 && rule.nodes[i] < 1.0 && rule.weights[i] > 0.0;
            if (i > 0) valid = valid && rule.nodes[i] > rule.nodes[i - 1];
        }
        auto r = make_report("quadrature", params, nullptr, valid, valid);
        r.body["details"] = details;
        return {std::move(r)};
    }

    // Exact moments by the ratio recurrence from the total mass.
    double moment = rule.weight.mass;
    double worst = 0.0;
    for (int d = 0; d <= rule.exactness; ++d) {
        double acc = 0.0;
        for (std::size_t i = 0; i < rule.size(); ++i) acc += rule.weights[i] * std::pow(rule.nodes[i], d);
        worst = std::max(worst, std::fabs(acc - moment) / moment);
        moment *= jacobi_type ? (a + d + 1.0) / (a + b + d + 2.0) : (a + d + 1.0);
    }
    const double tol = cfg.tol.value_or(moment_tol);
    auto r = make_report("quadrature", params, tol, number(worst), worst < tol);
    r.body["details"] = details;
    return {std::move(r)};
}

template <Scalar T>
std::vector<Report> dispatch(const RunConfig& cfg, Family family, const ParsedInputs& in) {
    const auto ctx = build_context<T>(cfg, family, in);
    if (cfg.command == "poly") return cmd_poly(ctx);
    if (cfg.command == "gram") return cmd_gram(ctx);
    if (cfg.command == "ode-check") return cmd_ode(ctx);
    if (cfg.command == "recur-check") return cmd_recur(ctx);
    if (cfg.command == "gf-check") return cmd_gf(ctx);
    if (cfg.command == "intrep-check") return cmd_intrep(ctx);
    if (cfg.command == "zeros") return cmd_zeros(ctx);
    throw InvalidInput("unknown command '" + cfg.command + "'");
}

// ---------------------------------------------------------------------------
// Output

std::string csv_cell(const json& v) {
    if (v.is_string()) {
        const auto s = v.get<std::string>();
        if (s.find_first_of(",\"\n") == std::string::npos) return s;
        std::string quoted = "\"";
        for (char c : s) {
            if (c == '"') quoted += '"';
            quoted += c;
        }
        return quoted + "\"";
    }
    if (v.is_null()) return "";
    return v.dump();
}

void csv_rows(std::ostream& os, const std::string& check, const std::string& field, const json& v, const json& n,
              const json& m) {
    auto row = [&](const std::string& f, const json& value, const json& i, const json& k) {
        os << csv_cell(check) << ',' << csv_cell(f) << ',' << csv_cell(i) << ',' << csv_cell(k) << ','
           << csv_cell(value) << '\n';
    };
    if (v.is_object()) {
        for (const auto& [key, sub] : v.items()) csv_rows(os, check, field.empty() ? key : field + "." + key, sub, n, m);
        return;
    }
    if (!v.is_array()) {
        row(field, v, n, m);
        return;
    }
    for (std::size_t i = 0; i < v.size(); ++i) {
        const auto& e = v[i];
        if (e.is_array()) {
            for (std::size_t k = 0; k < e.size(); ++k) csv_rows(os, check, field, e[k], i, k);
        } else {
            csv_rows(os, check, field, e, n.is_null() ? json(i) : n, n.is_null() ? m : json(i));
        }
    }
}

void write_csv(std::ostream& os, const json& doc) {
    os << "check,field,n,m,value\n";
    for (const auto& r : doc["reports"]) {
        const std::string check = r["check"].get<std::string>();
        for (const char* key : {"pass", "required", "tolerance", "observed"}) csv_rows(os, check, key, r[key], nullptr, nullptr);
        csv_rows(os, check, "params", r["params"], nullptr, nullptr);
        if (r.contains("details")) csv_rows(os, check, "", r["details"], nullptr, nullptr);
    }
}

int emit(const RunConfig& cfg, const json& doc, std::ostream& out) {
    std::ostringstream buffer;
    if (cfg.format == "csv") {
        write_csv(buffer, doc);
    } else {
        buffer << doc.dump(2) << '\n';
    }
    if (cfg.out.empty()) {
        out << buffer.str();
        return 0;
    }
    std::ofstream file(cfg.out, std::ios::binary);
    if (!file) throw InvalidInput("cannot open --out path '" + cfg.out + "'");
    file << buffer.str();
    return 0;
}

void check_ranges(const RunConfig& cfg) {
    if (cfg.format != "json" && cfg.format != "csv") throw InvalidInput("--format must be json or csv");
    for (const auto& [v, flag] : {std::pair{cfg.n, "--n"}, {cfg.n_max, "--n-max"}}) {
        if (!v) continue;
        if (*v < 0) throw InvalidInput(std::string(flag) + " must be non-negative");
        if (*v > max_degree_guard) {
            throw InvalidInput(std::string(flag) + " exceeds the limit of " + std::to_string(max_degree_guard));
        }
    }
    if (cfg.tol && !(*cfg.tol >= 0.0)) throw InvalidInput("--tol must be non-negative");
}

}  // namespace

unsigned threads_from_env() {
    const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
    const char* env = std::getenv("HYPERSOB_THREADS");
    if (!env || !*env) return hw;
    unsigned v = 0;
    const std::string_view s(env);
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size() || v == 0) return hw;
    return v;
}

void register_commands(CLI::App& app, RunConfig& config) {
    app.require_subcommand(1);
    struct Command {
        const char* name;
        const char* help;
    };
    const Command commands[] = {
        {"poly", "print family members and their coefficients"},
        {"gram", "Sobolev Gram matrix report (both Jacobi-type weights)"},
        {"ode-check", "residuals of the theta-operator pencil equations"},
        {"recur-check", "residuals of the five-term recurrence of the 3F3 family"},
        {"gf-check", "generating-function gaps at sampled or given (x, t)"},
        {"intrep-check", "contour and Beta-integral representations against direct evaluation"},
        {"zeros", "roots, unit-disc bound and coefficient condition"},
        {"quad", "Gauss rule nodes and weights with a moment check"},
    };
    for (const auto& command : commands) {
        auto* sub = app.add_subcommand(command.name, command.help);
        sub->callback([&config, name = std::string(command.name)] { config.command = name; });
        sub->add_option("--family", config.family, "P, L, bigP or bigL")->required();
        sub->add_option("--alpha", config.alpha, "alpha (P, L); first exponent for quad");
        sub->add_option("--beta", config.beta, "beta (P); second exponent for quad");
        sub->add_option("--a", config.a, "shift a of the bigP family");
        sub->add_option("--deltas", config.deltas, "delta list")->delimiter(',');
        sub->add_option("--kappas", config.kappas, "kappa list (non-negative integers)")->delimiter(',');
        sub->add_option("--num", config.num, "numerator parameters (bigP, bigL)")->delimiter(',');
        sub->add_option("--den", config.den, "denominator parameters (bigP, bigL)")->delimiter(',');
        sub->add_option("--n", config.n, "single degree (number of nodes for quad)");
        sub->add_option("--n-max", config.n_max, "largest degree or recurrence index");
        sub->add_option("--weight", config.weight, "hypergeometric, displayed or both");
        sub->add_option("--samples", config.samples, "number of generated (x, t) samples");
        sub->add_option("--truncation", config.truncation, "generating-function truncation N");
        sub->add_option("--x", config.x, "evaluation point, 're' or 're,im'");
        sub->add_option("--t", config.t, "generating-function variable, 're' or 're,im'");
        sub->add_option("--tol", config.tol, "override the check tolerance");
        sub->add_option("--format", config.format, "json or csv");
        sub->add_option("--out", config.out, "write the report to a file");
    }
}

int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    try {
        check_ranges(cfg);
        const auto in = parse_inputs(cfg);
        std::vector<Report> reports;
        std::string backend;
        if (cfg.command == "quad") {
            reports = cmd_quad(cfg, in);
            backend = "float64";
        } else {
            const Family family = parse_family(cfg.family);
            reports = in.exact ? dispatch<Rational>(cfg, family, in) : dispatch<double>(cfg, family, in);
            backend = in.exact ? "rational" : "float64";
        }
        json doc;
        doc["command"] = cfg.command;
        doc["backend"] = backend;
        json list = json::array();
        bool pass = true;
        for (auto& r : reports) {
            if (r.required) pass = pass && r.pass;
            list.push_back(std::move(r.body));
        }
        doc["reports"] = std::move(list);
        doc["pass"] = pass;
        emit(cfg, doc, out);
        return pass ? exit_pass : exit_check_failed;
    } catch (const InvalidInput& e) {
        err << "hypersob: error: " << e.what() << '\n';
        return exit_invalid_input;
    } catch (const InvalidParameter& e) {
        err << "hypersob: error: " << e.what() << '\n';
        return exit_invalid_input;
    } catch (const DomainViolation& e) {
        err << "hypersob: error: " << e.what() << '\n';
        return exit_invalid_input;
    } catch (const RuleTooShort& e) {
        err << "hypersob: error: " << e.what() << '\n';
        return exit_invalid_input;
    } catch (const Error& e) {
        err << "hypersob: numerical failure: " << e.what() << '\n';
        return exit_check_failed;
    }
}

}  // namespace hypersob::cli
