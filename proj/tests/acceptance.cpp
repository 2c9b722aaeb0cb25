// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fail.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <random>
#include <string>

#include "oracles.hpp"
#include "octoweak/fields.hpp"
#include "octoweak/grading.hpp"
#include "octoweak/lorentz.hpp"
#include "octoweak/octonion.hpp"
#include "octoweak/verifier.hpp"

using namespace octoweak;

namespace {

int failures = 0;

void report(int id, const std::string& name, bool ok, const std::string& detail) {
    std::printf("[%s] %2d %-28s %s\n", ok ? "PASS" : "FAIL", id, name.c_str(), detail.c_str());
    if (!ok) ++failures;
}

std::string fmt(const char* pattern, double a, double b = 0.0) {
    char buf[160];
    std::snprintf(buf, sizeof buf, pattern, a, b);
    return buf;
}

SuiteConfig only(std::initializer_list<std::string> ids) {
    SuiteConfig cfg;
    cfg.suites = ids;
    return cfg;
}

/// Runs the listed suites at their default sizes and checks every one against `tol`.
bool suites_below(std::initializer_list<std::string> ids, double tol, double& worst, int min_samples) {
    const RunResult r = run_all(only(ids));
    worst = 0.0;
    bool ok = r.exit_code == 0;
    for (const auto& rep : r.reports) {
        worst = std::max(worst, rep.max_residual);
        ok = ok && rep.max_residual < tol && rep.samples >= min_samples;
    }
    return ok;
}

void criterion_gamma5() {
    const double res = distance(gamma5_analogue(), CplxOcton::one());
    report(1, "gamma5 triviality", res < 1e-14, fmt("residual %.3e < 1e-14", res));
}

void criterion_lorentz_algebra() {
    double worst = 0.0;
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b)
            for (int c = 0; c < 4; ++c)
                for (int d = 0; d < 4; ++d) worst = std::max(worst, lorentz_algebra_residual(a, b, c, d).magnitude());
    report(2, "Lorentz algebra (4^4)", worst < 1e-12, fmt("max %.3e < 1e-12", worst));
}

void criterion_infinitesimal() {
    double worst = 0.0;
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b)
            for (int c = 0; c < 4; ++c) worst = std::max(worst, infinitesimal_dc_residual(a, b, c).magnitude());
    report(3, "infinitesimal double cover", worst < 1e-12, fmt("max %.3e < 1e-12", worst));
}

void criterion_double_cover() {
    double dc = 0.0, rot = 0.0, boost = 0.0;
    const bool ok = suites_below({"double-cover"}, 1e-9, dc, 500) &&
                    suites_below({"rotation-unitarity"}, 1e-10, rot, 500) &&
                    suites_below({"boost-selfconj"}, 1e-10, boost, 500);
    report(4, "finite double cover", ok,
           fmt("cover %.3e < 1e-9; ", dc) + fmt("rotation %.3e, boost %.3e < 1e-10", rot, boost));
}

void criterion_auxiliary() {
    double worst = 0.0;
    const bool ok = suites_below({"ip-moves", "zvengrowski", "ab-identities", "grading-closure", "composition-law",
                                  "alternativity"},
                                 1e-12, worst, 1000);
    report(5, "auxiliary identities", ok, fmt("max %.3e < 1e-12 over 6 suites x 1000", worst));
}

void criterion_prop1() {
    double worst = 0.0;
    const bool ok = suites_below({"prop1-A", "prop1-B"}, 1e-9, worst, 200);
    report(6, "kinetic Lorentz invariance", ok, fmt("max %.3e < 1e-9 (tags A, B)", worst));
}

void criterion_gauge() {
    double worst = 0.0;
    const bool ok = suites_below({"prop2", "prop3", "prop5", "lemma3", "lemma4"}, 1e-8, worst, 300);
    const SuiteReport p2 = run_suite("prop2", SuiteConfig{});
    const double witness = p2.witness_residual.value_or(0.0);
    report(7, "gauge covariance", ok && witness > 1e-3,
           fmt("max %.3e < 1e-8; witness %.3e > 1e-3", worst, witness));
}

void criterion_dichotomy() {
    const SuiteReport p4 = run_suite("prop4-dichotomy", SuiteConfig{});
    const double witness = p4.witness_residual.value_or(0.0);
    const bool ok = p4.samples >= 100 && p4.max_residual < 1e-10 && witness > 1e-3;
    report(8, "coupling dichotomy", ok, fmt("r1=r2 max %.3e < 1e-10; witness %.3e > 1e-3", p4.max_residual, witness));
}

void criterion_oracles() {
    int mismatches = 0;
    const StructureTable& table = structure_table();
    for (int a = 0; a < 8; ++a) {
        for (int b = 0; b < 8; ++b) {
            oracle::Real8 ea{}, eb{};
            ea[a] = 1.0;
            eb[b] = 1.0;
            const oracle::Real8 prod = oracle::cayley_dickson(ea, eb);
            const int k = table.index[a][b];
            const bool single = std::count_if(prod.begin(), prod.end(), [](double v) { return v != 0.0; }) == 1;
            if (!single || prod[static_cast<std::size_t>(k)] != static_cast<double>(table.sign[a][b])) ++mismatches;
        }
    }

    std::mt19937_64 rng(9);
    double exp_err = 0.0;
    for (int n = 0; n < 1000; ++n) {
        CplxOcton u = sample(SubspaceTag::A, rng, 1.0);
        if (u.magnitude() > 1.0) u = u / Complex(u.magnitude());
        exp_err = std::max(exp_err, distance(exp_assoc(u), oracle::exp_taylor(u, 20)));
    }

    double dexp_err = 0.0;
    for (int n = 0; n < 200; ++n) {
        const PolyField u = PolyField::sample(SubspaceTag::A, 2, rng, 0.5);
        const Point p = Point::sample(rng, 1.0);
        for (int mu = 0; mu < 4; ++mu) {
            const auto fd = oracle::central_difference([&](const Point& x) { return exp_field_at(u, x); }, p, mu);
            dexp_err = std::max(dexp_err, distance(dexp_at(u, mu, p), fd));
        }
    }
    const bool ok = mismatches == 0 && exp_err < 1e-12 && dexp_err < 1e-7;
    report(9, "oracle equivalence", ok,
           std::to_string(mismatches) + "/64 table mismatches; " +
               fmt("exp %.3e < 1e-12; dexp %.3e < 1e-7", exp_err, dexp_err));
}

void criterion_full_run() {
    const SuiteConfig cfg;
    const auto start = std::chrono::steady_clock::now();
    const RunResult first = run_all(cfg);
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const RunResult second = run_all(cfg);
    const bool identical = to_json(first.reports, cfg, false) == to_json(second.reports, cfg, false);
    const bool ok = first.exit_code == 0 && seconds < 60.0 && identical;
    report(10, "full run", ok,
           "exit " + std::to_string(first.exit_code) + fmt("; %.2f s < 60 s; ", seconds) +
               (identical ? "JSON identical" : "JSON differs"));
}

}  // namespace

int main() {
    criterion_gamma5();
    criterion_lorentz_algebra();
    criterion_infinitesimal();
    criterion_double_cover();
    criterion_auxiliary();
    criterion_prop1();
    criterion_gauge();
    criterion_dichotomy();
    criterion_oracles();
    criterion_full_run();
    std::printf("%d of 10 criteria passed\n", 10 - failures);
    return failures == 0 ? 0 : 1;
}
