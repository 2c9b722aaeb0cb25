#include "octoweak/verifier.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <functional>
#include <future>
#include <iomanip>
#include <random>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

#include "octoweak/errors.hpp"
#include "octoweak/fields.hpp"
#include "octoweak/gauge.hpp"
#include "octoweak/grading.hpp"
#include "octoweak/lorentz.hpp"
#include "octoweak/octonion.hpp"

namespace octoweak {

namespace {

// Local gauge parameters: coefficients bounded by 0.5, points kept where |u(p)| <= 1.
constexpr double kGaugeParamBound = 0.5;
constexpr int kGaugeParamMaxDegree = 2;
constexpr double kPointBound = 1.0;
constexpr double kCouplingBound = 2.0;
// Lorentz invariance sweeps use a narrower θ range than the double-cover sweep.
constexpr double kInvarianceThetaFraction = 0.75;

class SuiteContext {
public:
    SuiteContext(const SuiteConfig& cfg, int samples, std::mt19937_64& rng)
        : cfg(cfg), samples(samples), rng(rng) {}

    void record(double residual) {
        ++count_;
        sum_ += residual;
        // NaN must never compare as a pass.
        if (std::isnan(residual) || residual > max_) max_ = residual;
    }
    void record(const CplxOcton& residual) { record(residual.magnitude()); }
    void record(Complex residual) { record(std::abs(residual)); }

    void witness(double residual) { witness_ = residual; }

    const SuiteConfig& cfg;
    const int samples;
    std::mt19937_64& rng;

    int count() const { return count_; }
    double max() const { return max_; }
    double mean() const { return count_ ? sum_ / count_ : 0.0; }
    std::optional<double> witness_value() const { return witness_; }

private:
    int count_ = 0;
    double sum_ = 0.0;
    double max_ = 0.0;
    std::optional<double> witness_;
};

using SuiteBody = void (*)(SuiteContext&);

CplxOcton draw(SuiteContext& ctx, SubspaceTag tag) { return sample(tag, ctx.rng, 1.0); }

ConnectionField draw_connection(SuiteContext& ctx) {
    std::array<PolyField, 4> w{PolyField(SubspaceTag::AMinus), PolyField(SubspaceTag::AMinus),
                               PolyField(SubspaceTag::AMinus), PolyField(SubspaceTag::AMinus)};
    for (auto& c : w) c = PolyField::sample(SubspaceTag::AMinus, ctx.cfg.field_degree, ctx.rng, 1.0);
    return ConnectionField(std::move(w));
}

// Draws a local gauge parameter and a point with |u(p)| <= 1.
std::pair<GaugeParamField, Point> draw_gauge_and_point(SuiteContext& ctx) {
    const int degree = std::min(ctx.cfg.field_degree, kGaugeParamMaxDegree);
    for (;;) {
        GaugeParamField u(PolyField::sample(SubspaceTag::AMinus, degree, ctx.rng, kGaugeParamBound));
        for (int attempt = 0; attempt < 64; ++attempt) {
            const Point p = Point::sample(ctx.rng, kPointBound);
            if (eval(u.field(), p).magnitude() <= 1.0) return {std::move(u), p};
        }
    }
}

// --- composition algebra ---------------------------------------------------

void suite_composition_law(SuiteContext& ctx) {
    for (int n = 0; n < ctx.samples; ++n) {
        const CplxOcton x = draw(ctx, SubspaceTag::FullCO);
        const CplxOcton y = draw(ctx, SubspaceTag::FullCO);
        ctx.record(norm(x * y) - norm(x) * norm(y));
    }
}

void suite_alternativity(SuiteContext& ctx) {
    for (int n = 0; n < ctx.samples; ++n) {
        const CplxOcton x = draw(ctx, SubspaceTag::FullCO);
        const CplxOcton y = draw(ctx, SubspaceTag::FullCO);
        ctx.record(std::max(associator(x, x, y).magnitude(), associator(x, y, y).magnitude()));
    }
}

void suite_ip_moves(SuiteContext& ctx) {
    for (int n = 0; n < ctx.samples; ++n) {
        const CplxOcton x = draw(ctx, SubspaceTag::FullCO);
        const CplxOcton y = draw(ctx, SubspaceTag::FullCO);
        const CplxOcton z = draw(ctx, SubspaceTag::FullCO);
        double worst = 0.0;
        for (IpMove form : {IpMove::LL, IpMove::LR, IpMove::RL, IpMove::RR}) {
            worst = std::max(worst, std::abs(residual_ipmove(form, x, y, z)));
        }
        ctx.record(worst);
    }
}

void suite_zvengrowski(SuiteContext& ctx) {
    for (int n = 0; n < ctx.samples; ++n) {
        const CplxOcton x = draw(ctx, SubspaceTag::FullCO);
        const CplxOcton y = draw(ctx, SubspaceTag::FullCO);
        const CplxOcton z = draw(ctx, SubspaceTag::FullCO);
        ctx.record(residual_zvengrowski(x, y, z));
    }
}

void suite_ab_identities(SuiteContext& ctx) {
    for (int n = 0; n < ctx.samples; ++n) {
        const CplxOcton a = draw(ctx, SubspaceTag::A);
        const CplxOcton a2 = draw(ctx, SubspaceTag::A);
        const CplxOcton b = draw(ctx, SubspaceTag::B);
        const CplxOcton b2 = draw(ctx, SubspaceTag::B);
        const double worst = std::max({
            residual_ab(a, b).magnitude(),
            residual_aab(a, a2, b).magnitude(),
            residual_baa(a, a2, b).magnitude(),
            residual_bba(a, b, b2).magnitude(),
            residual_abb(a, b, b2).magnitude(),
            residual_abba(a, a2, b, b2).magnitude(),
        });
        ctx.record(worst);
    }
}

void suite_grading_closure(SuiteContext& ctx) {
    constexpr std::array<std::pair<SubspaceTag, SubspaceTag>, 4> kPairs{{
        {SubspaceTag::A, SubspaceTag::A},
        {SubspaceTag::A, SubspaceTag::B},
        {SubspaceTag::B, SubspaceTag::A},
        {SubspaceTag::B, SubspaceTag::B},
    }};
    for (int n = 0; n < ctx.samples; ++n) {
        double worst = 0.0;
        for (const auto& [tx, ty] : kPairs) {
            const CplxOcton prod = draw(ctx, tx) * draw(ctx, ty);
            worst = std::max(worst, distance(prod, project(prod, product_grade(tx, ty))));
        }
        ctx.record(worst);
    }
}

// --- Lorentz ---------------------------------------------------------------

void suite_lorentz_algebra(SuiteContext& ctx) {
    for (int mu = 0; mu < 4; ++mu)
        for (int nu = 0; nu < 4; ++nu)
            for (int rho = 0; rho < 4; ++rho)
                for (int sigma = 0; sigma < 4; ++sigma) ctx.record(lorentz_algebra_residual(mu, nu, rho, sigma));
}

void suite_infinitesimal_dc(SuiteContext& ctx) {
    for (int mu = 0; mu < 4; ++mu)
        for (int nu = 0; nu < 4; ++nu)
            for (int rho = 0; rho < 4; ++rho) ctx.record(infinitesimal_dc_residual(mu, nu, rho));
}

void suite_double_cover(SuiteContext& ctx) {
    for (int n = 0; n < ctx.samples; ++n) {
        ctx.record(double_cover_residual(Theta::sample(ctx.rng, ctx.cfg.theta_bound)));
    }
}

void suite_rotation_unitarity(SuiteContext& ctx) {
    for (int n = 0; n < ctx.samples; ++n) {
        Theta theta;
        theta.set(1, 2, uniform_symmetric(ctx.rng, ctx.cfg.theta_bound));
        theta.set(1, 3, uniform_symmetric(ctx.rng, ctx.cfg.theta_bound));
        theta.set(2, 3, uniform_symmetric(ctx.rng, ctx.cfg.theta_bound));
        const CplxOcton ls = lambda_S(theta);
        ctx.record(distance(conj_both(ls) * ls, CplxOcton::one()));
    }
}

void suite_boost_selfconj(SuiteContext& ctx) {
    for (int n = 0; n < ctx.samples; ++n) {
        Theta theta;
        for (int k = 1; k < 4; ++k) theta.set(0, k, uniform_symmetric(ctx.rng, ctx.cfg.theta_bound));
        const CplxOcton ls = lambda_S(theta);
        ctx.record(distance(conj_both(ls), ls));
    }
}

void suite_gamma5(SuiteContext& ctx) { ctx.record(distance(gamma5_analogue(), CplxOcton::one())); }

void prop1_sweep(SuiteContext& ctx, SubspaceTag tag) {
    const double theta_bound = kInvarianceThetaFraction * ctx.cfg.theta_bound;
    for (int n = 0; n < ctx.samples; ++n) {
        const PolyField f = PolyField::sample(tag, ctx.cfg.field_degree, ctx.rng, 1.0);
        const Theta theta = Theta::sample(ctx.rng, theta_bound);
        const Point p = Point::sample(ctx.rng, kPointBound);
        ctx.record(lorentz_invariance_residual(f, theta, p));
    }
}

void suite_prop1_a(SuiteContext& ctx) { prop1_sweep(ctx, SubspaceTag::A); }
void suite_prop1_b(SuiteContext& ctx) { prop1_sweep(ctx, SubspaceTag::B); }

// --- gauge -----------------------------------------------------------------

PolyField prop2_witness_alpha() {
    PolyField alpha(SubspaceTag::A);
    alpha.add_term({0, 0, 0, 0}, CplxOcton::basis(1));
    alpha.add_term({1, 0, 0, 0}, CplxOcton::basis(2));
    alpha.add_term({0, 1, 0, 0}, CplxOcton::basis(3));
    alpha.add_term({0, 0, 1, 0}, CplxOcton::scalar(kI));
    return alpha;
}

void suite_prop2(SuiteContext& ctx) {
    for (int n = 0; n < ctx.samples; ++n) {
        const PolyField alpha = PolyField::sample(SubspaceTag::A, ctx.cfg.field_degree, ctx.rng, 1.0);
        const CplxOcton u = draw(ctx, SubspaceTag::AMinus);
        const Point p = Point::sample(ctx.rng, kPointBound);
        ctx.record(global_alpha_invariance_residual(alpha, u, p));
    }
    // u = 1 + e1 has a real scalar part, so Ū*U != 1.
    const CplxOcton u_bad = CplxOcton::one() + CplxOcton::basis(1);
    ctx.witness(global_alpha_invariance_residual(prop2_witness_alpha(), u_bad, Point{{0.3, -0.2, 0.5, 0.1}}));
}

void suite_prop3(SuiteContext& ctx) {
    for (int n = 0; n < ctx.samples; ++n) {
        const PolyField alpha = PolyField::sample(SubspaceTag::A, ctx.cfg.field_degree, ctx.rng, 1.0);
        const ConnectionField w = draw_connection(ctx);
        const auto [u, p] = draw_gauge_and_point(ctx);
        double worst = 0.0;
        for (int rho = 0; rho < 4; ++rho) worst = std::max(worst, covariance_residual_alpha(alpha, w, u, rho, p));
        ctx.record(worst);
    }
}

Theta prop4_witness_theta() {
    Theta theta;
    theta.set(1, 2, 0.9).set(0, 3, 0.4).set(2, 3, 0.3);
    return theta;
}

void suite_prop4_dichotomy(SuiteContext& ctx) {
    for (int n = 0; n < ctx.samples; ++n) {
        const double half_r = 0.5 * uniform_symmetric(ctx.rng, kCouplingBound);
        const Theta theta = Theta::sample(ctx.rng, ctx.cfg.theta_bound);
        const CplxOcton w = draw(ctx, SubspaceTag::AMinus);
        const CplxOcton beta = draw(ctx, SubspaceTag::B);
        ctx.record(general_coupling_residual(half_r, half_r, theta, w, beta));
    }
    ctx.witness(general_coupling_residual(1.0, 0.0, prop4_witness_theta(), CplxOcton::basis(1),
                                          CplxOcton::basis(4)));
}

void suite_prop5(SuiteContext& ctx) {
    for (int n = 0; n < ctx.samples; ++n) {
        const PolyField beta = PolyField::sample(SubspaceTag::B, ctx.cfg.field_degree, ctx.rng, 1.0);
        const ConnectionField w = draw_connection(ctx);
        const double r = uniform_symmetric(ctx.rng, kCouplingBound);
        const auto [u, p] = draw_gauge_and_point(ctx);
        double worst = 0.0;
        for (int rho = 0; rho < 4; ++rho) {
            worst = std::max(worst, covariance_residual_beta(beta, w, u, rho, p, r));
        }
        ctx.record(worst);
    }
}

void suite_lemma3(SuiteContext& ctx) {
    for (int n = 0; n < ctx.samples; ++n) {
        const auto [u, p] = draw_gauge_and_point(ctx);
        double worst = 0.0;
        for (int mu = 0; mu < 4; ++mu) worst = std::max(worst, std::abs(scal_der_u_residual(u, mu, p)));
        ctx.record(worst);
    }
}

void suite_lemma4(SuiteContext& ctx) {
    for (int n = 0; n < ctx.samples; ++n) {
        const ConnectionField w = draw_connection(ctx);
        const auto [u, p] = draw_gauge_and_point(ctx);
        double worst = 0.0;
        for (int rho = 0; rho < 4; ++rho) worst = std::max(worst, std::abs(scal_ww_residual(w, u, rho, p)));
        ctx.record(worst);
    }
}

struct RegisteredSuite {
    SuiteInfo info;
    SuiteBody body;
};

const std::vector<RegisteredSuite>& registered() {
    using TK = ToleranceKind;
    static const std::vector<RegisteredSuite> kSuites{
        {{"ip-moves", "inner-product moves <xy,z> = <y,x̄z> and relatives", 1000, TK::Exact, 0, {}},
         suite_ip_moves},
        {{"zvengrowski", "x(ȳz) + y(x̄z) = 2<x,y>z", 1000, TK::Exact, 0, {}}, suite_zvengrowski},
        {{"ab-identities", "A-B exchange identities ab = bā through (ab)(b'a') = a'(bb')a", 1000, TK::Exact, 0, {}},
         suite_ab_identities},
        {{"grading-closure", "A·A = B·B = A, A·B = B·A = B", 1000, TK::Exact, 0, {}}, suite_grading_closure},
        {{"lorentz-algebra", "spinor generators close into the Lorentz algebra (all 256 index tuples)", 256,
          TK::Exact, 0, {}},
         suite_lorentz_algebra},
        {{"infinitesimal-dc", "S* ē^ρ + ē^ρ S = V^ρ_σ ē^σ (all 64 index tuples)", 64, TK::Exact, 0, {}},
         suite_infinitesimal_dc},
        {{"double-cover", "Λ̄*_S ē^ρ Λ_S = (Λ_V)^ρ_σ ē^σ", 500, TK::Pinned, 1e-9, {}}, suite_double_cover},
        {{"rotation-unitarity", "Λ̄*_S Λ_S = 1 for spatial rotations", 500, TK::Pinned, 1e-10, {}},
         suite_rotation_unitarity},
        {{"boost-selfconj", "Λ̄*_S = Λ_S for pure boosts", 500, TK::Pinned, 1e-10, {}}, suite_boost_selfconj},
        {{"gamma5", "-i e^0 ē^1 e^2 ē^3 = 1", 1, TK::Pinned, 1e-14, {}}, suite_gamma5},
        {{"prop1-A", "Lorentz invariance of <α*, ē^ρ ∂_ρ α>", 200, TK::Pinned, 1e-9, {}}, suite_prop1_a},
        {{"prop1-B", "Lorentz invariance of <β*, ē^ρ ∂_ρ β> (nonassociative action)", 200, TK::Pinned, 1e-9, {}},
         suite_prop1_b},
        {{"prop2", "global gauge invariance for u in (C⊗A)-, broken by witness u = 1 + e1", 300, TK::Series, 0,
          1e-3},
         suite_prop2},
        {{"prop3", "(D_ρ α)' = (D_ρ α) U^-1 under local gauge transformations", 300, TK::Series, 0, {}},
         suite_prop3},
        {{"prop4-dichotomy", "[Λ̄*, r1 W + r2 W̄, β] vanishes for r1 = r2, not for the r1 != r2 witness", 100,
          TK::Pinned, 1e-10, 1e-3},
         suite_prop4_dichotomy},
        {{"prop5", "(D_ρ β)' = (D_ρ β) exp(r Scal(u))", 300, TK::Series, 0, {}}, suite_prop5},
        {{"lemma3", "<1, (∂U)U^-1> = <1, ∂u>", 300, TK::Series, 0, {}}, suite_lemma3},
        {{"lemma4", "Scal(W' - W) = -Scal(∂u)", 300, TK::Series, 0, {}}, suite_lemma4},
        {{"composition-law", "N(xy) = N(x) N(y)", 1000, TK::Exact, 0, {}}, suite_composition_law},
        {{"alternativity", "[x,x,y] = [x,y,y] = 0", 1000, TK::Exact, 0, {}}, suite_alternativity},
    };
    return kSuites;
}

const RegisteredSuite& find_suite(std::string_view id) {
    for (const auto& s : registered()) {
        if (s.info.id == id) return s;
    }
    throw UnknownSuite(std::string(id));
}

std::uint64_t fnv1a(std::string_view text) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : text) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

std::mt19937_64 suite_stream(std::uint64_t seed, std::string_view id) {
    const std::uint64_t tag = fnv1a(id);
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(tag), static_cast<std::uint32_t>(tag >> 32)};
    return std::mt19937_64(seq);
}

std::vector<std::string_view> selected_ids(const SuiteConfig& cfg) {
    std::vector<std::string_view> ids;
    for (const auto& s : registered()) {
        const bool wanted =
            cfg.suites.empty() || std::find(cfg.suites.begin(), cfg.suites.end(), s.info.id) != cfg.suites.end();
        if (wanted) ids.push_back(s.info.id);
    }
    return ids;
}

double parse_double(const std::string& key, const std::string& value) {
    std::size_t used = 0;
    const double v = std::stod(value, &used);
    if (used != value.size()) throw std::invalid_argument("config: bad number for " + key + ": " + value);
    return v;
}

long long parse_integer(const std::string& key, const std::string& value) {
    std::size_t used = 0;
    const long long v = std::stoll(value, &used);
    if (used != value.size()) throw std::invalid_argument("config: bad integer for " + key + ": " + value);
    return v;
}

std::uint64_t parse_unsigned(const std::string& key, const std::string& value) {
    std::size_t used = 0;
    if (!value.empty() && value.front() == '-') throw std::invalid_argument("config: " + key + " must be non-negative");
    const unsigned long long v = std::stoull(value, &used);
    if (used != value.size()) throw std::invalid_argument("config: bad integer for " + key + ": " + value);
    return v;
}

std::string trim(const std::string& s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

}  // namespace

void SuiteConfig::validate() const {
    if (samples_per_suite && *samples_per_suite < 1) throw std::invalid_argument("samples must be >= 1");
    if (!(tol_exact > 0.0) || !(tol_series > 0.0)) throw std::invalid_argument("tolerances must be > 0");
    if (!(theta_bound > 0.0)) throw std::invalid_argument("theta_bound must be > 0");
    if (field_degree < 0 || field_degree > PolyField::kDefaultMaxDegree) {
        throw std::invalid_argument("field_degree must be in 0..3");
    }
    for (const auto& id : suites) find_suite(id);
}

const std::vector<SuiteInfo>& suite_registry() {
    static const std::vector<SuiteInfo> kInfos = [] {
        std::vector<SuiteInfo> out;
        for (const auto& s : registered()) out.push_back(s.info);
        return out;
    }();
    return kInfos;
}

const SuiteInfo& suite_info(std::string_view id) { return find_suite(id).info; }

double suite_tolerance(const SuiteInfo& info, const SuiteConfig& cfg) {
    switch (info.tolerance_kind) {
        case ToleranceKind::Exact: return cfg.tol_exact;
        case ToleranceKind::Series: return cfg.tol_series;
        case ToleranceKind::Pinned: return info.pinned_tolerance;
    }
    return 0.0;
}

SuiteReport run_suite(std::string_view id, const SuiteConfig& cfg) {
    const RegisteredSuite& suite = find_suite(id);
    const auto start = std::chrono::steady_clock::now();

    std::mt19937_64 rng = suite_stream(cfg.seed, suite.info.id);
    SuiteContext ctx(cfg, cfg.samples_per_suite.value_or(suite.info.default_samples), rng);
    suite.body(ctx);

    SuiteReport report;
    report.suite_id = std::string(suite.info.id);
    report.samples = ctx.count();
    report.max_residual = ctx.max();
    report.mean_residual = ctx.mean();
    report.tolerance = suite_tolerance(suite.info, cfg);
    report.witness_residual = ctx.witness_value();
    report.passed = report.max_residual < report.tolerance;
    if (suite.info.witness_floor) {
        report.passed = report.passed && report.witness_residual && *report.witness_residual > *suite.info.witness_floor;
    }
    report.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                            std::chrono::steady_clock::now() - start)
                            .count();
    return report;
}

RunResult run_all(const SuiteConfig& cfg) {
    cfg.validate();
    std::vector<std::future<SuiteReport>> pending;
    for (std::string_view id : selected_ids(cfg)) {
        pending.push_back(std::async(std::launch::async, [id, &cfg] { return run_suite(id, cfg); }));
    }
    RunResult result;
    for (auto& f : pending) result.reports.push_back(f.get());
    const bool all_passed =
        std::all_of(result.reports.begin(), result.reports.end(), [](const SuiteReport& r) { return r.passed; });
    result.exit_code = all_passed ? 0 : 1;
    return result;
}

std::string to_text(const std::vector<SuiteReport>& reports) {
    std::ostringstream out;
    out << std::left << std::setw(20) << "suite" << std::right << std::setw(8) << "samples" << std::setw(13)
        << "max" << std::setw(13) << "mean" << std::setw(11) << "tol" << std::setw(13) << "witness"
        << std::setw(9) << "ms" << "  result\n";
    out << std::scientific << std::setprecision(3);
    int failed = 0;
    for (const auto& r : reports) {
        out << std::left << std::setw(20) << r.suite_id << std::right << std::setw(8) << r.samples << std::setw(13)
            << r.max_residual << std::setw(13) << r.mean_residual << std::setw(11) << std::setprecision(1)
            << r.tolerance << std::setprecision(3) << std::setw(13);
        if (r.witness_residual) {
            out << *r.witness_residual;
        } else {
            out << "-";
        }
        out << std::setw(9) << r.elapsed_ms << "  " << (r.passed ? "PASS" : "FAIL") << '\n';
        if (!r.passed) ++failed;
    }
    out << (failed == 0 ? "all suites passed" : std::to_string(failed) + " suite(s) failed") << '\n';
    return out.str();
}

std::string to_json(const std::vector<SuiteReport>& reports, const SuiteConfig& cfg, bool include_timing) {
    using nlohmann::ordered_json;
    ordered_json config{
        {"seed", cfg.seed},
        {"samples_per_suite", cfg.samples_per_suite ? ordered_json(*cfg.samples_per_suite) : ordered_json(nullptr)},
        {"tol_exact", cfg.tol_exact},
        {"tol_series", cfg.tol_series},
        {"theta_bound", cfg.theta_bound},
        {"field_degree", cfg.field_degree},
        {"suites", cfg.suites},
    };
    ordered_json suites = ordered_json::array();
    bool all_passed = true;
    for (const auto& r : reports) {
        ordered_json entry{
            {"suite_id", r.suite_id},
            {"samples", r.samples},
            {"max_residual", r.max_residual},
            {"mean_residual", r.mean_residual},
            {"tolerance", r.tolerance},
            {"witness_residual", r.witness_residual ? ordered_json(*r.witness_residual) : ordered_json(nullptr)},
            {"passed", r.passed},
        };
        if (include_timing) entry["elapsed_ms"] = r.elapsed_ms;
        suites.push_back(std::move(entry));
        all_passed = all_passed && r.passed;
    }
    ordered_json doc{{"config", std::move(config)}, {"suites", std::move(suites)}, {"passed", all_passed}};
    return doc.dump(2) + '\n';
}

std::map<std::string, std::string> read_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open config file: " + path);
    std::map<std::string, std::string> entries;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos) {
            throw std::invalid_argument(path + ":" + std::to_string(line_no) + ": expected key = value");
        }
        entries[trim(line.substr(0, eq))] = trim(line.substr(eq + 1));
    }
    return entries;
}

void apply_config_entries(SuiteConfig& cfg, const std::map<std::string, std::string>& entries) {
    for (const auto& [key, value] : entries) {
        if (key == "seed") {
            cfg.seed = parse_unsigned(key, value);
        } else if (key == "samples_per_suite" || key == "samples") {
            cfg.samples_per_suite = static_cast<int>(parse_integer(key, value));
        } else if (key == "tol_exact") {
            cfg.tol_exact = parse_double(key, value);
        } else if (key == "tol_series") {
            cfg.tol_series = parse_double(key, value);
        } else if (key == "theta_bound") {
            cfg.theta_bound = parse_double(key, value);
        } else if (key == "field_degree") {
            cfg.field_degree = static_cast<int>(parse_integer(key, value));
        } else if (key == "suites") {
            cfg.suites.clear();
            std::stringstream list(value);
            std::string id;
            while (std::getline(list, id, ',')) {
                id = trim(id);
                if (!id.empty()) cfg.suites.push_back(id);
            }
        } else {
            throw std::invalid_argument("config: unknown key '" + key + "'");
        }
    }
    cfg.validate();
}

}  // namespace octoweak
