#include "mcflow/critical_search.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <ostream>

#include "mcflow/errors.hpp"
#include "mcflow/interp.hpp"

namespace mcflow {

SearchContext::SearchContext()
{
    evolve.scheme = Scheme::imex;
    evolve.c_cfl = 8.0;
    evolve.keep_states = false;
}

namespace {

EvolveOptions run_options(const SearchContext& ctx)
{
    EvolveOptions o = ctx.evolve;
    o.torus = ctx.torus;
    if (ctx.torus) o.constants = barrier_constants(*ctx.torus);
    return o;
}

Trajectory initial_only(const ProfileCurve& c, const EvolveOptions& o)
{
    return start_evolution(c, 1.0, o).traj;
}

bool pinches(const Classification& c) { return c.decided && c.outcome.kind == OutcomeKind::neck_pinch; }

} // namespace

Family rho_family(double R, const SearchContext& ctx)
{
    require(ctx.torus != nullptr, ErrorKind::invalid_parameter, "the rho family needs the torus constant alpha");
    const double alpha = ctx.torus->alpha;
    Family f;
    f.name = "rho";
    f.make = [R, alpha, co = ctx.curve, sm = ctx.smoothing](double d) {
        return build_initial_curve(d, R, alpha, sm * std::min(d, R - d), co);
    };
    f.lo = 1.0;
    f.hi = std::min(alpha, 0.9 * R);
    f.min_param = 0.0;
    f.max_param = R;
    return f;
}

Family quarter_circle_family(double R, const SearchContext& ctx)
{
    Family f;
    f.name = "quarter-circle";
    f.make = [R, co = ctx.curve](double p) { return build_quarter_circle_curve(R - p, R, co); };
    f.lo = 0.1 * R;
    f.hi = 0.5 * R;
    f.min_param = 0.0;
    f.max_param = R;
    return f;
}

double default_horizon(const ShrinkerProfile& torus) { return 3.0 * torus.T_prime; }

Classification classify(const ProfileCurve& initial, double horizon, const SearchContext& ctx)
{
    require(horizon > 0, ErrorKind::invalid_parameter, "horizon must be positive");
    EvolveOptions o = run_options(ctx);
    Classification out;

    CertificateResult cert;
    if (ctx.torus) cert = certificate_check(initial, o.constants, *ctx.torus);
    if (cert.kind == Certificate::torus_enclosure && (ctx.certificates_only || !ctx.observe_pinch)) {
        out.outcome.kind = OutcomeKind::neck_pinch;
        out.outcome.t = cert.deadline;
        out.outcome.detail = "certified pinch by t = " + format_double(cert.deadline);
    } else if (cert.kind == Certificate::catenoid_on_top) {
        out.outcome.kind = OutcomeKind::survived_horizon;
        out.outcome.detail = "neck held above the catenoid neck " + format_double(cert.parameter);
    } else if (ctx.certificates_only) {
        out.decided = false;
        out.outcome.kind = OutcomeKind::survived_horizon;
        out.outcome.detail = "undecided without evolution";
    }
    if (cert.kind == Certificate::catenoid_on_top || ctx.certificates_only ||
        (cert.kind == Certificate::torus_enclosure && !ctx.observe_pinch)) {
        out.outcome.certificate = cert.kind;
        out.outcome.certificate_parameter = cert.parameter;
        out.traj = initial_only(initial, o);
        return out;
    }

    double run_horizon = horizon;
    if (cert.kind == Certificate::torus_enclosure) run_horizon = 1.05 * cert.deadline;

    Certificate found = cert.kind;
    double found_parameter = cert.parameter;
    double next_check = ctx.certificate_interval;
    if (ctx.torus && ctx.certificate_interval > 0 && found == Certificate::none) {
        o.on_tick = [&](EvolveProgress& p) {
            if (found != Certificate::none || p.state.t + 1e-12 < next_check) return false;
            while (next_check <= p.state.t + 1e-12) next_check += ctx.certificate_interval;
            const auto c = certificate_check(p.state.curve, o.constants, *ctx.torus);
            if (c.kind == Certificate::none) return false;
            found = c.kind;
            found_parameter = c.parameter;
            const std::string when = format_double(p.state.t);
            if (c.kind == Certificate::torus_enclosure) {
                const double deadline = p.state.t + c.deadline;
                if (ctx.observe_pinch) {
                    p.horizon = std::max(p.horizon, 1.05 * deadline);
                    return false;
                }
                p.outcome.kind = OutcomeKind::neck_pinch;
                p.outcome.t = deadline;
                p.outcome.detail = "certified at t = " + when + ", pinch by t = " + format_double(deadline);
            } else {
                p.outcome.kind = OutcomeKind::survived_horizon;
                p.outcome.t = p.state.t;
                p.outcome.detail = "catenoid certificate at t = " + when;
            }
            p.traj.events.push_back({p.state.t, EventKind::horizon, p.outcome.detail});
            return true;
        };
    }
    auto r = evolve(initial, run_horizon, o);
    out.outcome = r.outcome;
    out.traj = std::move(r.traj);
    if (found != Certificate::none) {
        out.outcome.certificate = found;
        out.outcome.certificate_parameter = found_parameter;
    }
    if (cert.kind == Certificate::torus_enclosure && out.outcome.kind == OutcomeKind::survived_horizon)
        out.outcome.detail = "no pinch observed by the certified deadline";
    return out;
}

Classification classify(double delta, double R, double horizon, const Epsilons& eps, const SearchContext& ctx)
{
    require(delta > 0 && delta < R, ErrorKind::invalid_parameter, "delta must lie in (0, R)");
    SearchContext c = ctx;
    c.evolve.eps = eps;
    return classify(rho_family(R, c).make(delta), horizon, c);
}

std::vector<std::pair<ManifestRecord, ManifestRecord>> foliation_violations(const std::vector<ManifestRecord>& records)
{
    std::vector<std::pair<ManifestRecord, ManifestRecord>> v;
    for (const auto& a : records)
        for (const auto& b : records)
            if (a.decided && b.decided && a.R == b.R && a.param < b.param &&
                a.outcome.kind != OutcomeKind::neck_pinch && b.outcome.kind == OutcomeKind::neck_pinch)
                v.emplace_back(a, b);
    return v;
}

CriticalBracket find_critical(const Family& family, double R, const SearchOptions& opt, const SearchContext& ctx)
{
    require(opt.bracket_tol > 0, ErrorKind::invalid_parameter, "bracket tolerance must be positive");
    require(family.lo < family.hi, ErrorKind::invalid_parameter, "starting bracket must satisfy lo < hi");
    require(opt.horizon > 0 || ctx.torus, ErrorKind::invalid_parameter, "a horizon or a torus profile is needed");
    CriticalBracket b;
    b.family = family.name;
    b.R = R;
    b.horizon = opt.horizon > 0 ? opt.horizon : default_horizon(*ctx.torus);
    b.standing_hypothesis = ctx.torus && R > 2 * ctx.torus->alpha;

    auto run = [&](double x) {
        auto c = classify(family.make(x), b.horizon, ctx);
        if (c.outcome.kind == OutcomeKind::numerical_failure)
            throw Error(ErrorKind::numerical_failure,
                        family.name + " at " + format_double(x) + ": " + c.outcome.detail);
        b.records.push_back({R, x, c.outcome, c.decided});
        return c;
    };

    double lo = family.lo, hi = family.hi;
    auto clo = run(lo);
    for (int k = 0; !pinches(clo) && k < opt.max_widen; ++k) {
        lo = 0.5 * (lo + family.min_param);
        clo = run(lo);
    }
    require(pinches(clo), ErrorKind::construction_failure, "no pinching member found below " + format_double(family.lo));
    auto chi = run(hi);
    for (int k = 0; pinches(chi) && k < opt.max_widen; ++k) {
        hi = 0.5 * (hi + family.max_param);
        chi = run(hi);
    }
    require(!pinches(chi), ErrorKind::construction_failure, "no surviving member found above " + format_double(family.hi));
    if (!chi.decided) hi = family.max_param;

    b.lo_witness = clo.outcome;
    b.hi_witness = chi.outcome;
    while (hi - lo > opt.bracket_tol && b.steps < opt.max_steps) {
        const double mid = 0.5 * (lo + hi);
        const auto c = run(mid);
        ++b.steps;
        if (!c.decided) break;
        if (pinches(c)) {
            lo = mid;
            b.lo_witness = c.outcome;
        } else {
            hi = mid;
            b.hi_witness = c.outcome;
        }
    }
    b.lo = lo;
    b.hi = hi;
    b.width = hi - lo;
    b.converged = b.width <= opt.bracket_tol;

    const auto v = foliation_violations(b.records);
    if (!v.empty())
        throw Error(ErrorKind::foliation_violation,
                    family.name + ": " + format_double(v.front().first.param) + " survives while " +
                        format_double(v.front().second.param) + " pinches");
    return b;
}

CriticalBracket find_critical(double R, const SearchOptions& opt, const SearchContext& ctx)
{
    return find_critical(rho_family(R, ctx), R, opt, ctx);
}

LimitStudy limit_study(const std::vector<double>& R_list, const SearchOptions& opt, const SearchContext& ctx)
{
    require(!R_list.empty(), ErrorKind::invalid_parameter, "empty radius list");
    for (std::size_t k = 1; k < R_list.size(); ++k)
        require(R_list[k] > R_list[k - 1], ErrorKind::invalid_parameter, "radius list must increase");
    LimitStudy s;
    for (double R : R_list) s.brackets.push_back(find_critical(R, opt, ctx));

    for (std::size_t i = 0; i < s.brackets.size(); ++i)
        for (std::size_t j = i + 1; j < s.brackets.size(); ++j) {
            const auto& a = s.brackets[i];
            const auto& c = s.brackets[j];
            if (c.midpoint() < a.midpoint() - (a.width + c.width)) {
                s.monotone = false;
                s.monotonicity_report.push_back("R = " + format_double(a.R) + " midpoint " + format_double(a.midpoint()) +
                                                " exceeds R = " + format_double(c.R) + " midpoint " +
                                                format_double(c.midpoint()));
            }
        }

    const auto best = std::max_element(s.brackets.begin(), s.brackets.end(),
                                       [](const CriticalBracket& a, const CriticalBracket& c) { return a.midpoint() < c.midpoint(); });
    s.eta = best->midpoint();
    double residual = 0.0;
    const std::size_t n = s.brackets.size();
    if (n == 2) {
        residual = std::abs(s.brackets[1].midpoint() - s.brackets[0].midpoint());
    } else if (n > 2) {
        // least squares of the midpoint against 1/R, evaluated at 1/R = 0
        double sx = 0, sy = 0, sxx = 0, sxy = 0;
        for (const auto& b : s.brackets) {
            const double x = 1.0 / b.R, y = b.midpoint();
            sx += x, sy += y, sxx += x * x, sxy += x * y;
        }
        const double den = n * sxx - sx * sx;
        const double intercept = den != 0 ? (sy * sxx - sx * sxy) / den : sy / n;
        residual = std::abs(intercept - s.eta);
    }
    s.eta_uncertainty = s.brackets.back().width + residual;
    return s;
}

NeckOrderingReport neck_ordering_check(const Trajectory& small_R, const Trajectory& large_R, double tol)
{
    NeckOrderingReport r;
    r.max_violation = -std::numeric_limits<double>::infinity();
    if (small_R.rows.empty() || large_R.rows.empty()) return r;
    std::vector<double> t, u;
    for (const auto& row : large_R.rows) {
        if (!t.empty() && row.t <= t.back()) continue;
        t.push_back(row.t);
        u.push_back(row.neck_x);
    }
    for (const auto& row : small_R.rows) {
        if (row.t < t.front() || row.t > t.back()) continue;
        const double d = row.neck_x - (t.size() > 1 ? lerp_table(t, u, row.t) : u.front());
        ++r.compared;
        if (d > r.max_violation) r.max_violation = d, r.t_at_max = row.t;
        if (d > tol) r.violations.emplace_back(row.t, d);
    }
    r.pass = r.violations.empty();
    return r;
}

void write_manifest(std::ostream& os, const std::vector<ManifestRecord>& records)
{
    os << "R,param,outcome,t_event,certificate,suspected,decided\n";
    for (const auto& m : records)
        os << format_double(m.R) << ',' << format_double(m.param) << ',' << to_string(m.outcome.kind) << ','
           << format_double(m.outcome.t) << ',' << to_string(m.outcome.certificate) << ','
           << (m.outcome.suspected ? "true" : "false") << ',' << (m.decided ? "true" : "false") << '\n';
}

void write_bracket_csv(std::ostream& os, const std::vector<CriticalBracket>& brackets)
{
    os << "R,delta_lo,delta_hi,width,horizon\n";
    for (const auto& b : brackets)
        os << format_double(b.R) << ',' << format_double(b.lo) << ',' << format_double(b.hi) << ','
           << format_double(b.width) << ',' << format_double(b.horizon) << '\n';
}

} // namespace mcflow
