#include "mcflow/diagnostics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <ostream>

#include "mcflow/errors.hpp"
#include "mcflow/interp.hpp"

namespace mcflow {

namespace {

constexpr double inf = std::numeric_limits<double>::infinity();
constexpr double half_pi = 1.57079632679489661923;

void need_states(const Trajectory& traj)
{
    require(!traj.states.empty(), ErrorKind::invalid_parameter, "trajectory has no recorded states");
}

double relative(double value, double bound) { return (value - bound) / std::max(std::abs(bound), 1e-300); }

double wall_of(const FlowState& s) { return s.curve.bounded() ? s.curve.wall : s.curve.x_end(); }

} // namespace

EstimateReport::EstimateReport() : max_violation(-inf) {}

void EstimateReport::consider(const EstimateSample& s)
{
    vacuous = false;
    if (!samples.empty() && samples.back().t == s.t) {
        if (s.violation > samples.back().violation) samples.back() = s;
    } else {
        samples.push_back(s);
    }
    if (s.violation > max_violation) {
        max_violation = s.violation;
        x_at_max = s.x;
        t_at_max = s.t;
    }
}

void EstimateReport::finish()
{
    pass = vacuous || max_violation <= tolerance;
    if (vacuous) notes.push_back("no recorded point in the checked domain");
}

void write_report_text(std::ostream& os, const EstimateReport& r)
{
    os << "estimate: " << r.id << '\n';
    os << "domain: x in [" << format_double(r.x_lo) << ", " << format_double(r.x_hi) << "], t in ["
       << format_double(r.t_lo) << ", " << format_double(r.t_hi) << "]\n";
    os << "max_violation: " << format_double(r.max_violation) << '\n';
    os << "at: x = " << format_double(r.x_at_max) << ", t = " << format_double(r.t_at_max) << '\n';
    os << "tolerance: " << format_double(r.tolerance) << '\n';
    os << "result: " << (r.pass ? "pass" : "fail") << (r.vacuous ? " (vacuous)" : "") << '\n';
    for (const auto& [k, v] : r.parameters) os << "param " << k << " = " << format_double(v) << '\n';
    for (const auto& n : r.notes) os << "note: " << n << '\n';
}

void write_report_csv(std::ostream& os, const EstimateReport& r)
{
    os << "t,x,value,bound,violation\n";
    for (const auto& s : r.samples)
        os << format_double(s.t) << ',' << format_double(s.x) << ',' << format_double(s.value) << ','
           << format_double(s.bound) << ',' << format_double(s.violation) << '\n';
}

SvgPlot report_plot(const EstimateReport& r)
{
    SvgPlot p(r.id, "t", "value at the worst point");
    std::vector<double> t, v, b;
    for (const auto& s : r.samples) {
        t.push_back(s.t);
        v.push_back(s.value);
        b.push_back(s.bound);
    }
    p.add("value", t, v);
    p.add("bound", t, b, true);
    return p;
}

std::vector<GraphSample> graph_samples(const ProfileCurve& curve)
{
    std::vector<GraphSample> out;
    const bool both = curve.has_neck() && curve.has_outer();
    double sx = 0, sy = 0;
    if (both) {
        const CurveEval ev(curve);
        sx = ev.switch_x();
        sy = ev.switch_y();
    }
    if (curve.has_neck()) {
        const auto d = chart_derivatives(curve.neck, true);
        for (int i = 0; i < curve.neck.size(); ++i) {
            const double y = curve.neck.at(i);
            if (both && y > sy) break;
            out.push_back({curve.neck.val[i], y, d.d1[i] > 0 ? 1.0 / d.d1[i] : inf, d.d1[i]});
        }
    }
    if (curve.has_outer()) {
        const auto d = chart_derivatives(curve.outer, false);
        for (int j = 0; j < curve.outer.size(); ++j) {
            const double x = curve.outer.at(j);
            if (both && x < sx) continue;
            out.push_back({x, curve.outer.val[j], d.d1[j], d.d1[j] > 0 ? 1.0 / d.d1[j] : inf});
        }
    }
    return out;
}

// ---------------------------------------------------------------- far-field catenoid slope

double catenoid_gradient_bound(double alpha, double x)
{
    const double c = alpha + 1;
    require(x > c, ErrorKind::domain_error, "bound defined for x > alpha + 1");
    return c / std::sqrt(x * x - c * c);
}

EstimateReport check_uniform_catenoid_gradient(const Trajectory& traj, double alpha, double rel_tol)
{
    need_states(traj);
    EstimateReport r;
    r.id = "uniform-catenoid-gradient";
    r.tolerance = rel_tol;
    r.x_lo = alpha + 2;
    r.x_hi = wall_of(traj.states.front());
    r.t_lo = traj.states.front().t;
    r.t_hi = traj.states.back().t;
    r.parameters["alpha"] = alpha;
    r.parameters["bound_at_alpha_plus_2"] = catenoid_gradient_bound(alpha, alpha + 2);
    if (r.x_hi <= r.x_lo) r.notes.push_back("domain [alpha + 2, R] is empty");
    for (const auto& s : traj.states)
        for (const auto& g : graph_samples(s.curve)) {
            if (g.x < r.x_lo || g.x > r.x_hi) continue;
            const double b = catenoid_gradient_bound(alpha, g.x);
            r.consider({s.t, g.x, g.dydx, b, relative(g.dydx, b)});
        }
    r.finish();
    return r;
}

// ---------------------------------------------------------------- arctan comparison

bool k_condition(double a, double b, double k, double alpha)
{
    const double c = alpha + 1;
    if (k <= c) return false;
    return c * (std::log(k) - std::log(a)) / std::sqrt(k * k - c * c) < 0.25 * M_PI * std::log(b / a);
}

double arctan_limit_bound(double a, double b, double k, double alpha)
{
    const double c = alpha + 1;
    require(0 < a && a < b && b < k && k > c, ErrorKind::invalid_parameter, "need 0 < a < b < k and k > alpha + 1");
    return std::tan(half_pi * (std::log(k) - std::log(b)) / (std::log(k) - std::log(a)) +
                    std::atan(c / std::sqrt(k * k - c * c)));
}

ArctanDecayReport check_arctan_gradient_decay(const Trajectory& traj, double a, double b, double c, double k,
                                              double alpha, double rel_tol)
{
    need_states(traj);
    require(0 < a && a < b && b < c, ErrorKind::invalid_parameter, "need 0 < a < b < c");
    const auto& first = traj.states.front().curve;
    const bool bounded = first.bounded();
    double L = k, extra = 0.0;
    if (bounded) {
        require(b < first.wall, ErrorKind::invalid_parameter, "need b < R");
        L = first.wall;
    } else {
        require(c < k, ErrorKind::invalid_parameter, "need c < k");
        require(k_condition(a, b, k, alpha), ErrorKind::invalid_parameter,
                "side condition on k fails for (a, b, k) = (" + format_double(a) + ", " + format_double(b) + ", " +
                    format_double(k) + ")");
        extra = std::atan((alpha + 1) / std::sqrt(k * k - (alpha + 1) * (alpha + 1)));
    }

    ArctanDecayReport out;
    auto& r = out.estimate;
    r.id = "arctan-gradient-decay";
    r.tolerance = rel_tol;
    r.x_lo = b;
    r.x_hi = std::min(L, wall_of(traj.states.front()));
    if (bounded) r.notes.push_back("bounded trajectory: the wall radius replaces k");

    // T: from here on the neck stays inside a/2
    double T = -1;
    for (auto it = traj.states.rbegin(); it != traj.states.rend(); ++it) {
        if (it->curve.neck_radius() >= 0.5 * a) break;
        T = it->t;
    }
    const double mu = half_pi / std::log(L / a);
    r.parameters["mu"] = mu;
    r.parameters["k_or_R"] = L;
    if (!bounded) r.parameters["limit_bound"] = arctan_limit_bound(a, b, k, alpha);
    if (T < 0) {
        r.notes.push_back("the neck never stays below a/2");
        r.t_lo = r.t_hi = traj.states.back().t;
    } else {
        const double Tp = T + L * (L + half_pi);
        const double omega = L + half_pi * std::log(Tp);
        r.parameters["T"] = T;
        r.parameters["T_prime"] = Tp;
        r.parameters["omega"] = omega;
        r.t_lo = Tp;
        r.t_hi = traj.states.back().t;
        for (const auto& s : traj.states) {
            if (s.t < Tp) continue;
            const double angle = mu * std::log(L / b) + (omega - b) / std::log(s.t) + extra;
            const double bound = angle < half_pi ? std::tan(angle) : inf;
            for (const auto& g : graph_samples(s.curve)) {
                if (g.x < b || g.x > r.x_hi) continue;
                r.consider({s.t, g.x, g.dydx, bound, std::isfinite(bound) ? relative(g.dydx, bound) : -inf});
            }
        }
        if (r.t_lo > r.t_hi) r.notes.push_back("trajectory ends before T'");
    }
    r.finish();

    auto& o = out.oscillation;
    for (const auto& s : traj.states) {
        const auto& cv = s.curve;
        if (cv.neck_radius() >= b || wall_of(s) < c) continue;
        const CurveEval ev(cv);
        o.t.push_back(s.t);
        o.osc.push_back(ev.height_at(c) - ev.height_at(b));
    }
    o.decreasing = !o.osc.empty();
    for (std::size_t i = 1; i < o.osc.size(); ++i)
        if (o.osc[i] > o.osc[i - 1]) o.decreasing = false;
    o.final_value = o.osc.empty() ? inf : o.osc.back();
    if (o.osc.empty()) r.notes.push_back("f(b) and f(c) never both on the graph");
    return out;
}

// ---------------------------------------------------------------- neck chart gradient

double neck_upper_bound(double alpha, double mu, double y) { return 2 * alpha * std::exp(2 * y / mu) / mu; }

double neck_lower_bound(double eps, double lambda, double a, double y, double t)
{
    return eps * std::exp(-lambda * lambda * t) * std::sin(lambda * (y - a));
}

NeckGradientReport check_neck_vertical_gradient(const Trajectory& traj, double t0, double t1, double alpha,
                                                double rel_tol, double a_fraction)
{
    need_states(traj);
    require(t0 <= t1, ErrorKind::invalid_parameter, "window must satisfy t0 <= t1");
    require(0 < a_fraction && a_fraction < 1, ErrorKind::invalid_parameter, "a_fraction must lie in (0, 1)");
    for (const auto& e : traj.events)
        require(!(e.kind == EventKind::pinch && e.t >= t0 && e.t <= t1), ErrorKind::window_invalid,
                "the neck pinches at t = " + format_double(e.t) + " inside the window");
    std::vector<const FlowState*> w;
    for (const auto& s : traj.states)
        if (s.t >= t0 && s.t <= t1) w.push_back(&s);
    require(!w.empty(), ErrorKind::window_invalid, "no recorded state inside the window");

    NeckGradientReport out;
    out.mu = inf;
    out.h = inf;
    for (const auto* s : w) {
        out.mu = std::min(out.mu, s->curve.neck_radius());
        out.h = std::min(out.h, s->curve.height());
    }
    require(out.mu > 0, ErrorKind::window_invalid, "neck radius vanishes inside the window");
    out.a = a_fraction * out.h;
    out.lambda = M_PI / (out.h - out.a);

    auto& up = out.upper;
    up.id = "neck-gradient-upper";
    up.tolerance = rel_tol;
    up.x_lo = 0;
    up.x_hi = 0.5 * out.mu;   // y-range
    up.t_lo = t0;
    up.t_hi = t1;
    up.parameters["mu"] = out.mu;
    up.parameters["cap"] = 2 * alpha * std::exp(1.0) / out.mu;

    auto& lo = out.lower;
    lo.id = "neck-gradient-lower";
    lo.tolerance = rel_tol;
    lo.x_lo = out.a;
    lo.x_hi = out.h;
    lo.t_lo = t0;
    lo.t_hi = t1;

    out.eps = inf;
    for (const auto& g : graph_samples(w.front()->curve))
        if (g.y >= out.a && g.y <= out.h) out.eps = std::min(out.eps, std::atan(g.dxdy));
    if (!std::isfinite(out.eps)) out.eps = 0.0;
    lo.parameters["eps"] = out.eps;
    lo.parameters["lambda"] = out.lambda;
    lo.parameters["a"] = out.a;
    lo.parameters["h"] = out.h;

    double sigma = 0.0;
    for (const auto* s : w) {
        for (const auto& g : graph_samples(s->curve)) {
            if (g.y <= up.x_hi) {
                const double b = neck_upper_bound(alpha, out.mu, g.y);
                up.consider({s->t, g.y, g.dxdy, b, relative(g.dxdy, b)});
            }
            if (g.y >= out.a && g.y <= out.h) {
                const double b = neck_lower_bound(out.eps, out.lambda, out.a, g.y, s->t - t0);
                const double v = std::isfinite(g.dxdy) ? (b - g.dxdy) / std::max(out.eps, 1e-300) : -inf;
                lo.consider({s->t, g.y, g.dxdy, b, out.eps > 0 ? v : b - g.dxdy});
            }
            if (s->t > 0 && std::isfinite(g.dxdy) && g.dxdy > 1) sigma = std::max(sigma, s->t * std::log(g.dxdy));
        }
    }
    out.sigma_fit = sigma;
    up.parameters["sigma_fit"] = sigma;
    up.finish();
    lo.finish();
    return out;
}

// ---------------------------------------------------------------- height and neck

EstimateReport check_height_neck_coupling(const Trajectory& traj, double kappa, double alpha)
{
    need_states(traj);
    require(kappa > 0, ErrorKind::invalid_parameter, "kappa must be positive");
    EstimateReport r;
    r.id = "height-neck-coupling";
    r.tolerance = 0.0;
    r.x_lo = 0;
    r.x_hi = wall_of(traj.states.front());
    r.t_lo = traj.states.front().t;
    r.t_hi = traj.states.back().t;
    r.parameters["kappa"] = kappa;
    r.parameters["alpha"] = alpha;
    int counts[4] = {0, 0, 0, 0};
    for (const auto& s : traj.states) {
        const double neck = s.curve.neck_radius();
        const double H = s.curve.height();
        const double R = wall_of(s);
        if (neck >= kappa) {
            r.consider({s.t, R, H, 0.5 * kappa, 0.5 * kappa - H});
            ++counts[0];
        }
        if (H <= kappa) {
            r.consider({s.t, 0.0, neck, 2 * kappa, neck - 2 * kappa});
            ++counts[1];
        }
        for (const auto& g : graph_samples(s.curve)) {
            if (g.x <= neck || g.x > R / alpha) continue;
            r.consider({s.t, g.x, g.y, alpha * g.x, g.y - alpha * g.x});
            ++counts[2];
        }
        r.consider({s.t, 0.0, neck, alpha, neck - alpha});
        ++counts[3];
    }
    r.parameters["checked_height_lower"] = counts[0];
    r.parameters["checked_neck_upper"] = counts[1];
    r.parameters["checked_cone"] = counts[2];
    r.parameters["checked_neck_alpha"] = counts[3];
    r.finish();
    // the inequalities are strict
    if (!r.vacuous && r.max_violation >= 0) r.pass = false;
    return r;
}

// ---------------------------------------------------------------- first variation

EnergyReport energy_budget(const Trajectory& traj, double alpha, double rel_tol)
{
    require(!traj.rows.empty(), ErrorKind::invalid_parameter, "trajectory has no rows");
    EnergyReport e;
    const auto& a = traj.rows.front();
    const auto& b = traj.rows.back();
    e.area0 = a.area;
    e.area_end = b.area;
    e.h2_total = b.h2_budget_cum - a.h2_budget_cum;
    e.boundary_total = b.boundary_cum - a.boundary_cum;
    e.identity_residual = (e.area0 - e.area_end) - (e.h2_total - e.boundary_total);
    e.relative_residual = e.area0 > 0 ? std::abs(e.identity_residual) / e.area0 : std::abs(e.identity_residual);
    e.identity_pass = e.relative_residual <= rel_tol;

    auto& r = e.boundary_sign;
    r.id = "boundary-mean-curvature-sign";
    r.tolerance = 1e-6;
    r.x_lo = alpha + 2;
    r.t_lo = a.t;
    r.t_hi = b.t;
    for (const auto& s : traj.states) {
        r.x_hi = std::max(r.x_hi, wall_of(s));
        for (const auto& h : mean_curvature_profile(s.curve)) {
            if (h.neck_chart || h.x < r.x_lo) continue;
            r.consider({s.t, h.x, h.H, 0.0, -h.H});
        }
    }
    if (r.x_hi <= r.x_lo) r.notes.push_back("domain x >= alpha + 2 lies outside the cylinder");
    r.finish();

    std::vector<double> t, m;
    for (const auto& row : traj.rows) {
        if (!t.empty() && row.t <= t.back()) continue;
        t.push_back(row.t);
        m.push_back(row.h2_budget_cum);
    }
    for (double s = t.front(); s + 1 <= t.back() + 1e-12; s += 1.0) {
        const double hi = std::min(s + 1, t.back());
        e.window_start.push_back(s);
        e.window_mass.push_back(t.size() > 1 ? lerp_table(t, m, hi) - lerp_table(t, m, s) : 0.0);
    }
    if (e.window_mass.size() >= 2) {
        const double early = e.window_mass.front(), late = e.window_mass.back();
        e.mass_decays = late < early || (early == 0 && late == 0);
    }
    return e;
}

// ---------------------------------------------------------------- multiplicity two

MultiplicityReport detect_multiplicity_two(const Trajectory& traj, double K_radius, double eps)
{
    need_states(traj);
    require(eps > 0, ErrorKind::invalid_parameter, "eps must be positive");
    require(K_radius > eps, ErrorKind::invalid_parameter, "K must exceed eps");
    require(K_radius <= wall_of(traj.states.front()) * (1 + 1e-12), ErrorKind::invalid_parameter,
            "K lies outside the simulated domain");
    MultiplicityReport r;
    int first = -1;
    for (std::size_t k = 0; k < traj.states.size(); ++k) {
        const auto& cv = traj.states[k].curve;
        double c0 = inf, c1 = inf;
        if (cv.neck_radius() < eps) {
            c0 = c1 = 0.0;
            for (const auto& g : graph_samples(cv)) {
                if (g.x < eps || g.x > K_radius) continue;
                c0 = std::max(c0, std::abs(g.y));
                c1 = std::max(c1, std::abs(g.dydx));
            }
            const CurveEval ev(cv);
            c0 = std::max({c0, std::abs(ev.height_at(eps)), std::abs(ev.height_at(K_radius))});
        }
        r.t.push_back(traj.states[k].t);
        r.c0.push_back(c0);
        r.c1.push_back(c1);
        const bool ok = c0 < eps && c1 < eps;
        if (ok && first < 0) first = static_cast<int>(k);
    }
    if (first >= 0) {
        r.reached = true;
        r.t_eps = r.t[first];
        r.persists = true;
        for (std::size_t k = first; k < r.t.size(); ++k)
            if (!(r.c0[k] < eps && r.c1[k] < eps)) r.persists = false;
    }
    return r;
}

// ---------------------------------------------------------------- far field of unbounded runs

double sphere_gap(double r)
{
    require(r >= 2, ErrorKind::domain_error, "sphere radius must be at least 2");
    return 4.0 / (r + std::sqrt(r * r - 4));
}

double avoidance_radius(double eps)
{
    require(eps > 0, ErrorKind::invalid_parameter, "eps must be positive");
    return std::max(2.0, 4.0 / eps + 0.25 * eps);
}

double quadratic_radius(double eps)
{
    require(eps > 0, ErrorKind::invalid_parameter, "eps must be positive");
    return std::sqrt(8.0 / eps + 1.0);
}

AsymptoticPlaneReport asymptotic_plane_check(const Trajectory& traj, double eps)
{
    need_states(traj);
    require(eps > 0, ErrorKind::invalid_parameter, "eps must be positive");
    const auto& c0 = traj.states.front().curve;
    require(!c0.bounded() && c0.has_outer(), ErrorKind::invalid_parameter, "needs an unbounded trajectory");
    AsymptoticPlaneReport out;
    out.plane = c0.outer.val.back();
    out.R_prime = c0.outer.grid.hi;
    for (int j = c0.outer.size() - 1; j >= 0; --j) {
        if (std::abs(c0.outer.val[j] - out.plane) > 0.25 * eps) break;
        out.R_prime = c0.outer.at(j);
    }
    out.r = avoidance_radius(eps);
    out.R_eps = out.r + out.R_prime;

    auto& r = out.estimate;
    r.id = "asymptotic-plane";
    r.tolerance = 0.0;
    r.x_lo = out.R_eps;
    r.x_hi = c0.x_end();
    r.t_lo = traj.states.front().t;
    r.t_hi = traj.states.back().t;
    r.parameters["plane"] = out.plane;
    r.parameters["r"] = out.r;
    r.parameters["R_prime"] = out.R_prime;
    r.parameters["R_eps"] = out.R_eps;
    if (out.R_eps >= r.x_hi) r.notes.push_back("R_eps lies beyond the truncation radius");
    for (const auto& s : traj.states)
        for (const auto& g : graph_samples(s.curve)) {
            if (g.x <= out.R_eps) continue;
            const double d = std::abs(g.y - out.plane);
            r.consider({s.t, g.x, d, eps, d - eps});
        }
    r.finish();
    return out;
}

} // namespace mcflow
