#include "mcflow/evolver.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>

#include <nlohmann/json.hpp>

#include "mcflow/errors.hpp"
#include "mcflow/tridiag.hpp"

namespace mcflow {

const char* to_string(EventKind k)
{
    switch (k) {
    case EventKind::pinch: return "pinch";
    case EventKind::collapse: return "collapse";
    case EventKind::rechart: return "rechart";
    case EventKind::rechart_failure: return "rechart-failure";
    case EventKind::stiffness_failure: return "stiffness-failure";
    case EventKind::numerical_failure: return "numerical-failure";
    case EventKind::horizon: return "horizon";
    }
    return "horizon";
}

const char* to_string(OutcomeKind k)
{
    switch (k) {
    case OutcomeKind::neck_pinch: return "NeckPinch";
    case OutcomeKind::boundary_collapse: return "BoundaryCollapse";
    case OutcomeKind::survived_horizon: return "SurvivedHorizon";
    case OutcomeKind::numerical_failure: return "NumericalFailure";
    }
    return "SurvivedHorizon";
}

namespace {

// Semi-discrete operator on the free nodes of a chart:
// F_i = lo_i f_{i-1} + di_i f_i + up_i f_{i+1} + src_i, with ghosts already folded in.
struct ChartOp {
    int first = 0, last = -1;   // free node range
    std::vector<double> lo, di, up, src, slope;
};

WallCondition effective_wall(const ProfileCurve& c, const EvolveOptions& opt)
{
    if (!c.bounded() && opt.wall == WallCondition::free) return WallCondition::clamp;
    return opt.wall;
}

double wall_slope_value(const ProfileCurve& c, const EvolveOptions& opt, WallCondition w)
{
    if (w == WallCondition::slope) return opt.wall_slope;
    if (w == WallCondition::envelope) {
        const double a1 = opt.envelope_alpha + 1, X = c.x_end();
        require(X > a1, ErrorKind::invalid_parameter, "envelope slope needs X_max > alpha + 1");
        return a1 / std::sqrt(X * X - a1 * a1);
    }
    return 0.0;
}

ChartOp neck_op(const ProfileCurve& c)
{
    const auto& u = c.neck.val;
    const int n = c.neck.size();
    const double h = c.neck.grid.ds(), h2 = h * h;
    ChartOp op;
    op.first = 0;
    op.last = c.has_outer() ? n - 2 : n - 1;
    op.lo.assign(n, 0.0);
    op.di.assign(n, 0.0);
    op.up.assign(n, 0.0);
    op.src.assign(n, 0.0);
    op.slope.assign(n, 0.0);
    for (int i = 0; i < n; ++i) {
        const double um = i > 0 ? u[i - 1] : u[1];
        const double upv = i + 1 < n ? u[i + 1] : (c.has_outer() ? 2 * u[i] - u[i - 1] : u[n - 2]);
        op.slope[i] = (upv - um) / (2 * h);
        if (i > op.last) break;
        const double a = 1.0 / (1.0 + op.slope[i] * op.slope[i]);
        op.lo[i] = a / h2;
        op.di[i] = -2 * a / h2;
        op.up[i] = a / h2;
        op.src[i] = -1.0 / u[i];
        if (i == 0) {
            op.up[i] += op.lo[i];
            op.lo[i] = 0.0;
        }
        if (i == n - 1) {
            op.lo[i] += op.up[i];
            op.up[i] = 0.0;
        }
    }
    return op;
}

ChartOp outer_op(const ProfileCurve& c, const std::vector<double>& xn, WallCondition w, double g)
{
    const auto& v = c.outer.val;
    const Grid& gr = c.outer.grid;
    const int m = c.outer.size();
    const double ds = gr.ds(), ds2 = ds * ds;
    const double K = gr.kind == Grid::Kind::log ? 1.0 : 0.0;
    ChartOp op;
    op.first = c.has_neck() ? 1 : 0;
    op.last = w == WallCondition::clamp ? m - 2 : m - 1;
    op.lo.assign(m, 0.0);
    op.di.assign(m, 0.0);
    op.up.assign(m, 0.0);
    op.src.assign(m, 0.0);
    op.slope.assign(m, 0.0);
    for (int j = 0; j < m; ++j) {
        const double x = xn[j], J = gr.kind == Grid::Kind::log ? x : 1.0;
        const double wall_ghost = m >= 2 ? v[m - 2] + 2 * ds * J * g : v[j];
        const double vm = j > 0 ? v[j - 1] : (c.has_neck() ? 2 * v[0] - v[1] : v[1]);
        const double vp = j + 1 < m ? v[j + 1] : (w == WallCondition::clamp ? 2 * v[j] - v[j - 1] : wall_ghost);
        const double vs = (vp - vm) / (2 * ds);
        op.slope[j] = vs / J;
        if (j < op.first || j > op.last) continue;
        const double D = 1.0 / (J * J + vs * vs);
        const double b = 1.0 / (x * J) - K * D;
        op.lo[j] = D / ds2 - b / (2 * ds);
        op.di[j] = -2 * D / ds2;
        op.up[j] = D / ds2 + b / (2 * ds);
        if (j == 0) {
            op.up[j] += op.lo[j];
            op.lo[j] = 0.0;
        }
        if (j == m - 1) {
            op.src[j] += op.up[j] * 2 * ds * J * g;
            op.lo[j] += op.up[j];
            op.up[j] = 0.0;
        }
    }
    return op;
}

double rate(const ChartOp& op, const std::vector<double>& f, int i)
{
    double r = op.di[i] * f[i] + op.src[i];
    if (op.lo[i] != 0.0) r += op.lo[i] * f[i - 1];
    if (op.up[i] != 0.0) r += op.up[i] * f[i + 1];
    return r;
}

void advance_chart(const ChartOp& op, std::vector<double>& f, double dt, Scheme scheme)
{
    if (op.last < op.first) return;
    if (scheme == Scheme::explicit_euler) {
        std::vector<double> r(op.last - op.first + 1);
        for (int i = op.first; i <= op.last; ++i) r[i - op.first] = rate(op, f, i);
        for (int i = op.first; i <= op.last; ++i) f[i] += dt * r[i - op.first];
        return;
    }
    const int n = op.last - op.first + 1;
    std::vector<double> a(n, 0.0), b(n), c(n, 0.0), d(n);
    for (int k = 0; k < n; ++k) {
        const int i = op.first + k;
        b[k] = 1.0 - dt * op.di[i];
        d[k] = f[i] + dt * op.src[i];
        if (op.lo[i] != 0.0) {
            if (k > 0) a[k] = -dt * op.lo[i];
            else d[k] += dt * op.lo[i] * f[i - 1];
        }
        if (op.up[i] != 0.0) {
            if (k + 1 < n) c[k] = -dt * op.up[i];
            else d[k] += dt * op.up[i] * f[i + 1];
        }
    }
    solve_tridiagonal(a, b, c, d);
    for (int k = 0; k < n; ++k) f[op.first + k] = d[k];
}

double max_abs(const std::vector<double>& s)
{
    double m = 0;
    for (double v : s) m = std::max(m, std::abs(v));
    return m;
}

bool overlap_ok(const ProfileCurve& c)
{
    if (!c.has_neck() || !c.has_outer()) return true;
    const double Y = c.y_split(), X = c.x_split();
    return c.outer.val.front() < Y && c.neck.val.back() > X && c.outer.val.back() > Y;
}

void exchange(ProfileCurve& c)
{
    if (!c.has_neck() || !c.has_outer()) return;
    c.neck.val.back() = pchip_inverse_at(c.outer.grid.nodes(), c.outer.val, c.y_split());
    c.outer.val.front() = pchip_inverse_at(c.neck.grid.nodes(), c.neck.val, c.x_split());
}

// Same switch point as CurveEval, without building the full interpolants.
Point switch_point(const ProfileCurve& c, const std::vector<double>& yn)
{
    const double ylo = c.outer.val.front(), yhi = c.y_split();
    if (yhi > ylo) {
        const double sy = 0.5 * (ylo + yhi);
        return {pchip_eval_at(yn, c.neck.val, sy), sy};
    }
    return {c.x_split(), ylo};
}

struct Advance {
    double dt = 0.0;
    double h2_rate = 0.0;
    double boundary_rate = 0.0;
    double max_H = 0.0;
    bool recharted = false;
};

// Advances `s` in place by one step no longer than dt_cap.
Advance advance(FlowState& s, double dt_cap, const EvolveOptions& opt, const std::vector<double>& clamp, double dt_min)
{
    Advance out;
    ProfileCurve& c = s.curve;
    const double theta = opt.slope_threshold;
    const WallCondition w = effective_wall(c, opt);
    const double g = wall_slope_value(c, opt, w);
    ChartOp nop, oop;
    std::vector<double> yn, xn;
    auto build = [&] {
        if (c.has_neck()) {
            yn = c.neck.grid.nodes();
            nop = neck_op(c);
        }
        if (c.has_outer()) {
            xn = c.outer.grid.nodes();
            oop = outer_op(c, xn, w, g);
        }
    };
    build();
    if (c.has_neck() && c.has_outer()) {
        const double lim = opt.rechart_factor * theta;
        if (max_abs(nop.slope) > lim || max_abs(oop.slope) > lim || !overlap_ok(c)) {
            c = rechart(c, theta);
            exchange(c);
            out.recharted = true;
            ++s.stats.recharts;
            require(overlap_ok(c), ErrorKind::rechart_failure, "charts do not overlap after recharting");
            build();
        }
    }
    double smax = 0.0, h = 1e300, umin = 1e300;
    if (c.has_neck()) {
        smax = std::max(smax, max_abs(nop.slope));
        h = std::min(h, c.neck.grid.ds());
        for (double u : c.neck.val) umin = std::min(umin, u);
        require(umin > 0, ErrorKind::numerical_failure, "neck chart touched the axis");
    }
    if (c.has_outer()) {
        smax = std::max(smax, max_abs(oop.slope));
        h = std::min(h, xn[1] - xn[0]);
    }
    double dt = opt.c_cfl * h * h / (1 + smax * smax);
    if (umin < 1e300) dt = std::min(dt, opt.c_react * umin * umin);
    dt = std::min(dt, opt.dt_max);
    if (dt < dt_min) fail(ErrorKind::stiffness_failure, "time step " + format_double(dt) + " below dt_min");
    dt = std::min(dt, dt_cap);
    out.dt = dt;

    // normal speeds at the start of the step, for the H^2 budget
    const bool both = c.has_neck() && c.has_outer();
    const Point sw = both ? switch_point(c, yn) : Point{};
    if (c.has_neck()) {
        const int n = c.neck.size();
        std::vector<double> f(n);
        for (int i = 0; i < n; ++i) {
            const int k = std::min(i, nop.last);
            const double r = rate(nop, c.neck.val, k);
            const double q = std::sqrt(1 + nop.slope[i] * nop.slope[i]);
            f[i] = c.neck.val[i] * r * r / q;
            if (!both || c.neck.at(i) <= sw.y) out.max_H = std::max(out.max_H, std::abs(r) / q);
        }
        out.h2_rate += 4 * M_PI * trapezoid_window(c.neck.grid, f, 0.0, both ? sw.y : c.y_split());
    }
    if (c.has_outer()) {
        const int m = c.outer.size();
        std::vector<double> f(m);
        for (int j = 0; j < m; ++j) {
            const int k = std::clamp(j, oop.first, std::max(oop.first, oop.last));
            const double r = (oop.last >= oop.first) ? rate(oop, c.outer.val, k) : 0.0;
            const double q = std::sqrt(1 + oop.slope[j] * oop.slope[j]);
            const double x = xn[j];
            f[j] = x * r * r / q * (c.outer.grid.kind == Grid::Kind::log ? x : 1.0);
            if (!both || x >= sw.x) out.max_H = std::max(out.max_H, std::abs(r) / q);
        }
        out.h2_rate += 4 * M_PI * trapezoid_window(c.outer.grid, f, both ? sw.x : c.x_split(), c.x_end());
        if (oop.last == m - 1) {
            const double x = c.x_end(), vx = oop.slope[m - 1];
            out.boundary_rate = 4 * M_PI * x * vx * rate(oop, c.outer.val, m - 1) / std::sqrt(1 + vx * vx);
        }
    }

    if (c.has_neck()) advance_chart(nop, c.neck.val, dt, opt.scheme);
    if (c.has_outer()) advance_chart(oop, c.outer.val, dt, opt.scheme);
    if (c.has_outer() && w == WallCondition::clamp && !clamp.empty()) c.outer.val.back() = clamp.front();
    exchange(c);

    for (double u : c.neck.val) require(std::isfinite(u), ErrorKind::numerical_failure, "non-finite neck chart value");
    for (double v : c.outer.val) require(std::isfinite(v), ErrorKind::numerical_failure, "non-finite outer chart value");
    if (c.has_neck()) require(c.neck.val.front() > 0, ErrorKind::numerical_failure, "neck crossed the axis");
    s.stats.dt = dt;
    s.stats.max_H = out.max_H;
    return out;
}

double max_outer_slope(const ProfileCurve& c)
{
    if (!c.has_outer()) return 0.0;
    return max_abs(chart_derivatives(c.outer, false).d1);
}

TrajectoryRow make_row(const FlowState& s, double h2, double bcum)
{
    TrajectoryRow r;
    r.t = s.t;
    r.neck_x = s.curve.neck_radius();
    r.height_at_R = s.curve.height();
    r.area = surface_area(s.curve);
    r.max_slope_outer = max_outer_slope(s.curve);
    r.h2_budget_cum = h2;
    r.boundary_cum = bcum;
    return r;
}

void finish(EvolveProgress& p, OutcomeKind kind, EventKind ev, const std::string& detail, bool suspected = false)
{
    p.finished = true;
    p.outcome.kind = kind;
    p.outcome.t = p.state.t;
    p.outcome.suspected = suspected;
    p.outcome.detail = detail;
    p.traj.events.push_back({p.state.t, ev, detail});
}

} // namespace

FlowState step(const FlowState& state, double dt_max, const EvolveOptions& opt)
{
    FlowState s = state;
    std::vector<double> clamp;
    if (s.curve.has_outer()) clamp.push_back(s.curve.outer.val.back());
    const auto a = advance(s, dt_max, opt, clamp, 0.0);
    s.t += a.dt;
    return s;
}

EvolveProgress start_evolution(const ProfileCurve& initial, double horizon, const EvolveOptions& opt)
{
    require(horizon > 0, ErrorKind::invalid_parameter, "horizon must be positive");
    require(opt.cadence > 0, ErrorKind::invalid_parameter, "cadence must be positive");
    require(initial.has_neck() || initial.has_outer(), ErrorKind::invalid_parameter, "empty initial curve");
    EvolveProgress p;
    p.horizon = horizon;
    p.state.curve = initial;
    exchange(p.state.curve);
    const double neck = initial.neck_radius();
    p.eps_pinch = opt.eps.pinch > 0 ? opt.eps.pinch : opt.eps.pinch_fraction * neck;
    require(p.eps_pinch < neck || !initial.has_neck(), ErrorKind::invalid_parameter,
            "pinch threshold must be below the initial neck radius");
    p.eps_wall = opt.eps.wall > 0 ? opt.eps.wall : (initial.bounded() ? opt.eps.wall_fraction * initial.wall : 0.0);
    p.dt_min = opt.dt_min > 0 ? opt.dt_min : 1e-12 * horizon;
    if (initial.has_outer()) p.clamp = {initial.outer.val.back()};
    p.traj.provenance = opt.provenance;
    p.tick_index = 1;
    p.next_tick = std::min(horizon, opt.cadence);
    p.traj.rows.push_back(make_row(p.state, 0.0, 0.0));
    if (opt.keep_states) p.traj.states.push_back(p.state);
    return p;
}

void continue_evolution(EvolveProgress& p, const EvolveOptions& opt)
{
    long budget = opt.stop_after_steps;
    while (!p.finished) {
        if (opt.max_steps > 0 && p.steps >= opt.max_steps) {
            finish(p, OutcomeKind::numerical_failure, EventKind::numerical_failure, "step budget exhausted");
            break;
        }
        if (opt.stop_after_steps > 0 && budget-- <= 0) return;
        const double neck = p.state.curve.neck_radius();
        Advance a;
        try {
            a = advance(p.state, p.next_tick - p.state.t, opt, p.clamp, p.dt_min);
        } catch (const Error& e) {
            const bool near_pinch = neck < 5 * p.eps_pinch;
            const bool near_wall = p.state.curve.bounded() && neck > p.state.curve.wall - 5 * p.eps_wall;
            const EventKind ek = e.kind() == ErrorKind::stiffness_failure ? EventKind::stiffness_failure
                                 : e.kind() == ErrorKind::rechart_failure ? EventKind::rechart_failure
                                                                          : EventKind::numerical_failure;
            if (near_pinch && e.kind() != ErrorKind::numerical_failure)
                finish(p, OutcomeKind::neck_pinch, ek, e.what(), true);
            else if (near_wall && e.kind() == ErrorKind::rechart_failure)
                finish(p, OutcomeKind::boundary_collapse, ek, e.what(), true);
            else if (near_pinch)
                finish(p, OutcomeKind::neck_pinch, ek, e.what(), true);
            else
                finish(p, OutcomeKind::numerical_failure, ek, e.what());
            break;
        }
        ++p.steps;
        if (a.recharted) p.traj.events.push_back({p.state.t, EventKind::rechart, ""});
        const bool tick = p.next_tick - p.state.t <= a.dt;
        p.state.t = tick ? p.next_tick : p.state.t + a.dt;
        p.h2_cum += a.dt * a.h2_rate;
        p.boundary_cum += a.dt * a.boundary_rate;

        const double nk = p.state.curve.neck_radius();
        if (p.state.curve.has_neck() && nk < p.eps_pinch) {
            p.traj.rows.push_back(make_row(p.state, p.h2_cum, p.boundary_cum));
            if (opt.keep_states) p.traj.states.push_back(p.state);
            finish(p, OutcomeKind::neck_pinch, EventKind::pinch, "neck radius " + format_double(nk));
            break;
        }
        if (p.state.curve.bounded() && nk > p.state.curve.wall - p.eps_wall) {
            p.traj.rows.push_back(make_row(p.state, p.h2_cum, p.boundary_cum));
            if (opt.keep_states) p.traj.states.push_back(p.state);
            finish(p, OutcomeKind::boundary_collapse, EventKind::collapse, "neck radius " + format_double(nk));
            break;
        }
        if (tick) {
            p.traj.rows.push_back(make_row(p.state, p.h2_cum, p.boundary_cum));
            if (opt.keep_states) p.traj.states.push_back(p.state);
            if (p.state.t >= p.horizon) {
                p.finished = true;
                p.outcome.kind = OutcomeKind::survived_horizon;
                p.outcome.t = p.state.t;
                p.traj.events.push_back({p.state.t, EventKind::horizon, ""});
                if (opt.torus) {
                    const auto cert = certificate_check(p.state.curve, opt.constants, *opt.torus);
                    p.outcome.certificate = cert.kind;
                    p.outcome.certificate_parameter = cert.parameter;
                }
                break;
            }
            if (opt.on_tick && opt.on_tick(p)) {
                p.finished = true;
                break;
            }
            ++p.tick_index;
            p.next_tick = std::min(p.horizon, p.tick_index * opt.cadence);
        }
    }
    if (p.finished && p.traj.rows.back().t < p.state.t) {
        p.traj.rows.push_back(make_row(p.state, p.h2_cum, p.boundary_cum));
        if (opt.keep_states) p.traj.states.push_back(p.state);
    }
}

EvolveResult evolve(const ProfileCurve& initial, double horizon, const EvolveOptions& opt)
{
    EvolveOptions o = opt;
    o.stop_after_steps = 0;
    EvolveProgress p = start_evolution(initial, horizon, o);
    continue_evolution(p, o);
    return {std::move(p.traj), p.outcome};
}

void write_trajectory_csv(std::ostream& os, const Trajectory& tr)
{
    os << "t,neck_x,height_at_R,area,max_slope_outer,h2_budget_cum\n";
    for (const auto& r : tr.rows)
        os << format_double(r.t) << ',' << format_double(r.neck_x) << ',' << format_double(r.height_at_R) << ','
           << format_double(r.area) << ',' << format_double(r.max_slope_outer) << ',' << format_double(r.h2_budget_cum)
           << '\n';
}

// ---------------------------------------------------------------- checkpoints

namespace {

using nlohmann::json;

json num(double v)
{
    if (std::isfinite(v)) return v;
    return format_double(v);
}

double num_of(const json& j)
{
    if (j.is_string()) return std::strtod(j.get<std::string>().c_str(), nullptr);
    return j.get<double>();
}

json chart_json(const Chart& c)
{
    return {{"kind", c.grid.kind == Grid::Kind::log ? "log" : "uniform"},
            {"lo", c.grid.lo},
            {"hi", c.grid.hi},
            {"n", c.grid.n},
            {"val", c.val}};
}

Chart chart_of(const json& j)
{
    Chart c;
    c.grid.kind = j.at("kind").get<std::string>() == "log" ? Grid::Kind::log : Grid::Kind::uniform;
    c.grid.lo = j.at("lo").get<double>();
    c.grid.hi = j.at("hi").get<double>();
    c.grid.n = j.at("n").get<int>();
    c.val = j.at("val").get<std::vector<double>>();
    return c;
}

json state_json(const FlowState& s)
{
    return {{"t", s.t},
            {"wall", num(s.curve.wall)},
            {"neck", chart_json(s.curve.neck)},
            {"outer", chart_json(s.curve.outer)},
            {"dt", s.stats.dt},
            {"max_H", s.stats.max_H},
            {"recharts", s.stats.recharts}};
}

FlowState state_of(const json& j)
{
    FlowState s;
    s.t = j.at("t").get<double>();
    s.curve.wall = num_of(j.at("wall"));
    s.curve.neck = chart_of(j.at("neck"));
    s.curve.outer = chart_of(j.at("outer"));
    s.stats.dt = j.at("dt").get<double>();
    s.stats.max_H = j.at("max_H").get<double>();
    s.stats.recharts = j.at("recharts").get<int>();
    return s;
}

} // namespace

void write_checkpoint(const std::string& path, const EvolveProgress& p)
{
    json j;
    j["format"] = "mcflow-checkpoint";
    j["version"] = 1;
    j["state"] = state_json(p.state);
    j["horizon"] = p.horizon;
    j["next_tick"] = p.next_tick;
    j["tick_index"] = p.tick_index;
    j["steps"] = p.steps;
    j["eps_pinch"] = p.eps_pinch;
    j["eps_wall"] = p.eps_wall;
    j["dt_min"] = p.dt_min;
    j["clamp"] = p.clamp;
    j["h2_cum"] = p.h2_cum;
    j["boundary_cum"] = p.boundary_cum;
    j["finished"] = p.finished;
    json rows = json::array();
    for (const auto& r : p.traj.rows)
        rows.push_back({r.t, r.neck_x, r.height_at_R, r.area, r.max_slope_outer, r.h2_budget_cum, r.boundary_cum});
    j["rows"] = rows;
    json states = json::array();
    for (const auto& s : p.traj.states) states.push_back(state_json(s));
    j["states"] = states;
    json events = json::array();
    for (const auto& e : p.traj.events) events.push_back({{"t", e.t}, {"kind", static_cast<int>(e.kind)}, {"detail", e.detail}});
    j["events"] = events;
    json prov = json::object();
    for (const auto& [k, v] : p.traj.provenance) prov[k] = num(v);
    j["provenance"] = prov;
    j["outcome"] = {{"kind", static_cast<int>(p.outcome.kind)},
                    {"t", p.outcome.t},
                    {"certificate", static_cast<int>(p.outcome.certificate)},
                    {"parameter", p.outcome.certificate_parameter},
                    {"suspected", p.outcome.suspected},
                    {"detail", p.outcome.detail}};
    std::ofstream os(path);
    require(static_cast<bool>(os), ErrorKind::io_error, "cannot write checkpoint " + path);
    os << j.dump() << '\n';
}

EvolveProgress read_checkpoint(const std::string& path)
{
    std::ifstream is(path);
    require(static_cast<bool>(is), ErrorKind::io_error, "cannot read checkpoint " + path);
    json j;
    try {
        is >> j;
    } catch (const std::exception& e) {
        fail(ErrorKind::io_error, std::string("malformed checkpoint: ") + e.what());
    }
    require(j.value("format", "") == "mcflow-checkpoint" && j.value("version", 0) == 1, ErrorKind::io_error,
            "unsupported checkpoint format");
    EvolveProgress p;
    try {
        p.state = state_of(j.at("state"));
        p.horizon = j.at("horizon").get<double>();
        p.next_tick = j.at("next_tick").get<double>();
        p.tick_index = j.at("tick_index").get<long>();
        p.steps = j.at("steps").get<long>();
        p.eps_pinch = j.at("eps_pinch").get<double>();
        p.eps_wall = j.at("eps_wall").get<double>();
        p.dt_min = j.at("dt_min").get<double>();
        p.clamp = j.at("clamp").get<std::vector<double>>();
        p.h2_cum = j.at("h2_cum").get<double>();
        p.boundary_cum = j.at("boundary_cum").get<double>();
        p.finished = j.at("finished").get<bool>();
        for (const auto& r : j.at("rows")) {
            TrajectoryRow row;
            row.t = r[0].get<double>();
            row.neck_x = r[1].get<double>();
            row.height_at_R = r[2].get<double>();
            row.area = r[3].get<double>();
            row.max_slope_outer = r[4].get<double>();
            row.h2_budget_cum = r[5].get<double>();
            row.boundary_cum = r[6].get<double>();
            p.traj.rows.push_back(row);
        }
        for (const auto& s : j.at("states")) p.traj.states.push_back(state_of(s));
        for (const auto& e : j.at("events"))
            p.traj.events.push_back({e.at("t").get<double>(), static_cast<EventKind>(e.at("kind").get<int>()),
                                     e.at("detail").get<std::string>()});
        for (const auto& [k, v] : j.at("provenance").items()) p.traj.provenance[k] = num_of(v);
        const auto& o = j.at("outcome");
        p.outcome.kind = static_cast<OutcomeKind>(o.at("kind").get<int>());
        p.outcome.t = o.at("t").get<double>();
        p.outcome.certificate = static_cast<Certificate>(o.at("certificate").get<int>());
        p.outcome.certificate_parameter = o.at("parameter").get<double>();
        p.outcome.suspected = o.at("suspected").get<bool>();
        p.outcome.detail = o.at("detail").get<std::string>();
    } catch (const Error&) {
        throw;
    } catch (const std::exception& e) {
        fail(ErrorKind::io_error, std::string("malformed checkpoint: ") + e.what());
    }
    return p;
}

// ---------------------------------------------------------------- graph over the disk

DiskGraphRun evolve_graph_on_disk(const std::vector<double>& x, const std::vector<double>& initial, double horizon,
                                  double cadence, double t_report)
{
    const int n = static_cast<int>(x.size());
    require(n >= 4 && initial.size() == x.size(), ErrorKind::invalid_parameter, "disk graph needs >= 4 matching samples");
    require(x.front() == 0.0, ErrorKind::invalid_parameter, "disk graph grid must start at the axis");
    require(horizon > 0 && cadence > 0, ErrorKind::invalid_parameter, "horizon and cadence must be positive");
    const double h = x[1] - x[0];
    for (int i = 1; i < n; ++i)
        require(std::abs(x[i] - x[i - 1] - h) <= 1e-9 * (1 + x.back()), ErrorKind::invalid_parameter,
                "disk graph grid must be uniform");
    DiskGraphRun run;
    run.x = x;
    run.T = t_report > 0 ? t_report : 0.5 * horizon;
    std::vector<double> v = initial, r(n);
    double t = 0.0;
    long tick = 1;
    double next = std::min(horizon, cadence);
    run.times.push_back(0.0);
    run.height_at_R.push_back(v.back());
    run.states.push_back(v);
    double L_T = v.back();
    bool have_T = false;
    while (t < horizon) {
        double smax = 0;
        for (int i = 1; i + 1 < n; ++i) smax = std::max(smax, std::abs(v[i + 1] - v[i - 1]) / (2 * h));
        double dt = std::min(0.2 * h * h / (1 + smax * smax), next - t);
        if (!have_T && run.T > t) dt = std::min(dt, run.T - t);
        for (int i = 0; i < n; ++i) {
            if (i == 0) {
                r[i] = 2 * 2 * (v[1] - v[0]) / (h * h);   // v_xx + v_x/x -> 2 v_xx on the axis
                continue;
            }
            const double vm = v[i - 1], vp = i + 1 < n ? v[i + 1] : v[n - 2];
            const double vx = (vp - vm) / (2 * h);
            const double vxx = (vp - 2 * v[i] + vm) / (h * h);
            r[i] = vxx / (1 + vx * vx) + vx / x[i];
        }
        for (int i = 0; i < n; ++i) v[i] += dt * r[i];
        const bool at_tick = next - t <= dt;
        const bool at_T = !have_T && run.T - t <= dt;
        t = at_tick ? next : (at_T ? run.T : t + dt);
        for (int i = 1; i < n; ++i) run.min_slope = std::min(run.min_slope, (v[i] - v[i - 1]) / h);
        if (at_T || (!have_T && t >= run.T)) {
            have_T = true;
            L_T = v.back();
        }
        if (at_tick) {
            run.times.push_back(t);
            run.height_at_R.push_back(v.back());
            run.states.push_back(v);
            ++tick;
            next = std::min(horizon, tick * cadence);
        }
    }
    run.beta = 1.0 - L_T;
    return run;
}

} // namespace mcflow
