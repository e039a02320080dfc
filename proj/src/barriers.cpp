#include "mcflow/barriers.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <fstream>

#include <boost/numeric/odeint.hpp>

#include "mcflow/errors.hpp"
#include "mcflow/parametric.hpp"

namespace mcflow {

// ---------------------------------------------------------------- catenoids

double catenoid_x(double c, double xi, double y)
{
    require(c > 0, ErrorKind::invalid_parameter, "catenoid neck must be positive");
    return c * std::cosh((y - xi) / c);
}

double catenoid_y(double c, double xi, double x)
{
    require(c > 0, ErrorKind::invalid_parameter, "catenoid neck must be positive");
    require(x >= c, ErrorKind::domain_error, "catenoid inverse needs x >= c");
    return xi + c * std::log(x / c + std::sqrt((x * x - c * c) / (c * c)));
}

double catenoid_slope(double c, double x)
{
    require(x > c, ErrorKind::domain_error, "catenoid slope needs x > c");
    return c / std::sqrt(x * x - c * c);
}

// ---------------------------------------------------------------- shrinker shooting

namespace {

using State = std::array<double, 3>;   // x, y, theta along arclength

void shrinker_rhs(const State& q, State& dq, double)
{
    const double x = q[0], y = q[1], th = q[2];
    const double s = std::sin(th), c = std::cos(th);
    dq[0] = c;
    dq[1] = s;
    dq[2] = 0.5 * (x * s - y * c) - s / x;
}

struct Orbit {
    bool returned = false;
    double length = 0.0;
    State end{};
};

// Integrates from (x0, 0) upward until the first downward crossing of y = 0.
// `sample` (optional) receives n points uniform in arclength along the arc.
Orbit integrate_orbit(double x0, double ode_tol, Polyline* sample = nullptr, int n = 0)
{
    namespace ode = boost::numeric::odeint;
    auto stepper = ode::make_dense_output(ode_tol, ode_tol, ode::runge_kutta_dopri5<State>());
    State q{x0, 0.0, M_PI / 2};
    stepper.initialize(q, 0.0, 1e-3);
    const double s_max = 60.0;
    Orbit o;
    while (stepper.current_time() < s_max) {
        const State prev = stepper.current_state();
        const double t_prev = stepper.current_time();
        stepper.do_step(shrinker_rhs);
        const State& cur = stepper.current_state();
        if (!(cur[0] > 0) || !std::isfinite(cur[0])) return o;
        if (cur[1] < 0 && stepper.current_time() > 1e-6) {
            double lo = t_prev, hi = stepper.current_time();
            State mid;
            for (int k = 0; k < 200 && hi - lo > 1e-15 * (1 + hi); ++k) {
                const double m = 0.5 * (lo + hi);
                stepper.calc_state(m, mid);
                (mid[1] < 0 ? hi : lo) = m;
            }
            o.returned = true;
            o.length = hi;
            stepper.calc_state(hi, o.end);
            break;
        }
        (void)prev;
    }
    if (!o.returned) return o;
    if (sample && n >= 2) {
        // second pass with identical controls so samples are reproducible
        auto st = ode::make_dense_output(ode_tol, ode_tol, ode::runge_kutta_dopri5<State>());
        st.initialize(State{x0, 0.0, M_PI / 2}, 0.0, 1e-3);
        sample->assign(n, Point{});
        int k = 0;
        State tmp;
        while (k < n) {
            const double target = o.length * k / (n - 1);
            while (st.current_time() < target) st.do_step(shrinker_rhs);
            st.calc_state(target, tmp);
            (*sample)[k++] = {tmp[0], tmp[1]};
        }
        sample->front() = {x0, 0.0};
        sample->back().y = 0.0;
    }
    return o;
}

} // namespace

std::optional<double> shooting_defect(double x0, double ode_tol)
{
    require(x0 > 0, ErrorKind::invalid_parameter, "launch point must be off the axis");
    const Orbit o = integrate_orbit(x0, ode_tol);
    if (!o.returned) return std::nullopt;
    return std::cos(o.end[2]);
}

ShrinkerProfile shoot_angenent_torus(double tolerance, const ShootOptions& opt)
{
    require(tolerance > 0, ErrorKind::invalid_parameter, "shooting tolerance must be positive");
    require(opt.scan_steps >= 2 && opt.scan_hi > opt.scan_lo && opt.scan_lo > 0, ErrorKind::invalid_parameter,
            "bad shooting scan window");
    double a = 0, b = 0, fa = 0, fb = 0;
    bool found = false;
    std::optional<double> prev;
    double x_prev = 0;
    for (int i = 0; i <= opt.scan_steps && !found; ++i) {
        const double x = opt.scan_lo + (opt.scan_hi - opt.scan_lo) * i / opt.scan_steps;
        const auto d = shooting_defect(x, opt.ode_tol);
        if (d && prev && (*d) * (*prev) <= 0) {
            a = x_prev, fa = *prev, b = x, fb = *d;
            found = true;
        }
        prev = d;
        x_prev = x;
    }
    require(found, ErrorKind::construction_failure, "no sign change of the closing defect in the shooting scan window");
    double x0 = std::abs(fa) < std::abs(fb) ? a : b;
    double defect = std::min(std::abs(fa), std::abs(fb));
    for (int k = 0; k < 200 && defect > tolerance; ++k) {
        const double m = 0.5 * (a + b);
        const auto d = shooting_defect(m, opt.ode_tol);
        require(d.has_value(), ErrorKind::construction_failure, "orbit lost inside the shooting bracket");
        if ((*d) * fa <= 0) {
            b = m, fb = *d;
        } else {
            a = m, fa = *d;
        }
        x0 = m;
        defect = std::abs(*d);
        if (b - a < 1e-16) break;
    }
    require(defect <= tolerance, ErrorKind::construction_failure, "shooting did not reach the requested defect");

    ShrinkerProfile p;
    Polyline unit;
    const Orbit o = integrate_orbit(x0, opt.ode_tol, &unit, opt.samples);
    p.x0_unit = x0;
    p.x1_unit = o.end[0];
    p.defect = defect;
    p.scale = 1.1 / x0;
    p.upper.reserve(unit.size());
    double box = 0;
    for (const auto& q : unit) {
        p.upper.push_back({q.x * p.scale, q.y * p.scale});
        box = std::max({box, std::abs(q.x * p.scale), std::abs(q.y * p.scale)});
    }
    p.upper.front() = {1.1, 0.0};
    p.neck = p.upper.front();
    p.alpha = opt.pad * box;
    p.T_prime = p.scale * p.scale;
    return p;
}

Polyline ShrinkerProfile::closed() const
{
    Polyline out = upper;
    for (std::size_t i = upper.size() - 1; i-- > 1;) out.push_back({upper[i].x, -upper[i].y});
    if (!upper.empty()) out.push_back(upper.front());
    return out;
}

BarrierConstants barrier_constants(const ShrinkerProfile& p)
{
    BarrierConstants c;
    c.alpha = p.alpha;
    c.torus_extinction = p.T_prime;
    return c;
}

SelfSimilarityReport torus_self_similarity_check(const ShrinkerProfile& profile, double fraction, int nodes)
{
    require(fraction > 0 && fraction < 1, ErrorKind::invalid_parameter, "fraction must lie in (0, 1)");
    require(profile.upper.size() >= 5, ErrorKind::invalid_parameter, "empty torus profile");
    ParametricCurve c;
    c.pts = resample_by_arclength(profile.upper, nodes);
    c.start = c.end = ParametricCurve::End::x_axis;
    const double a0 = parametric_area(c);
    const double t = fraction * profile.T_prime;
    ParametricOptions opt;
    const auto run = evolve_parametric(c, t, opt);
    require(!run.extinct, ErrorKind::numerical_failure, "torus vanished before the check time");
    const auto& fin = run.states.back().curve;
    const double k = std::sqrt(1 - t / profile.T_prime);
    Polyline expected;
    expected.reserve(profile.upper.size());
    for (const auto& q : profile.upper) expected.push_back({q.x * k, q.y * k});
    double size = 0;
    for (const auto& q : expected) size = std::max({size, q.x, std::abs(q.y)});
    SelfSimilarityReport r;
    r.fraction = fraction;
    r.t = t;
    for (const auto& q : fin.pts) r.max_rel_deviation = std::max(r.max_rel_deviation, distance_to_polyline(q, expected) / size);
    r.area_ratio = parametric_area(fin) / a0;
    r.area_expected = 1 - t / profile.T_prime;
    r.area_rel_error = std::abs(r.area_ratio - r.area_expected) / r.area_expected;
    return r;
}

void write_torus_cache(const std::string& path, const ShrinkerProfile& p)
{
    write_snapshot_file(path, p.upper, unbounded, 0.0,
                        {{"x0_unit", p.x0_unit}, {"x1_unit", p.x1_unit}, {"scale", p.scale}, {"defect", p.defect},
                         {"alpha", p.alpha}, {"T_prime", p.T_prime}});
}

ShrinkerProfile read_torus_cache(const std::string& path)
{
    const Snapshot s = read_snapshot_file(path);
    for (const char* key : {"x0_unit", "x1_unit", "scale", "defect", "alpha", "T_prime"})
        require(s.meta.count(key) == 1, ErrorKind::io_error, std::string("torus cache lacks ") + key);
    require(s.points.size() >= 5, ErrorKind::io_error, "torus cache has too few points");
    ShrinkerProfile p;
    p.upper = s.points;
    p.x0_unit = s.meta.at("x0_unit");
    p.x1_unit = s.meta.at("x1_unit");
    p.scale = s.meta.at("scale");
    p.defect = s.meta.at("defect");
    p.alpha = s.meta.at("alpha");
    p.T_prime = s.meta.at("T_prime");
    p.neck = p.upper.front();
    return p;
}

ShrinkerProfile load_or_shoot_torus(const std::string& path, double tolerance)
{
    if (!path.empty() && std::ifstream(path)) {
        ShrinkerProfile p = read_torus_cache(path);
        if (p.defect <= tolerance) return p;
    }
    ShrinkerProfile p = shoot_angenent_torus(tolerance);
    if (!path.empty()) write_torus_cache(path, p);
    return p;
}

// ---------------------------------------------------------------- barrier family

Barrier Barrier::plane(double C)
{
    Barrier b;
    b.kind = Kind::plane;
    b.height = C;
    return b;
}

Barrier Barrier::catenoid(double c, double xi)
{
    require(c > 0, ErrorKind::invalid_parameter, "catenoid neck must be positive");
    Barrier b;
    b.kind = Kind::catenoid;
    b.c = c;
    b.xi = xi;
    return b;
}

Barrier Barrier::torus(double lambda)
{
    require(lambda > 0, ErrorKind::invalid_parameter, "torus scale must be positive");
    Barrier b;
    b.kind = Kind::torus;
    b.lambda = lambda;
    return b;
}

Barrier Barrier::sphere(Point center, double r0)
{
    require(r0 > 0, ErrorKind::invalid_parameter, "sphere radius must be positive");
    Barrier b;
    b.kind = Kind::sphere;
    b.center = center;
    b.radius = r0;
    return b;
}

std::string Barrier::name() const
{
    switch (kind) {
    case Kind::plane: return "plane(C=" + format_double(height) + ")";
    case Kind::catenoid: return "catenoid(c=" + format_double(c) + ",xi=" + format_double(xi) + ")";
    case Kind::torus: return "torus(lambda=" + format_double(lambda) + ")";
    case Kind::sphere: return "sphere(r0=" + format_double(radius) + ")";
    case Kind::lgraph: return "lgraph(a=" + format_double(a) + ")";
    }
    return "barrier";
}

Polyline barrier_polyline(const Barrier& b, double x_max, const ShrinkerProfile* torus, int n)
{
    require(n >= 2, ErrorKind::invalid_parameter, "barrier sampling needs n >= 2");
    Polyline out;
    switch (b.kind) {
    case Barrier::Kind::plane:
        for (int i = 0; i < n; ++i) out.push_back({x_max * i / (n - 1), b.height});
        break;
    case Barrier::Kind::catenoid: {
        if (x_max <= b.c) break;
        const double Y = b.c * std::acosh(x_max / b.c);
        for (int i = 0; i < n; ++i) {
            const double y = b.xi - Y + 2 * Y * i / (n - 1);
            out.push_back({catenoid_x(b.c, b.xi, y), y});
        }
        break;
    }
    case Barrier::Kind::torus: {
        require(torus != nullptr, ErrorKind::invalid_parameter, "torus barrier needs a shrinker profile");
        const double k = b.lambda / torus->scale;
        for (const auto& q : torus->closed())
            if (q.x * k <= x_max) out.push_back({q.x * k, q.y * k});
        break;
    }
    case Barrier::Kind::sphere:
        for (int i = 0; i < n; ++i) {
            const double ph = -M_PI / 2 + M_PI * i / (n - 1);
            const Point q{b.center.x + b.radius * std::cos(ph), b.center.y + b.radius * std::sin(ph)};
            if (q.x >= 0 && q.x <= x_max) out.push_back(q);
        }
        break;
    case Barrier::Kind::lgraph:
        for (const auto& q : b.lgraph)
            if (q.x <= x_max) out.push_back(q);
        break;
    }
    return out;
}

double sphere_radius(double r0, double t)
{
    const double s = r0 * r0 - 4 * t;
    return s > 0 ? std::sqrt(s) : 0.0;
}

// ---------------------------------------------------------------- certificates

const char* to_string(Certificate c)
{
    switch (c) {
    case Certificate::none: return "none";
    case Certificate::torus_enclosure: return "torus-enclosure";
    case Certificate::catenoid_on_top: return "catenoid-on-top";
    }
    return "none";
}

namespace {

bool torus_inside_graph(const RotatedGraph& g, double wall, const ShrinkerProfile& torus, double scale, double margin)
{
    for (const auto& q : torus.upper) {
        const Point p{q.x * scale, q.y * scale};
        if (p.x >= wall - margin) return false;
        if (g.side(p) >= -margin) return false;
    }
    return true;
}

bool catenoid_on_top_graph(const RotatedGraph& g, double x_end, double c, double margin)
{
    if (c <= 0) return false;
    const int n = 800;
    const double y_top = x_end > c ? c * std::acosh(x_end / c) : 0.0;
    for (int i = 0; i < n; ++i) {
        const double y = y_top * i / (n - 1);
        if (g.side({c * std::cosh(y / c), y}) < -margin) return false;
    }
    return true;
}

} // namespace

bool torus_inside(const ProfileCurve& curve, const ShrinkerProfile& torus, double scale, double margin)
{
    const RotatedGraph g(to_polyline(curve));
    return torus_inside_graph(g, curve.wall, torus, scale, margin);
}

bool catenoid_on_top(const ProfileCurve& curve, double c, double margin)
{
    const RotatedGraph g(to_polyline(curve));
    return catenoid_on_top_graph(g, curve.has_outer() ? curve.x_end() : curve.neck_radius(), c, margin);
}

CertificateResult certificate_check(const ProfileCurve& curve, const BarrierConstants& constants,
                                    const ShrinkerProfile& torus, const CertificateOptions& opt)
{
    CertificateResult r;
    const Polyline pts = to_polyline(curve);
    const RotatedGraph g(pts);
    const double neck = curve.neck_radius();
    const double x_end = curve.has_outer() ? curve.x_end() : neck;
    double box_x = 0;
    for (const auto& q : torus.upper) box_x = std::max(box_x, q.x);

    std::vector<double> scales{1.0};
    if (opt.scan_scales && !torus.upper.empty()) {
        // scales between the one that puts the torus neck at the curve neck and the one filling the wall
        const double lo = neck / torus.neck.x;
        const double hi = std::min(curve.wall, x_end) / box_x;
        scales.clear();
        for (int i = 0; i < opt.torus_scales && hi > lo; ++i) scales.push_back(lo + (hi - lo) * (i + 1) / opt.torus_scales);
    }
    for (double s : scales)
        if (torus_inside_graph(g, curve.wall, torus, s, opt.margin)) {
            r.kind = Certificate::torus_enclosure;
            r.parameter = s;
            r.deadline = s * s * constants.torus_extinction;
            return r;
        }

    std::vector<double> necks{1.0};
    if (opt.scan_scales) {
        necks.clear();
        for (int i = 0; i < opt.catenoid_scales; ++i) necks.push_back(neck * (1.0 - 1e-9) * (opt.catenoid_scales - i) / opt.catenoid_scales);
    }
    for (double c : necks)
        if (c <= neck && catenoid_on_top_graph(g, x_end, c, opt.margin)) {
            r.kind = Certificate::catenoid_on_top;
            r.parameter = c;
            return r;
        }
    return r;
}

double l_a_initial(double a, double x)
{
    require(a > 0, ErrorKind::invalid_parameter, "L_a parameter must be positive");
    if (x <= 0.5 * a) return 0.0;
    if (x >= a) return 1.0;
    const double s = (x - 0.5 * a) / (0.5 * a);
    const double e0 = std::exp(-1.0 / s), e1 = std::exp(-1.0 / (1.0 - s));
    return e0 / (e0 + e1);
}

} // namespace mcflow
