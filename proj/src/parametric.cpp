#include "mcflow/parametric.hpp"

#include <algorithm>
#include <cmath>

#include "mcflow/errors.hpp"
#include "mcflow/tridiag.hpp"

namespace mcflow {

namespace {

Point ghost(const ParametricCurve::End e, const Point& inner)
{
    return e == ParametricCurve::End::x_axis ? Point{inner.x, -inner.y} : Point{-inner.x, inner.y};
}

double min_spacing(const Polyline& p)
{
    double h = 1e300;
    for (std::size_t i = 1; i < p.size(); ++i) h = std::min(h, std::hypot(p[i].x - p[i - 1].x, p[i].y - p[i - 1].y));
    return h;
}

double extent(const Polyline& p)
{
    double lo = 1e300, hi = -1e300, top = 0;
    for (const auto& q : p) {
        lo = std::min(lo, q.x);
        hi = std::max(hi, q.x);
        top = std::max(top, std::abs(q.y));
    }
    return std::max(hi - lo, top);
}

void step(ParametricCurve& c, double dt)
{
    auto& p = c.pts;
    const int n = static_cast<int>(p.size());
    std::vector<double> g(n), fx(n), fy(n);
    for (int i = 0; i < n; ++i) {
        const Point prev = i > 0 ? p[i - 1] : ghost(c.start, p[1]);
        const Point next = i + 1 < n ? p[i + 1] : ghost(c.end, p[n - 2]);
        const double tx = 0.5 * (next.x - prev.x), ty = 0.5 * (next.y - prev.y);
        g[i] = tx * tx + ty * ty;
        const double len = std::sqrt(g[i]);
        const double nx = -ty / len, ny = tx / len;
        const bool pole = (i == 0 && c.start == ParametricCurve::End::pole) ||
                          (i == n - 1 && c.end == ParametricCurve::End::pole);
        if (pole || p[i].x <= 0) {
            fx[i] = fy[i] = 0.0;   // handled by doubling the diffusion at the pole
        } else {
            const double k = nx / p[i].x;
            fx[i] = -k * nx;
            fy[i] = -k * ny;
        }
    }
    for (int comp = 0; comp < 2; ++comp) {
        std::vector<double> a(n, 0.0), b(n, 1.0), cc(n, 0.0), d(n);
        for (int i = 0; i < n; ++i) {
            const double val = comp == 0 ? p[i].x : p[i].y;
            const double f = comp == 0 ? fx[i] : fy[i];
            const bool first = i == 0, last = i == n - 1;
            const auto e = first ? c.start : c.end;
            if (first || last) {
                // mirrored ghost: even component doubles the coupling, odd component is pinned to zero
                const bool pinned = (e == ParametricCurve::End::x_axis && comp == 1) ||
                                    (e == ParametricCurve::End::pole && comp == 0);
                if (pinned) {
                    d[i] = 0.0;
                    continue;
                }
                const double mult = e == ParametricCurve::End::pole ? 2.0 : 1.0;
                const double w = mult * dt / g[i];
                b[i] = 1 + 2 * w;
                (first ? cc[i] : a[i]) = -2 * w;
                d[i] = val + dt * f;
                continue;
            }
            const double w = dt / g[i];
            a[i] = -w;
            b[i] = 1 + 2 * w;
            cc[i] = -w;
            d[i] = val + dt * f;
        }
        solve_tridiagonal(a, b, cc, d);
        for (int i = 0; i < n; ++i) (comp == 0 ? p[i].x : p[i].y) = d[i];
    }
}

} // namespace

ParametricRun evolve_parametric(const ParametricCurve& initial, double t_end, const ParametricOptions& opt,
                                double min_size)
{
    require(initial.pts.size() >= 5, ErrorKind::invalid_parameter, "parametric curve needs >= 5 points");
    require(t_end >= 0, ErrorKind::invalid_parameter, "end time must be nonnegative");
    ParametricRun run;
    ParametricCurve c = initial;
    double t = 0.0;
    run.states.push_back({0.0, c});
    double next_out = opt.cadence > 0 ? opt.cadence : t_end;
    while (t < t_end) {
        const double h = min_spacing(c.pts);
        double dt = std::min({opt.c_dt * h * h, opt.dt_max, t_end - t, next_out - t});
        step(c, dt);
        t = (t_end - t <= dt) ? t_end : t + dt;
        for (const auto& q : c.pts)
            require(std::isfinite(q.x) && std::isfinite(q.y), ErrorKind::numerical_failure, "parametric flow blew up");
        if (extent(c.pts) < min_size) {
            run.extinct = true;
            run.t_extinct = t;
            run.states.push_back({t, c});
            return run;
        }
        if (t >= next_out || t == t_end) {
            run.states.push_back({t, c});
            next_out = opt.cadence > 0 ? next_out + opt.cadence : t_end;
        }
    }
    if (run.states.back().t != t) run.states.push_back({t, c});
    return run;
}

double parametric_area(const ParametricCurve& c)
{
    double s = 0;
    for (std::size_t i = 1; i < c.pts.size(); ++i) {
        const auto& a = c.pts[i - 1];
        const auto& b = c.pts[i];
        s += 0.5 * (a.x + b.x) * std::hypot(b.x - a.x, b.y - a.y);
    }
    return 4 * M_PI * s;
}

double distance_to_polyline(const Point& p, const Polyline& poly)
{
    double best = 1e300;
    for (std::size_t i = 1; i < poly.size(); ++i) {
        const double ax = poly[i - 1].x, ay = poly[i - 1].y;
        const double dx = poly[i].x - ax, dy = poly[i].y - ay;
        const double l2 = dx * dx + dy * dy;
        double w = l2 > 0 ? ((p.x - ax) * dx + (p.y - ay) * dy) / l2 : 0.0;
        w = std::clamp(w, 0.0, 1.0);
        best = std::min(best, std::hypot(p.x - ax - w * dx, p.y - ay - w * dy));
    }
    return best;
}

Polyline resample_by_arclength(const Polyline& poly, int n)
{
    std::vector<double> s(poly.size(), 0.0);
    for (std::size_t i = 1; i < poly.size(); ++i)
        s[i] = s[i - 1] + std::hypot(poly[i].x - poly[i - 1].x, poly[i].y - poly[i - 1].y);
    Polyline out(n);
    std::size_t k = 0;
    for (int j = 0; j < n; ++j) {
        const double target = s.back() * j / (n - 1);
        while (k + 2 < poly.size() && s[k + 1] < target) ++k;
        const double w = s[k + 1] > s[k] ? std::clamp((target - s[k]) / (s[k + 1] - s[k]), 0.0, 1.0) : 0.0;
        out[j] = {poly[k].x + w * (poly[k + 1].x - poly[k].x), poly[k].y + w * (poly[k + 1].y - poly[k].y)};
    }
    out.front() = poly.front();
    out.back() = poly.back();
    return out;
}

} // namespace mcflow
