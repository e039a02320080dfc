#include "mcflow/curve.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "mcflow/errors.hpp"

namespace mcflow {

// ---------------------------------------------------------------- grids

Grid Grid::uniform(double lo, double hi, int n)
{
    require(n >= 2 && hi > lo, ErrorKind::invalid_parameter, "uniform grid needs n >= 2 and hi > lo");
    return Grid{Kind::uniform, lo, hi, n};
}

Grid Grid::logarithmic(double lo, double hi, int n)
{
    require(n >= 2 && hi > lo && lo > 0, ErrorKind::invalid_parameter, "log grid needs n >= 2 and 0 < lo < hi");
    return Grid{Kind::log, lo, hi, n};
}

double Grid::ds() const
{
    return kind == Kind::uniform ? (hi - lo) / (n - 1) : std::log(hi / lo) / (n - 1);
}

double Grid::node(int i) const
{
    if (i == n - 1) return hi;
    if (kind == Kind::uniform) return lo + i * ds();
    return lo * std::exp(i * ds());
}

double Grid::dxds(int i) const { return kind == Kind::uniform ? 1.0 : node(i); }

double Grid::spacing(int i) const { return node(i + 1) - node(i); }

double Grid::min_spacing() const { return kind == Kind::uniform ? ds() : node(1) - node(0); }

std::vector<double> Grid::nodes() const
{
    std::vector<double> out(n);
    for (int i = 0; i < n; ++i) out[i] = node(i);
    return out;
}

// ---------------------------------------------------------------- curve basics

double ProfileCurve::neck_radius() const
{
    if (has_neck()) return neck.val.front();
    return has_outer() ? outer.grid.lo : 0.0;
}

double ProfileCurve::height() const
{
    if (has_outer()) return outer.val.back();
    return has_neck() ? neck.grid.hi : 0.0;
}

ChartDerivs chart_derivatives(const Chart& c, bool reflect_start)
{
    const int n = c.size();
    const auto& f = c.val;
    const double h = c.grid.ds();
    ChartDerivs out;
    out.d1.assign(n, 0.0);
    out.d2.assign(n, 0.0);
    if (n < 4) {
        for (int i = 0; i < n; ++i) {
            const int a = std::max(0, i - 1), b = std::min(n - 1, i + 1);
            out.d1[i] = (f[b] - f[a]) / ((b - a) * h);
        }
    } else {
        for (int i = 1; i + 1 < n; ++i) {
            out.d1[i] = (f[i + 1] - f[i - 1]) / (2 * h);
            out.d2[i] = (f[i + 1] - 2 * f[i] + f[i - 1]) / (h * h);
        }
        if (reflect_start) {
            out.d1[0] = 0.0;
            out.d2[0] = 2 * (f[1] - f[0]) / (h * h);
        } else {
            out.d1[0] = (-3 * f[0] + 4 * f[1] - f[2]) / (2 * h);
            out.d2[0] = (2 * f[0] - 5 * f[1] + 4 * f[2] - f[3]) / (h * h);
        }
        const int m = n - 1;
        out.d1[m] = (3 * f[m] - 4 * f[m - 1] + f[m - 2]) / (2 * h);
        out.d2[m] = (2 * f[m] - 5 * f[m - 1] + 4 * f[m - 2] - f[m - 3]) / (h * h);
    }
    if (c.grid.kind == Grid::Kind::log) {
        for (int i = 0; i < n; ++i) {
            const double x = c.grid.node(i);
            out.d2[i] = (out.d2[i] - out.d1[i]) / (x * x);
            out.d1[i] /= x;
        }
    }
    return out;
}

// ---------------------------------------------------------------- union evaluation

CurveEval::CurveEval(const ProfileCurve& curve)
{
    if (curve.has_neck()) u_ = Pchip(curve.neck.grid.nodes(), curve.neck.val);
    if (curve.has_outer()) v_ = Pchip(curve.outer.grid.nodes(), curve.outer.val);
    if (has_neck() && has_outer()) {
        const double ylo = curve.outer.val.front();
        const double yhi = curve.y_split();
        if (yhi > ylo) {
            sy_ = 0.5 * (ylo + yhi);
            sx_ = u_(sy_);
        } else {
            sx_ = curve.x_split();
            sy_ = ylo;
        }
    } else if (has_neck()) {
        sy_ = curve.y_split();
        sx_ = curve.neck.val.back();
    } else if (has_outer()) {
        sx_ = curve.x_split();
        sy_ = curve.outer.val.front();
    }
}

double CurveEval::x_at_height(double y) const
{
    if (has_neck() && (y <= sy_ || !has_outer())) return u_(y);
    return v_.inverse(y);
}

double CurveEval::height_at(double x) const
{
    if (has_outer() && (x >= sx_ || !has_neck())) return v_(x);
    return u_.inverse(x);
}

Polyline to_polyline(const ProfileCurve& curve)
{
    Polyline pts;
    if (curve.has_neck() && !curve.has_outer()) {
        for (int i = 0; i < curve.neck.size(); ++i) pts.push_back({curve.neck.val[i], curve.neck.at(i)});
        return pts;
    }
    if (!curve.has_neck()) {
        for (int j = 0; j < curve.outer.size(); ++j) pts.push_back({curve.outer.at(j), curve.outer.val[j]});
        return pts;
    }
    CurveEval ev(curve);
    for (int i = 0; i < curve.neck.size(); ++i)
        if (curve.neck.at(i) < ev.switch_y()) pts.push_back({curve.neck.val[i], curve.neck.at(i)});
    pts.push_back({ev.switch_x(), ev.switch_y()});
    for (int j = 0; j < curve.outer.size(); ++j)
        if (curve.outer.at(j) > ev.switch_x()) pts.push_back({curve.outer.at(j), curve.outer.val[j]});
    return pts;
}

RotatedGraph::RotatedGraph(const Polyline& monotone)
{
    for (const auto& p : monotone) {
        const double a = rot_xi(p), b = rot_eta(p);
        if (!xi_.empty() && a <= xi_.back()) {
            // tolerate round-off reversals: keep the later point if it moved further out
            if (a < xi_.back() - 1e-12 * (1 + std::abs(a))) continue;
            eta_.back() = b;
            continue;
        }
        xi_.push_back(a);
        eta_.push_back(b);
    }
    require(!xi_.empty(), ErrorKind::invalid_parameter, "rotated graph of an empty curve");
}

double RotatedGraph::side(const Point& p) const
{
    const double a = rot_xi(p), b = rot_eta(p);
    double g;
    if (a <= xi_.front())
        g = eta_.front() + (a - xi_.front());
    else if (a >= xi_.back())
        g = eta_.back() - (a - xi_.back());
    else
        g = lerp_table(xi_, eta_, a);
    return b - g;
}

double RotatedGraph::slope(double a) const
{
    if (xi_.size() < 2 || a <= xi_.front()) return 1.0;
    if (a >= xi_.back()) return -1.0;
    auto it = std::upper_bound(xi_.begin(), xi_.end(), a);
    const std::size_t k = static_cast<std::size_t>(it - xi_.begin()) - 1;
    return (eta_[k + 1] - eta_[k]) / (xi_[k + 1] - xi_[k]);
}

double overlap_discrepancy(const ProfileCurve& curve)
{
    if (!curve.has_neck() || !curve.has_outer()) return 0.0;
    CurveEval ev(curve);
    const double xtop = curve.neck.val.back();
    double worst = 0.0;
    for (int j = 0; j < curve.outer.size(); ++j) {
        const double x = curve.outer.at(j);
        if (x > xtop) break;
        worst = std::max(worst, std::abs(curve.outer.val[j] - ev.u().inverse(x)));
    }
    return worst;
}

std::vector<std::string> check_invariants(const ProfileCurve& curve, double chart_tol, bool strict_monotone)
{
    std::vector<std::string> bad;
    auto finite = [](const std::vector<double>& v) {
        return std::all_of(v.begin(), v.end(), [](double a) { return std::isfinite(a); });
    };
    if (!curve.has_neck() && !curve.has_outer()) bad.push_back("curve has no chart");
    if (curve.has_neck()) {
        if (!finite(curve.neck.val)) bad.push_back("neck chart has non-finite values");
        if (!(curve.neck.val.front() > 0)) bad.push_back("neck radius is not positive");
        if (strict_monotone)
            for (int i = 1; i + 1 < curve.neck.size(); ++i)
                if (!(curve.neck.val[i + 1] > curve.neck.val[i - 1])) {
                    bad.push_back("neck chart not increasing at node " + std::to_string(i));
                    break;
                }
    }
    if (curve.has_outer()) {
        if (!finite(curve.outer.val)) bad.push_back("outer chart has non-finite values");
        if (!(curve.x_split() > 0)) bad.push_back("outer chart starts on the axis");
        if (strict_monotone)
            for (int j = 1; j + 1 < curve.outer.size(); ++j)
                if (!(curve.outer.val[j + 1] > curve.outer.val[j - 1])) {
                    bad.push_back("outer chart not increasing at node " + std::to_string(j));
                    break;
                }
    }
    if (curve.has_neck() && curve.has_outer()) {
        if (curve.neck.val.back() < curve.x_split()) bad.push_back("charts do not overlap in x");
        if (curve.outer.val.front() > curve.y_split()) bad.push_back("charts do not overlap in y");
        const double d = overlap_discrepancy(curve);
        if (d > chart_tol) bad.push_back("overlap discrepancy " + format_double(d) + " exceeds chart_tol");
    }
    return bad;
}

// ---------------------------------------------------------------- constructors

namespace {

double resolve_x_end(double R, double leg, const CurveOptions& opt)
{
    if (R != unbounded) return R;
    const double xm = opt.x_max > 0 ? opt.x_max : 4.0 * leg;
    require(xm > leg, ErrorKind::invalid_parameter, "truncation radius must exceed the initial corner");
    return xm;
}

} // namespace

ProfileCurve build_initial_curve(double delta, double R, double alpha, double smoothing, const CurveOptions& opt)
{
    require(delta > 0, ErrorKind::invalid_parameter, "delta must be positive");
    require(R > delta, ErrorKind::invalid_parameter, "delta must be smaller than R");
    require(alpha > 0, ErrorKind::invalid_parameter, "alpha must be positive");
    require(smoothing >= 0, ErrorKind::invalid_parameter, "smoothing must be nonnegative");
    require(opt.n_neck >= 4 && opt.n_outer >= 4, ErrorKind::invalid_parameter, "charts need at least 4 nodes");
    const double H = alpha / delta;
    const double rf = smoothing;
    require(rf < H, ErrorKind::invalid_parameter, "smoothing radius exceeds the vertical leg");
    if (R != unbounded)
        require(rf < R - delta, ErrorKind::invalid_parameter, "smoothing radius exceeds the horizontal leg");
    const double x_end = resolve_x_end(R, delta + rf, opt);
    const double th = opt.slope_threshold;
    require(th > 0, ErrorKind::invalid_parameter, "slope threshold must be positive");

    double y_split = H, x_split = delta;
    if (rf > 0) {
        y_split = H - rf + rf * std::sin(std::atan(th));
        x_split = delta + rf - rf * std::cos(std::atan(1.0 / th));
    }
    auto x_of_y = [&](double y) {
        if (y <= H - rf || rf == 0) return delta;
        const double d = y - (H - rf);
        return delta + rf - std::sqrt(std::max(0.0, rf * rf - d * d));
    };
    auto y_of_x = [&](double x) {
        if (x >= delta + rf || rf == 0) return H;
        const double d = delta + rf - x;
        return H - rf + std::sqrt(std::max(0.0, rf * rf - d * d));
    };

    ProfileCurve c;
    c.wall = R;
    c.neck.grid = Grid::uniform(0.0, y_split, opt.n_neck);
    c.outer.grid = Grid::logarithmic(x_split, x_end, opt.n_outer);
    c.neck.val.resize(opt.n_neck);
    c.outer.val.resize(opt.n_outer);
    for (int i = 0; i < opt.n_neck; ++i) c.neck.val[i] = x_of_y(c.neck.at(i));
    for (int j = 0; j < opt.n_outer; ++j) c.outer.val[j] = y_of_x(c.outer.at(j));
    return c;
}

ProfileCurve build_quarter_circle_curve(double r, double R, const CurveOptions& opt)
{
    require(R > 0 && R != unbounded, ErrorKind::invalid_parameter, "quarter circles need a finite wall");
    require(r > 0, ErrorKind::invalid_parameter, "radius must be positive");
    require(r < R, ErrorKind::invalid_parameter, "radius must be smaller than R (neck must stay off the axis)");
    const double th = opt.slope_threshold;
    const double k = r * th / std::sqrt(1 + th * th);
    ProfileCurve c;
    c.wall = R;
    c.neck.grid = Grid::uniform(0.0, k, opt.n_neck);
    c.outer.grid = Grid::logarithmic(R - k, R, opt.n_outer);
    c.neck.val.resize(opt.n_neck);
    c.outer.val.resize(opt.n_outer);
    for (int i = 0; i < opt.n_neck; ++i) {
        const double y = c.neck.at(i);
        c.neck.val[i] = R - std::sqrt(std::max(0.0, r * r - y * y));
    }
    for (int j = 0; j < opt.n_outer; ++j) {
        const double d = R - c.outer.at(j);
        c.outer.val[j] = std::sqrt(std::max(0.0, r * r - d * d));
    }
    return c;
}

// ---------------------------------------------------------------- rechart

namespace {

struct WalkSample {
    double x, y, phi;   // phi: tangent angle from the horizontal, in [0, pi/2] for monotone curves
};

std::vector<WalkSample> walk_samples(const ProfileCurve& c, const CurveEval& ev)
{
    std::vector<WalkSample> w;
    const auto du = chart_derivatives(c.neck, true);
    const auto dv = chart_derivatives(c.outer, false);
    for (int i = 0; i < c.neck.size(); ++i)
        if (c.neck.at(i) < ev.switch_y())
            w.push_back({c.neck.val[i], c.neck.at(i), std::atan2(1.0, du.d1[i])});
    w.push_back({ev.switch_x(), ev.switch_y(), std::atan2(1.0, ev.u().derivative(ev.switch_y()))});
    for (int j = 0; j < c.outer.size(); ++j)
        if (c.outer.at(j) > ev.switch_x()) w.push_back({c.outer.at(j), c.outer.val[j], std::atan2(dv.d1[j], 1.0)});
    return w;
}

} // namespace

ProfileCurve rechart(const ProfileCurve& curve, double slope_threshold)
{
    require(slope_threshold > 0, ErrorKind::invalid_parameter, "slope threshold must be positive");
    if (!curve.has_neck() || !curve.has_outer()) return curve;
    CurveEval ev(curve);
    const auto w = walk_samples(curve, ev);
    const double phi_u = std::atan(1.0 / slope_threshold);   // neck chart ends here (dx/dy = theta)
    const double phi_v = std::atan(slope_threshold);         // outer chart starts here (dy/dx = theta)

    double y_new = -1.0;
    for (std::size_t k = 1; k < w.size(); ++k) {
        if (w[k].phi <= phi_u) {
            const double a = w[k - 1].phi, b = w[k].phi;
            const double f = a > b ? (a - phi_u) / (a - b) : 1.0;
            y_new = w[k - 1].y + std::clamp(f, 0.0, 1.0) * (w[k].y - w[k - 1].y);
            break;
        }
    }
    double x_new = -1.0;
    for (std::size_t k = w.size() - 1; k-- > 0;) {
        if (w[k].phi >= phi_v) {
            const double a = w[k + 1].phi, b = w[k].phi;
            const double f = b > a ? (phi_v - a) / (b - a) : 1.0;
            x_new = w[k + 1].x + std::clamp(f, 0.0, 1.0) * (w[k].x - w[k + 1].x);
            break;
        }
    }
    if (y_new <= 0.0 || x_new <= 0.0)
        fail(ErrorKind::rechart_failure, "no admissible split (slope never crosses the threshold)");
    const double x_top = ev.x_at_height(y_new);
    if (x_new > x_top) {
        // coincident splits (threshold 1, or an unsmoothed corner) land within a cell of each other
        const double cell = std::max(curve.outer.grid.spacing(0), curve.neck.grid.ds());
        if (x_new > x_top + cell) fail(ErrorKind::rechart_failure, "split points out of order along the curve");
        x_new = x_top;
    }
    if (x_new >= curve.x_end()) fail(ErrorKind::rechart_failure, "outer chart would be empty");

    ProfileCurve out;
    out.wall = curve.wall;
    out.neck.grid = Grid::uniform(0.0, y_new, curve.neck.size());
    out.outer.grid = Grid::logarithmic(x_new, curve.x_end(), curve.outer.size());
    out.neck.val.resize(curve.neck.size());
    out.outer.val.resize(curve.outer.size());
    for (int i = 0; i < out.neck.size(); ++i) out.neck.val[i] = ev.x_at_height(out.neck.at(i));
    for (int j = 0; j < out.outer.size(); ++j) out.outer.val[j] = ev.height_at(out.outer.at(j));
    out.outer.val.back() = curve.outer.val.back();
    return out;
}

// ---------------------------------------------------------------- curvature and area

std::vector<CurvatureSample> mean_curvature_profile(const ProfileCurve& curve)
{
    std::vector<CurvatureSample> out;
    CurveEval ev(curve);
    const bool both = curve.has_neck() && curve.has_outer();
    if (curve.has_neck()) {
        const auto d = chart_derivatives(curve.neck, true);
        for (int i = 0; i < curve.neck.size(); ++i) {
            const double y = curve.neck.at(i), u = curve.neck.val[i];
            if (both && y > ev.switch_y()) break;
            require(u > 0, ErrorKind::domain_error, "curvature requested at x <= 0");
            const double q = 1 + d.d1[i] * d.d1[i];
            out.push_back({u, y, -(d.d2[i] / q - 1.0 / u) / std::sqrt(q), true});
        }
    }
    if (curve.has_outer()) {
        const auto d = chart_derivatives(curve.outer, false);
        for (int j = 0; j < curve.outer.size(); ++j) {
            const double x = curve.outer.at(j);
            if (both && x < ev.switch_x()) continue;
            require(x > 0, ErrorKind::domain_error, "curvature requested at x <= 0");
            const double q = 1 + d.d1[j] * d.d1[j];
            out.push_back({x, curve.outer.val[j], -(d.d2[j] / q + d.d1[j] / x) / std::sqrt(q), false});
        }
    }
    return out;
}

double trapezoid_window(const Grid& g, const std::vector<double>& f, double a_lo, double a_hi)
{
    auto s_of = [&](double a) { return g.kind == Grid::Kind::uniform ? a : std::log(a); };
    const double s0 = s_of(g.lo), ds = g.ds();
    const double lo = s_of(a_lo), hi = s_of(a_hi);
    double sum = 0.0;
    for (int i = 0; i + 1 < g.n; ++i) {
        const double sa = s0 + i * ds, sb = (i + 1 == g.n - 1) ? s_of(g.hi) : s0 + (i + 1) * ds;
        const double a = std::max(sa, lo), b = std::min(sb, hi);
        if (b <= a) continue;
        const double fa = f[i] + (f[i + 1] - f[i]) * (a - sa) / (sb - sa);
        const double fb = f[i] + (f[i + 1] - f[i]) * (b - sa) / (sb - sa);
        sum += 0.5 * (fa + fb) * (b - a);
    }
    return sum;
}

double surface_area(const ProfileCurve& curve)
{
    CurveEval ev(curve);
    const bool both = curve.has_neck() && curve.has_outer();
    double area = 0.0;
    if (curve.has_neck()) {
        const auto d = chart_derivatives(curve.neck, true);
        std::vector<double> f(curve.neck.size());
        for (int i = 0; i < curve.neck.size(); ++i) f[i] = curve.neck.val[i] * std::sqrt(1 + d.d1[i] * d.d1[i]);
        area += trapezoid_window(curve.neck.grid, f, 0.0, both ? ev.switch_y() : curve.y_split());
    }
    if (curve.has_outer()) {
        const auto d = chart_derivatives(curve.outer, false);
        std::vector<double> f(curve.outer.size());
        for (int j = 0; j < curve.outer.size(); ++j) {
            const double x = curve.outer.at(j);
            f[j] = x * std::sqrt(1 + d.d1[j] * d.d1[j]) * curve.outer.grid.dxds(j);
        }
        area += trapezoid_window(curve.outer.grid, f, both ? ev.switch_x() : curve.x_split(), curve.x_end());
    }
    return 4.0 * M_PI * area;
}

// ---------------------------------------------------------------- polyline import

ProfileCurve curve_from_polyline(const Polyline& pts, double wall, const CurveOptions& opt)
{
    require(pts.size() >= 4, ErrorKind::invalid_parameter, "polyline too short");
    // split at the first segment flatter than 45 degrees
    std::size_t k = pts.size() - 1;
    for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
        const double dx = pts[i + 1].x - pts[i].x, dy = pts[i + 1].y - pts[i].y;
        if (dy < dx) {
            k = i;
            break;
        }
    }
    std::vector<double> ys, xs_lo, xs, yv;
    for (std::size_t i = 0; i <= k; ++i)
        if (ys.empty() || pts[i].y > ys.back()) {
            ys.push_back(pts[i].y);
            xs_lo.push_back(pts[i].x);
        }
    for (std::size_t i = k; i < pts.size(); ++i)
        if (xs.empty() || pts[i].x > xs.back()) {
            xs.push_back(pts[i].x);
            yv.push_back(pts[i].y);
        }
    ProfileCurve c;
    c.wall = wall;
    if (ys.size() >= 2) {
        Pchip u(ys, xs_lo);
        c.neck.grid = Grid::uniform(ys.front(), ys.back(), opt.n_neck);
        c.neck.val.resize(opt.n_neck);
        for (int i = 0; i < opt.n_neck; ++i) c.neck.val[i] = u(c.neck.at(i));
    }
    if (xs.size() >= 2) {
        Pchip v(xs, yv);
        c.outer.grid = Grid::logarithmic(xs.front(), xs.back(), opt.n_outer);
        c.outer.val.resize(opt.n_outer);
        for (int j = 0; j < opt.n_outer; ++j) c.outer.val[j] = v(c.outer.at(j));
    }
    if (c.has_neck() && c.has_outer()) return rechart(c, opt.slope_threshold);
    return c;
}

// ---------------------------------------------------------------- snapshot files

std::string format_double(double v)
{
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

void write_snapshot(std::ostream& os, const Polyline& pts, double R, double t, const std::map<std::string, double>& meta)
{
    os << "# mcflow-curve v1 R=" << format_double(R) << " t=" << format_double(t) << "\n";
    for (const auto& [k, v] : meta) os << "# " << k << "=" << format_double(v) << "\n";
    for (const auto& p : pts) os << format_double(p.x) << " " << format_double(p.y) << "\n";
}

Snapshot read_snapshot(std::istream& is)
{
    Snapshot s;
    std::string line;
    require(static_cast<bool>(std::getline(is, line)), ErrorKind::io_error, "empty curve snapshot");
    {
        std::istringstream hs(line);
        std::string hash, tag, ver, rtok, ttok;
        hs >> hash >> tag >> ver >> rtok >> ttok;
        require(hash == "#" && tag == "mcflow-curve" && ver == "v1" && rtok.rfind("R=", 0) == 0 && ttok.rfind("t=", 0) == 0,
                ErrorKind::io_error, "bad curve snapshot header: " + line);
        s.R = std::strtod(rtok.c_str() + 2, nullptr);
        s.t = std::strtod(ttok.c_str() + 2, nullptr);
    }
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        if (line[0] == '#') {
            const auto eq = line.find('=');
            if (eq != std::string::npos) {
                std::string key = line.substr(1, eq - 1);
                key.erase(0, key.find_first_not_of(' '));
                s.meta[key] = std::strtod(line.c_str() + eq + 1, nullptr);
            }
            continue;
        }
        std::istringstream ls(line);
        Point p;
        require(static_cast<bool>(ls >> p.x >> p.y), ErrorKind::io_error, "bad curve snapshot line: " + line);
        s.points.push_back(p);
    }
    return s;
}

void write_snapshot_file(const std::string& path, const Polyline& pts, double R, double t,
                         const std::map<std::string, double>& meta)
{
    std::ofstream os(path);
    require(static_cast<bool>(os), ErrorKind::io_error, "cannot write " + path);
    write_snapshot(os, pts, R, t, meta);
}

Snapshot read_snapshot_file(const std::string& path)
{
    std::ifstream is(path);
    require(static_cast<bool>(is), ErrorKind::io_error, "cannot read " + path);
    return read_snapshot(is);
}

} // namespace mcflow
