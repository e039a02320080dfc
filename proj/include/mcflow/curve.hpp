#pragma once

#include <iosfwd>
#include <limits>
#include <map>
#include <string>
#include <vector>

#include "mcflow/interp.hpp"

namespace mcflow {

inline constexpr double unbounded = std::numeric_limits<double>::infinity();

// Nodes of a chart. Uniform grids are equispaced in x; log grids are equispaced in ln x.
struct Grid {
    enum class Kind { uniform, log };

    Kind kind = Kind::uniform;
    double lo = 0.0;
    double hi = 1.0;
    int n = 0;

    static Grid uniform(double lo, double hi, int n);
    static Grid logarithmic(double lo, double hi, int n);

    double ds() const;            // spacing in the computational coordinate
    double node(int i) const;
    double dxds(int i) const;     // 1 on uniform grids, x_i on log grids
    double spacing(int i) const;  // physical distance to the next node
    double min_spacing() const;
    std::vector<double> nodes() const;
};

struct Chart {
    Grid grid;
    std::vector<double> val;

    bool empty() const { return val.empty(); }
    int size() const { return static_cast<int>(val.size()); }
    double at(int i) const { return grid.node(i); }
};

// Upper half of a rotationally symmetric profile: x = u(y) near the neck and y = v(x) out to the wall.
// Either chart may be absent for pieces such as a bare cylinder or a flat annulus.
struct ProfileCurve {
    Chart neck;
    Chart outer;
    double wall = 10.0;   // cylinder radius R, or `unbounded`

    bool has_neck() const { return !neck.empty(); }
    bool has_outer() const { return !outer.empty(); }
    bool bounded() const { return wall != unbounded; }
    double y_split() const { return neck.grid.hi; }
    double x_split() const { return outer.grid.lo; }
    double x_end() const { return outer.grid.hi; }
    double neck_radius() const;
    double height() const;
};

struct BarrierConstants {
    double alpha = 0.0;
    double torus_extinction = 0.0;
    double eta_estimate = 0.0;
};

struct CurveOptions {
    int n_neck = 128;
    int n_outer = 128;
    double slope_threshold = 2.0;
    double x_max = 0.0;   // truncation radius for unbounded curves (0: 4x the leg length)
};

struct Point {
    double x = 0.0;
    double y = 0.0;
};
using Polyline = std::vector<Point>;

ProfileCurve build_initial_curve(double delta, double R, double alpha, double smoothing,
                                 const CurveOptions& opt = {});
ProfileCurve build_quarter_circle_curve(double r, double R, const CurveOptions& opt = {});

ProfileCurve rechart(const ProfileCurve& curve, double slope_threshold);

struct CurvatureSample {
    double x = 0.0;
    double y = 0.0;
    double H = 0.0;
    bool neck_chart = false;
};

// Sign follows the chart: positive when the chart value decreases under the flow
// (toward the axis in the neck chart, downward in the outer chart).
std::vector<CurvatureSample> mean_curvature_profile(const ProfileCurve& curve);

// Trapezoid rule of grid samples f in the computational coordinate (x or ln x), restricted to
// the physical window [a_lo, a_hi].
double trapezoid_window(const Grid& g, const std::vector<double>& f, double a_lo, double a_hi);

// Area of the surface of revolution, both sheets.
double surface_area(const ProfileCurve& curve);

// First and second derivatives of a chart in its own abscissa. The neck chart uses the
// axis reflection at y = 0; other ends use one-sided second-order differences.
struct ChartDerivs {
    std::vector<double> d1, d2;
};
ChartDerivs chart_derivatives(const Chart& c, bool reflect_start);

// Union evaluation of a curve: neck chart below the switch point, outer chart beyond it.
class CurveEval {
public:
    explicit CurveEval(const ProfileCurve& curve);

    double x_at_height(double y) const;
    double height_at(double x) const;
    double switch_x() const { return sx_; }
    double switch_y() const { return sy_; }
    const Pchip& u() const { return u_; }
    const Pchip& v() const { return v_; }
    bool has_neck() const { return !u_.empty(); }
    bool has_outer() const { return !v_.empty(); }

private:
    Pchip u_, v_;
    double sx_ = 0.0, sy_ = 0.0;
};

Polyline to_polyline(const ProfileCurve& curve);

// A monotone curve (x and y nondecreasing from the neck outward) seen as a 1-Lipschitz graph
// eta = g(xi) over the diagonal, xi = (x+y)/sqrt2, eta = (y-x)/sqrt2. Beyond its ends the curve
// continues straight down from the first point and straight right from the last one.
class RotatedGraph {
public:
    RotatedGraph() = default;
    explicit RotatedGraph(const Polyline& monotone);

    // > 0 above/left of the curve, < 0 below/right.
    double side(const Point& p) const;
    double slope(double xi) const;
    bool empty() const { return xi_.empty(); }

private:
    std::vector<double> xi_, eta_;
};

inline double rot_xi(const Point& p) { return (p.x + p.y) * 0.70710678118654752440; }
inline double rot_eta(const Point& p) { return (p.y - p.x) * 0.70710678118654752440; }

// Max |v(x) - u^{-1}(x)| over outer nodes in the overlap.
double overlap_discrepancy(const ProfileCurve& curve);

// Human-readable invariant violations; empty when the curve is admissible.
std::vector<std::string> check_invariants(const ProfileCurve& curve, double chart_tol, bool strict_monotone);

// Resample a monotone polyline (neck to wall) into a two-chart curve.
ProfileCurve curve_from_polyline(const Polyline& pts, double wall, const CurveOptions& opt = {});

struct Snapshot {
    double R = unbounded;
    double t = 0.0;
    Polyline points;
    std::map<std::string, double> meta;
};

void write_snapshot(std::ostream& os, const Polyline& pts, double R, double t,
                    const std::map<std::string, double>& meta = {});
Snapshot read_snapshot(std::istream& is);
void write_snapshot_file(const std::string& path, const Polyline& pts, double R, double t,
                         const std::map<std::string, double>& meta = {});
Snapshot read_snapshot_file(const std::string& path);

std::string format_double(double v);

} // namespace mcflow
