#pragma once

#include <vector>

#include "mcflow/curve.hpp"

namespace mcflow {

// Profile curve given as an ordered point list whose ends sit on a symmetry line:
// on the x-axis (mirror y -> -y) or on the rotation axis (a pole, mirror x -> -x).
struct ParametricCurve {
    enum class End { x_axis, pole };

    Polyline pts;
    End start = End::x_axis;
    End end = End::x_axis;
};

struct ParametricOptions {
    double c_dt = 0.25;        // dt = c_dt * (min node spacing)^2
    double dt_max = 1e-2;
    double cadence = 0.0;      // 0: only the final state is kept
};

struct ParametricState {
    double t = 0.0;
    ParametricCurve curve;
};

// Rotational MCF X_t = X_uu/|X_u|^2 - (n_x/x) n, semi-implicit in the diffusion term.
// Stops early (extinct = true) once the curve collapses below min_size.
struct ParametricRun {
    std::vector<ParametricState> states;
    bool extinct = false;
    double t_extinct = 0.0;
};

ParametricRun evolve_parametric(const ParametricCurve& initial, double t_end, const ParametricOptions& opt = {},
                                double min_size = 1e-3);

double parametric_area(const ParametricCurve& c);   // area of the full closed surface of revolution
double distance_to_polyline(const Point& p, const Polyline& poly);
Polyline resample_by_arclength(const Polyline& poly, int n);

} // namespace mcflow
