#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "mcflow/evolver.hpp"
#include "mcflow/svg.hpp"

namespace mcflow {

// Worst point of one recorded state.
struct EstimateSample {
    double t = 0.0;
    double x = 0.0;
    double value = 0.0;
    double bound = 0.0;
    double violation = 0.0;
};

struct EstimateReport {
    std::string id;
    double x_lo = 0.0, x_hi = 0.0;
    double t_lo = 0.0, t_hi = 0.0;
    double max_violation;          // signed; <= tolerance passes
    double x_at_max = 0.0, t_at_max = 0.0;
    double tolerance = 0.0;
    bool pass = true;
    bool vacuous = true;           // no point of the trajectory fell in the checked domain
    std::map<std::string, double> parameters;
    std::vector<EstimateSample> samples;
    std::vector<std::string> notes;

    EstimateReport();
    void consider(const EstimateSample& s);   // keeps the worst sample per time
    void finish();
};

void write_report_text(std::ostream& os, const EstimateReport& r);
void write_report_csv(std::ostream& os, const EstimateReport& r);
SvgPlot report_plot(const EstimateReport& r);

// One slope sample per chart node, each node taken from the chart that owns it.
struct GraphSample {
    double x = 0.0;
    double y = 0.0;
    double dydx = 0.0;   // +inf where the curve is vertical
    double dxdy = 0.0;
};
std::vector<GraphSample> graph_samples(const ProfileCurve& curve);

// ---------------------------------------------------------------- far-field catenoid slope

double catenoid_gradient_bound(double alpha, double x);
EstimateReport check_uniform_catenoid_gradient(const Trajectory& traj, double alpha, double rel_tol = 0.05);

// ---------------------------------------------------------------- arctan comparison

bool k_condition(double a, double b, double k, double alpha);
// Slope bound on [b, k] once the time-dependent term has died out.
double arctan_limit_bound(double a, double b, double k, double alpha);

struct OscillationSeries {
    std::vector<double> t, osc;    // f(c, t) - f(b, t) where both are on the graph
    bool decreasing = false;
    double final_value = 0.0;
};

struct ArctanDecayReport {
    EstimateReport estimate;
    OscillationSeries oscillation;
};

// Bounded trajectories use the wall radius in place of k and need b < R; unbounded ones use k and
// throw invalid-parameter when the side condition on k fails.
ArctanDecayReport check_arctan_gradient_decay(const Trajectory& traj, double a, double b, double c, double k,
                                              double alpha, double rel_tol = 0.05);

// ---------------------------------------------------------------- neck chart gradient

double neck_upper_bound(double alpha, double mu, double y);
double neck_lower_bound(double eps, double lambda, double a, double y, double t);

struct NeckGradientReport {
    EstimateReport upper;
    EstimateReport lower;
    double mu = 0.0;
    double eps = 0.0;
    double lambda = 0.0;
    double a = 0.0, h = 0.0;
    double sigma_fit = 0.0;   // smallest sigma with u_y <= exp(sigma / t) on the window
};

// Throws window-invalid when the trajectory pinches inside [t0, t1].
NeckGradientReport check_neck_vertical_gradient(const Trajectory& traj, double t0, double t1, double alpha,
                                                double rel_tol = 0.05, double a_fraction = 0.5);

// ---------------------------------------------------------------- height and neck

EstimateReport check_height_neck_coupling(const Trajectory& traj, double kappa, double alpha);

// ---------------------------------------------------------------- first variation

struct EnergyReport {
    double area0 = 0.0;
    double area_end = 0.0;
    double h2_total = 0.0;
    double boundary_total = 0.0;
    double identity_residual = 0.0;   // (A0 - A) - (h2 - boundary)
    double relative_residual = 0.0;   // over A0
    bool identity_pass = false;
    EstimateReport boundary_sign;     // mean curvature points down for x >= alpha + 2
    std::vector<double> window_start, window_mass;   // H^2 mass on consecutive unit windows
    bool mass_decays = false;
};

EnergyReport energy_budget(const Trajectory& traj, double alpha, double rel_tol = 0.01);

// ---------------------------------------------------------------- multiplicity two

struct MultiplicityReport {
    bool reached = false;
    double t_eps = 0.0;
    bool persists = false;
    std::vector<double> t, c0, c1;   // per state sup |y| and sup |y'| on the annulus (inf when not a graph)
};

MultiplicityReport detect_multiplicity_two(const Trajectory& traj, double K_radius, double eps);

// ---------------------------------------------------------------- far field of unbounded runs

double sphere_gap(double r);               // r - sqrt(r^2 - 4)
double avoidance_radius(double eps);        // smallest r with sphere_gap(r) <= eps/2
double quadratic_radius(double eps);        // sqrt(8/eps + 1)

struct AsymptoticPlaneReport {
    EstimateReport estimate;
    double plane = 0.0;
    double r = 0.0;
    double R_prime = 0.0;
    double R_eps = 0.0;
};

AsymptoticPlaneReport asymptotic_plane_check(const Trajectory& traj, double eps);

} // namespace mcflow
