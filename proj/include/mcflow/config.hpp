#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "mcflow/critical_search.hpp"

namespace mcflow {

// Everything a run depends on. Read from a sectioned key = value file:
//
//   [grid]        n_neck n_outer slope_threshold
//   [time]        scheme c_cfl c_react horizon cadence
//   [tolerances]  chart_tol eps_pinch eps_wall tangency_tol bracket_tol
//   [domain]      R unbounded x_max
//   [initial]     smoothing
//   [search]      certificate_interval radii
//   [torus]       tolerance cache
//   [output]      dir
//
// eps_pinch and eps_wall are fractions of the initial neck radius and of R. horizon 0 means three
// torus extinction times. A file must list every key.
struct SimConfig {
    int n_neck = 128;
    int n_outer = 128;
    double slope_threshold = 2.0;

    std::string scheme = "imex";
    double c_cfl = 8.0;
    double c_react = 0.1;
    double horizon = 0.0;
    double cadence = 0.1;

    double chart_tol = 1e-3;
    double eps_pinch = 1e-2;
    double eps_wall = 1e-2;
    double tangency_tol = 1e-9;
    double bracket_tol = 1e-2;

    double R = 10.0;
    bool unbounded = false;
    double x_max = 0.0;

    double smoothing = 0.05;

    double certificate_interval = 1.0;
    std::vector<double> radii = {8, 12, 16};

    double torus_tolerance = 1e-10;
    std::string torus_cache = "torus.snap";

    std::string out_dir = "out";
};

std::vector<std::string> config_keys();   // "section.key", in file order

// Throws config-error naming the offending key.
SimConfig load_config(const std::string& path);
SimConfig parse_config(std::istream& is);
void validate(const SimConfig& c);
void write_config(std::ostream& os, const SimConfig& c);

double domain_radius(const SimConfig& c);   // R or unbounded
CurveOptions curve_options(const SimConfig& c);
EvolveOptions evolve_options(const SimConfig& c, const ShrinkerProfile* torus);
SearchContext search_context(const SimConfig& c, const ShrinkerProfile* torus);
double run_horizon(const SimConfig& c, const ShrinkerProfile& torus);

} // namespace mcflow
