#pragma once

#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "mcflow/barriers.hpp"
#include "mcflow/curve.hpp"
#include "mcflow/evolver.hpp"

namespace mcflow {

// A one-parameter family of initial curves, ordered so that smaller parameters lie on top.
struct Family {
    std::string name;
    std::function<ProfileCurve(double)> make;
    double lo = 0.0;          // starting bracket; lo is expected to pinch, hi not
    double hi = 0.0;
    double min_param = 0.0;   // open admissible range, used when the starting bracket must widen
    double max_param = 0.0;
};

struct SearchContext {
    const ShrinkerProfile* torus = nullptr;   // certificates are skipped without it
    EvolveOptions evolve;
    CurveOptions curve;
    double smoothing = 0.05;                  // fillet radius as a fraction of min(delta, R - delta)
    double certificate_interval = 1.0;        // time between certificate checks during a run (0: start and end only)
    bool observe_pinch = true;                // keep evolving a torus-certified curve until it actually pinches
    bool certificates_only = false;           // never evolve; undecided curves stay undecided

    SearchContext();
};

// rho_{delta,R}, vertical leg at x = delta and horizontal leg at height alpha/delta.
Family rho_family(double R, const SearchContext& ctx);
// Quarter circles centred on the wall, parametrised by the neck abscissa p = R - r.
Family quarter_circle_family(double R, const SearchContext& ctx);

struct Classification {
    Outcome outcome;
    Trajectory traj;
    bool decided = true;    // false for certificates_only runs that found no certificate
};

Classification classify(const ProfileCurve& initial, double horizon, const SearchContext& ctx);
Classification classify(double delta, double R, double horizon, const Epsilons& eps, const SearchContext& ctx);

// Default horizon: three extinction times of the reference torus.
double default_horizon(const ShrinkerProfile& torus);

struct ManifestRecord {
    double R = 0.0;
    double param = 0.0;
    Outcome outcome;
    bool decided = true;
};

struct CriticalBracket {
    std::string family;
    double R = 0.0;
    double lo = 0.0;          // pinches
    double hi = 0.0;          // survives the horizon or collapses
    double width = 0.0;
    double horizon = 0.0;
    int steps = 0;
    bool converged = false;   // width <= tolerance
    bool standing_hypothesis = false;   // R > 2 alpha
    Outcome lo_witness;
    Outcome hi_witness;
    std::vector<ManifestRecord> records;
    double midpoint() const { return 0.5 * (lo + hi); }
};

struct SearchOptions {
    double bracket_tol = 1e-2;
    double horizon = 0.0;     // 0: default_horizon
    int max_steps = 40;
    int max_widen = 6;
};

// Bisection on the family parameter. Throws foliation-violation when the recorded outcomes are not
// monotone in the parameter.
CriticalBracket find_critical(const Family& family, double R, const SearchOptions& opt, const SearchContext& ctx);
CriticalBracket find_critical(double R, const SearchOptions& opt, const SearchContext& ctx);

// Pairs (smaller parameter that does not pinch, larger parameter that pinches); empty when consistent.
std::vector<std::pair<ManifestRecord, ManifestRecord>> foliation_violations(const std::vector<ManifestRecord>& records);

struct LimitStudy {
    std::vector<CriticalBracket> brackets;
    double eta = 0.0;
    double eta_uncertainty = 0.0;
    bool monotone = true;
    std::vector<std::string> monotonicity_report;   // one line per violating pair
};

LimitStudy limit_study(const std::vector<double>& R_list, const SearchOptions& opt, const SearchContext& ctx);

struct NeckOrderingReport {
    bool pass = true;
    double max_violation = 0.0;   // max of u_small - u_large over common times (negative when strictly ordered)
    double t_at_max = 0.0;
    int compared = 0;
    std::vector<std::pair<double, double>> violations;   // (t, u_small - u_large) beyond tolerance
};

NeckOrderingReport neck_ordering_check(const Trajectory& small_R, const Trajectory& large_R, double tol);

void write_manifest(std::ostream& os, const std::vector<ManifestRecord>& records);
void write_bracket_csv(std::ostream& os, const std::vector<CriticalBracket>& brackets);

} // namespace mcflow
