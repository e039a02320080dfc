#pragma once

#include <functional>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "mcflow/barriers.hpp"
#include "mcflow/curve.hpp"

namespace mcflow {

struct Epsilons {
    double pinch = 0.0;   // 0: pinch_fraction of the initial neck radius
    double wall = 0.0;    // 0: wall_fraction of R
    double flat = 1e-3;
    double pinch_fraction = 1e-2;
    double wall_fraction = 1e-2;
};

enum class Scheme { explicit_euler, imex };

// Condition at the far end of the outer chart.
//   free:  v_x = 0 (orthogonal to the wall)
//   slope: v_x = wall_slope (e.g. a truncated catenoid)
//   clamp: v frozen at its initial value
//   envelope: v_x = (alpha+1)/sqrt(X^2 - (alpha+1)^2)
enum class WallCondition { free, slope, clamp, envelope };

struct EvolveProgress;

struct EvolveOptions {
    Scheme scheme = Scheme::explicit_euler;
    double c_cfl = 0.4;
    double c_react = 0.1;
    double dt_max = 1e-2;
    double dt_min = 0.0;              // 0: 1e-12 of the horizon
    double slope_threshold = 2.0;
    double rechart_factor = 1.5;      // rechart once a chart slope exceeds factor * threshold
    WallCondition wall = WallCondition::free;   // unbounded curves default to clamp when left at free
    double wall_slope = 0.0;
    double envelope_alpha = 0.0;
    Epsilons eps;
    double cadence = 0.1;
    bool keep_states = true;
    long max_steps = 0;               // 0: unlimited
    long stop_after_steps = 0;        // 0: run to an event or the horizon; otherwise pause (for checkpoints)
    const ShrinkerProfile* torus = nullptr;     // enables certificates at the horizon
    BarrierConstants constants;
    std::map<std::string, double> provenance;
    // Called after every recorded tick. Returning true ends the run; the hook sets the outcome.
    std::function<bool(EvolveProgress&)> on_tick;
};

struct StepStats {
    double dt = 0.0;
    double max_H = 0.0;
    int recharts = 0;
};

struct FlowState {
    double t = 0.0;
    ProfileCurve curve;
    StepStats stats;
};

enum class EventKind { pinch, collapse, rechart, rechart_failure, stiffness_failure, numerical_failure, horizon };
const char* to_string(EventKind k);

struct Event {
    double t = 0.0;
    EventKind kind = EventKind::horizon;
    std::string detail;
};

struct TrajectoryRow {
    double t = 0.0;
    double neck_x = 0.0;
    double height_at_R = 0.0;
    double area = 0.0;
    double max_slope_outer = 0.0;
    double h2_budget_cum = 0.0;
    double boundary_cum = 0.0;    // time integral of the outer-edge flux term
};

struct Trajectory {
    std::vector<FlowState> states;
    std::vector<TrajectoryRow> rows;
    std::vector<Event> events;
    std::map<std::string, double> provenance;
};

enum class OutcomeKind { neck_pinch, boundary_collapse, survived_horizon, numerical_failure };
const char* to_string(OutcomeKind k);

struct Outcome {
    OutcomeKind kind = OutcomeKind::survived_horizon;
    double t = 0.0;
    Certificate certificate = Certificate::none;
    double certificate_parameter = 0.0;
    bool suspected = false;   // pinch inferred from a stiffness failure
    std::string detail;
};

// Mutable integrator state. Everything needed for bit-identical continuation.
struct EvolveProgress {
    FlowState state;
    Trajectory traj;
    double horizon = 0.0;
    double next_tick = 0.0;
    long tick_index = 0;
    long steps = 0;
    double eps_pinch = 0.0;
    double eps_wall = 0.0;
    double dt_min = 0.0;
    std::vector<double> clamp;     // frozen far-field height (clamp condition)
    double h2_cum = 0.0;
    double boundary_cum = 0.0;
    bool finished = false;
    Outcome outcome;
};

// One stable step with dt <= dt_max. Returns the new state; throws stiffness-failure,
// rechart-failure or numerical-failure.
FlowState step(const FlowState& state, double dt_max, const EvolveOptions& opt = {});

EvolveProgress start_evolution(const ProfileCurve& initial, double horizon, const EvolveOptions& opt);
void continue_evolution(EvolveProgress& p, const EvolveOptions& opt);

struct EvolveResult {
    Trajectory traj;
    Outcome outcome;
};

EvolveResult evolve(const ProfileCurve& initial, double horizon, const EvolveOptions& opt = {});

void write_trajectory_csv(std::ostream& os, const Trajectory& tr);
void write_checkpoint(const std::string& path, const EvolveProgress& p);
EvolveProgress read_checkpoint(const std::string& path);

// Horizontal graph over the whole disk [0, R] with v_x = 0 at both ends.
struct DiskGraphRun {
    std::vector<double> x;
    std::vector<double> times;
    std::vector<double> height_at_R;
    std::vector<std::vector<double>> states;   // at cadence
    double min_slope = 0.0;                    // most negative v_x seen over the run
    double beta = 0.0;                         // L(R, t) < 1 - beta for t > T
    double T = 0.0;
};

DiskGraphRun evolve_graph_on_disk(const std::vector<double>& x, const std::vector<double>& initial, double horizon,
                                  double cadence = 0.1, double t_report = 0.0);

} // namespace mcflow
