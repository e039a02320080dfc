#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "mcflow/config.hpp"
#include "mcflow/diagnostics.hpp"
#include "mcflow/errors.hpp"

namespace mcflow {

inline constexpr int exit_ok = 0;
inline constexpr int exit_reports_failed = 1;   // verify: some report failed
inline constexpr int exit_failure = 2;
inline constexpr int exit_bad_config = 64;

// Maps an error to an exit status: bad configuration or arguments give 64, everything else 2.
int exit_code(const Error& e);

std::string torus_cache_path(const SimConfig& c);
ShrinkerProfile load_torus(const SimConfig& c);

struct EvolveRequest {
    std::string family = "rho";   // rho (param = delta) or quarter (param = neck abscissa)
    double param = 0.0;
    long checkpoint_every = 0;    // steps between checkpoint.json writes (0: never)
    long stop_after = 0;          // pause after this many steps and leave checkpoint.json (0: run to the end)
};

// Files in the output directory: run.ini, trajectory.csv, events.csv, manifest.csv, state.json and
// snapshots/snap_NNNNN.csv; checkpoint.json when paused or checkpointing.
int cmd_evolve(const SimConfig& c, const EvolveRequest& req, std::ostream& log);
int cmd_resume(const SimConfig& c, const std::string& checkpoint, const EvolveRequest& req, std::ostream& log);

struct FindRequest {
    std::string family = "rho";
    bool certificates_only = false;
};
int cmd_find_critical(const SimConfig& c, const FindRequest& req, std::ostream& log);
int cmd_limit_study(const SimConfig& c, std::ostream& log);
int cmd_shoot_torus(const SimConfig& c, bool self_similarity, std::ostream& log);

struct BarrierRequest {
    std::string kind = "catenoid";   // plane, catenoid, torus, sphere, la
    double height = 1.0;
    double c = 1.0;
    double xi = 0.0;
    double lambda = 1.0;
    double center_x = 0.0, center_y = 0.0;
    double radius = 1.0;
    double a = 1.0;
    double horizon = 1.0;            // la: evolution time of the graph over the disk
    double delta = 0.0;              // > 0: compare against rho_{delta,R}
};
int cmd_barrier_lab(const SimConfig& c, const BarrierRequest& req, std::ostream& log);

struct VerifyRequest {
    std::string state;               // state.json or checkpoint.json
    std::vector<std::string> only;   // report ids; empty: all
    double a = 0.5, b = 1.0, c = 2.0, k = 40.0;
    double K = 8.0;
    double eps = 0.05;
    double kappa = 1.0;
    double t0 = 0.0, t1 = 1.0;       // neck gradient window
    double rel_tol = 0.05;
};
int cmd_verify(const SimConfig& c, const VerifyRequest& req, std::ostream& log);

// Inputs: state.json (profiles and time series), trajectory.csv, report CSV from verify, bracket CSV.
int cmd_plot(const SimConfig& c, const std::vector<std::string>& inputs, std::ostream& log);

} // namespace mcflow
