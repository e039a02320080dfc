#pragma once

#include <functional>
#include <iosfwd>
#include <vector>

#include "mcflow/curve.hpp"
#include "mcflow/evolver.hpp"

namespace mcflow {

// Crossings of the upper halves only; the mirror image doubles every count.
struct IntersectionReport {
    bool identical = false;
    int count = 0;
    std::vector<Point> locations;
    std::vector<Point> tangencies;   // touching without changing sides, reported and not counted
};

// Signed separation of `other` from the monotone reference curve, measured across the diagonal
// (a chart in which both steep and flat pieces are graphs). Separations below tangency_tol count as contact.
IntersectionReport count_intersections(const Polyline& monotone_ref, const Polyline& other, double tangency_tol);
IntersectionReport count_intersections(const ProfileCurve& a, const ProfileCurve& b, double tangency_tol);
IntersectionReport count_intersections(const ProfileCurve& a, const Polyline& b, double tangency_tol);

struct CountSample {
    double t = 0.0;
    int count = 0;
    bool identical = false;
    int tangencies = 0;
};

struct CountIncrease {
    double t = 0.0;
    int count_before = 0;
    int count_after = 0;
    bool wall_event = false;
};

struct MonitorReport {
    std::vector<CountSample> series;
    std::vector<CountIncrease> increases;   // every increase; wall events are flagged
    int violations() const;                 // increases not attributable to the wall
};

// `other(t)` gives the comparison curve at time t (a static barrier, a shrinking sphere,
// an evolving graph or another trajectory).
MonitorReport monitor_count(const Trajectory& traj, const std::function<Polyline(double)>& other, double tangency_tol,
                            double wall_band = 0.0);
MonitorReport monitor_count(const Trajectory& a, const Trajectory& b, double tangency_tol, double wall_band = 0.0);

void write_violations_csv(std::ostream& os, const MonitorReport& r);

enum class OnTop { yes, no, incomparable };
const char* to_string(OnTop v);

OnTop is_on_top(const Polyline& a, const Polyline& b, double tol = 1e-9);
OnTop is_on_top(const ProfileCurve& a, const ProfileCurve& b, double tol = 1e-9);

// Curve state of a trajectory at the recorded time closest to t.
const FlowState& state_near(const Trajectory& tr, double t);

} // namespace mcflow
