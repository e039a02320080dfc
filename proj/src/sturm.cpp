#include "mcflow/sturm.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>

#include "mcflow/errors.hpp"

namespace mcflow {

IntersectionReport count_intersections(const Polyline& monotone_ref, const Polyline& other, double tangency_tol)
{
    require(tangency_tol >= 0, ErrorKind::invalid_parameter, "tangency tolerance must be nonnegative");
    IntersectionReport rep;
    if (monotone_ref.empty() || other.empty()) return rep;
    const RotatedGraph g(monotone_ref);
    std::vector<double> s(other.size());
    for (std::size_t k = 0; k < other.size(); ++k) s[k] = g.side(other[k]);

    auto sgn = [&](double v) { return v > tangency_tol ? 1 : (v < -tangency_tol ? -1 : 0); };
    if (std::all_of(s.begin(), s.end(), [&](double v) { return sgn(v) == 0; })) {
        rep.identical = true;
        return rep;
    }
    int last = 0;
    std::size_t last_k = 0;
    bool in_contact = false;
    std::size_t best = 0;
    for (std::size_t k = 0; k < s.size(); ++k) {
        const int c = sgn(s[k]);
        if (c == 0) {
            if (!in_contact || std::abs(s[k]) < std::abs(s[best])) best = k;
            in_contact = true;
            continue;
        }
        if (last != 0 && c != last) {
            Point p;
            if (in_contact) {
                p = other[best];
            } else {
                const double w = s[last_k] / (s[last_k] - s[k]);
                p = {other[last_k].x + w * (other[k].x - other[last_k].x), other[last_k].y + w * (other[k].y - other[last_k].y)};
            }
            rep.locations.push_back(p);
        } else if (in_contact && last != 0) {
            rep.tangencies.push_back(other[best]);
        }
        in_contact = false;
        last = c;
        last_k = k;
    }
    rep.count = static_cast<int>(rep.locations.size());
    return rep;
}

IntersectionReport count_intersections(const ProfileCurve& a, const ProfileCurve& b, double tangency_tol)
{
    return count_intersections(to_polyline(a), to_polyline(b), tangency_tol);
}

IntersectionReport count_intersections(const ProfileCurve& a, const Polyline& b, double tangency_tol)
{
    return count_intersections(to_polyline(a), b, tangency_tol);
}

int MonitorReport::violations() const
{
    return static_cast<int>(std::count_if(increases.begin(), increases.end(), [](const CountIncrease& c) { return !c.wall_event; }));
}

const FlowState& state_near(const Trajectory& tr, double t)
{
    require(!tr.states.empty(), ErrorKind::invalid_parameter, "trajectory has no recorded states");
    auto it = std::lower_bound(tr.states.begin(), tr.states.end(), t, [](const FlowState& s, double v) { return s.t < v; });
    if (it == tr.states.end()) return tr.states.back();
    if (it != tr.states.begin() && std::abs((it - 1)->t - t) <= std::abs(it->t - t)) return *(it - 1);
    return *it;
}

MonitorReport monitor_count(const Trajectory& traj, const std::function<Polyline(double)>& other, double tangency_tol,
                            double wall_band)
{
    MonitorReport rep;
    bool have_prev = false;
    CountSample prev;
    int prev_interior = 0;
    for (const auto& s : traj.states) {
        const auto r = count_intersections(to_polyline(s.curve), other(s.t), tangency_tol);
        CountSample cs{s.t, r.count, r.identical, static_cast<int>(r.tangencies.size())};
        int interior = r.count;
        if (s.curve.bounded()) {
            const double band = wall_band > 0 ? wall_band : 0.05 * s.curve.wall;
            interior = static_cast<int>(std::count_if(r.locations.begin(), r.locations.end(),
                                                      [&](const Point& p) { return p.x < s.curve.wall - band; }));
        }
        // an increase is a wall event when every new crossing sits in the band next to the wall
        if (have_prev && !prev.identical && !cs.identical && cs.count > prev.count)
            rep.increases.push_back({s.t, prev.count, cs.count, interior <= prev_interior});
        rep.series.push_back(cs);
        prev = cs;
        prev_interior = interior;
        have_prev = true;
    }
    return rep;
}

MonitorReport monitor_count(const Trajectory& a, const Trajectory& b, double tangency_tol, double wall_band)
{
    require(!a.states.empty() && !b.states.empty(), ErrorKind::invalid_parameter, "trajectories have no states");
    const double t_end = std::min(a.states.back().t, b.states.back().t);
    require(t_end >= std::max(a.states.front().t, b.states.front().t), ErrorKind::invalid_parameter,
            "trajectory time ranges do not overlap");
    Trajectory clipped;
    for (const auto& s : a.states)
        if (s.t <= t_end) clipped.states.push_back(s);
    return monitor_count(
        clipped, [&](double t) { return to_polyline(state_near(b, t).curve); }, tangency_tol, wall_band);
}

void write_violations_csv(std::ostream& os, const MonitorReport& r)
{
    os << "t,count_before,count_after,wall_event\n";
    for (const auto& c : r.increases)
        os << format_double(c.t) << ',' << c.count_before << ',' << c.count_after << ',' << (c.wall_event ? "true" : "false")
           << '\n';
}

const char* to_string(OnTop v)
{
    switch (v) {
    case OnTop::yes: return "yes";
    case OnTop::no: return "no";
    case OnTop::incomparable: return "incomparable";
    }
    return "incomparable";
}

OnTop is_on_top(const Polyline& a, const Polyline& b, double tol)
{
    if (a.empty() || b.empty()) return OnTop::incomparable;
    auto range = [](const Polyline& p) {
        double lo = p.front().x, hi = p.front().x;
        for (const auto& q : p) lo = std::min(lo, q.x), hi = std::max(hi, q.x);
        return std::pair{lo, hi};
    };
    const auto [alo, ahi] = range(a);
    const auto [blo, bhi] = range(b);
    if (std::max(alo, blo) > std::min(ahi, bhi)) return OnTop::incomparable;
    const RotatedGraph ga(a), gb(b);
    for (const auto& q : b)
        if (ga.side(q) > tol) return OnTop::no;
    for (const auto& q : a)
        if (gb.side(q) < -tol) return OnTop::no;
    return OnTop::yes;
}

OnTop is_on_top(const ProfileCurve& a, const ProfileCurve& b, double tol)
{
    return is_on_top(to_polyline(a), to_polyline(b), tol);
}

} // namespace mcflow
