#include <gtest/gtest.h>

#include <cmath>
#include <sstream>

#include "mcflow/diagnostics.hpp"
#include "mcflow/errors.hpp"

using namespace mcflow;

namespace {

const ShrinkerProfile& torus()
{
    static const ShrinkerProfile p = shoot_angenent_torus(1e-10);
    return p;
}

ProfileCurve cylinder(double r, double h, int n)
{
    ProfileCurve k;
    k.neck.grid = Grid::uniform(0.0, h, n);
    k.neck.val.assign(n, r);
    return k;
}

ProfileCurve flat(double C, double a, double R, int n)
{
    ProfileCurve k;
    k.wall = R;
    k.outer.grid = Grid::logarithmic(a, R, n);
    k.outer.val.assign(n, C);
    return k;
}

ProfileCurve catenoid(double c, double R, int n)
{
    ProfileCurve k;
    k.wall = R;
    k.neck.grid = Grid::uniform(0.0, c * std::asinh(2.0), n);
    k.outer.grid = Grid::logarithmic(c * std::sqrt(5.0), R, n);
    for (int i = 0; i < n; ++i) k.neck.val.push_back(c * std::cosh(k.neck.at(i) / c));
    for (int j = 0; j < n; ++j) k.outer.val.push_back(c * std::acosh(k.outer.at(j) / c));
    return k;
}

ProfileCurve rho(double delta, double R)
{
    return build_initial_curve(delta, R, torus().alpha, 0.05 * std::min(delta, R - delta));
}

Trajectory still(const ProfileCurve& c)
{
    Trajectory t;
    t.states.push_back({0.0, c, {}});
    return t;
}

} // namespace

TEST(EstimateReport, KeepsWorstSamplePerTime)
{
    EstimateReport r;
    r.tolerance = 0.1;
    r.consider({0.0, 1.0, 0, 0, -0.5});
    r.consider({0.0, 2.0, 0, 0, 0.05});
    r.consider({1.0, 3.0, 0, 0, -1.0});
    r.finish();
    ASSERT_EQ(r.samples.size(), 2u);
    EXPECT_EQ(r.samples[0].x, 2.0);
    EXPECT_EQ(r.max_violation, 0.05);
    EXPECT_EQ(r.x_at_max, 2.0);
    EXPECT_TRUE(r.pass);
    EXPECT_FALSE(r.vacuous);
}

TEST(EstimateReport, EmptyDomainIsVacuous)
{
    EstimateReport r;
    r.finish();
    EXPECT_TRUE(r.vacuous);
    EXPECT_TRUE(r.pass);
    EXPECT_FALSE(r.notes.empty());
}

TEST(EstimateReport, TextCsvAndPlot)
{
    EstimateReport r;
    r.id = "demo";
    r.consider({0.5, 1.0, 2.0, 3.0, -1.0});
    r.finish();
    std::ostringstream t, c;
    write_report_text(t, r);
    write_report_csv(c, r);
    EXPECT_NE(t.str().find("result: pass"), std::string::npos);
    EXPECT_EQ(c.str(), "t,x,value,bound,violation\n0.5,1,2,3,-1\n");
    EXPECT_FALSE(report_plot(r).empty());
}

TEST(GraphSamples, TwoChartCurveCoversNeckToWall)
{
    const auto s = graph_samples(catenoid(1.0, 10, 64));
    ASSERT_FALSE(s.empty());
    EXPECT_DOUBLE_EQ(s.front().x, 1.0);
    EXPECT_EQ(s.front().y, 0.0);
    EXPECT_EQ(s.front().dxdy, 0.0);
    EXPECT_DOUBLE_EQ(s.back().x, 10.0);
    for (std::size_t k = 1; k < s.size(); ++k) EXPECT_GE(s[k].y, s[k - 1].y);
    for (const auto& g : s)
        if (g.x > 3) EXPECT_NEAR(g.dydx, 1.0 / std::sqrt(g.x * g.x - 1), 2e-3);
}

TEST(CatenoidGradient, BoundAtInnerEdge)
{
    const double a = 3.0;
    EXPECT_DOUBLE_EQ(catenoid_gradient_bound(a, a + 2), (a + 1) / std::sqrt(2 * a + 3));
    EXPECT_THROW(catenoid_gradient_bound(a, a + 1), Error);
}

TEST(CatenoidGradient, PlaneAndNarrowCatenoidPass)
{
    EXPECT_TRUE(check_uniform_catenoid_gradient(still(flat(1.0, 0.1, 40, 128)), 1.0).pass);
    const auto r = check_uniform_catenoid_gradient(still(catenoid(1.0, 40, 128)), 1.0);
    EXPECT_TRUE(r.pass);
    EXPECT_FALSE(r.vacuous);
    EXPECT_LT(r.max_violation, 0.0);
}

TEST(CatenoidGradient, WideCatenoidFails)
{
    const auto r = check_uniform_catenoid_gradient(still(catenoid(4.0, 40, 128)), 1.0);
    EXPECT_FALSE(r.pass);
    EXPECT_GT(r.max_violation, 0.05);
}

TEST(CatenoidGradient, EmptyDomainWhenWallIsClose)
{
    const auto r = check_uniform_catenoid_gradient(still(flat(1.0, 0.1, 10, 64)), 8.4);
    EXPECT_TRUE(r.vacuous);
    EXPECT_TRUE(r.pass);
}

TEST(Arctan, LimitBoundMatchesCotangentForm)
{
    const double a = 0.5, b = 1.0, k = 1e6, alpha = 1.0, c = alpha + 1;
    const double expect = 1.0 / std::tan(M_PI / 2 * std::log(b / a) / std::log(k / a) - std::asin(c / k));
    EXPECT_NEAR(arctan_limit_bound(a, b, k, alpha), expect, 1e-9 * expect);
}

TEST(Arctan, SideConditionOnK)
{
    EXPECT_FALSE(k_condition(0.5, 1, 2, 40));
    EXPECT_TRUE(k_condition(0.5, 1, 200, 1));
    EXPECT_FALSE(k_condition(0.5, 1, 1.5, 1));
}

TEST(Arctan, UnboundedRunRejectsFailingK)
{
    const auto c = build_initial_curve(2.6, unbounded, torus().alpha, 0.13);
    try {
        check_arctan_gradient_decay(still(c), 0.5, 1, 2, 40, torus().alpha);
        FAIL() << "expected invalid-parameter";
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::invalid_parameter);
    }
}

TEST(Arctan, BoundedRunUsesWallRadius)
{
    auto r = check_arctan_gradient_decay(still(flat(0.2, 0.1, 10, 64)), 0.5, 1, 2, 0, 1.0);
    EXPECT_EQ(r.estimate.parameters.at("k_or_R"), 10.0);
    EXPECT_NEAR(r.estimate.parameters.at("mu"), M_PI / 2 / std::log(20.0), 1e-12);
    EXPECT_NEAR(r.estimate.parameters.at("T_prime"), 10 * (10 + M_PI / 2), 1e-9);
    EXPECT_TRUE(r.estimate.vacuous);
    ASSERT_EQ(r.oscillation.osc.size(), 1u);
    EXPECT_NEAR(r.oscillation.final_value, 0.0, 1e-12);
    EXPECT_THROW(check_arctan_gradient_decay(still(flat(0.2, 0.1, 10, 64)), 0.5, 11, 12, 0, 1.0), Error);
}

TEST(NeckGradient, BoundFormulas)
{
    EXPECT_DOUBLE_EQ(neck_upper_bound(2.0, 0.5, 0.0), 8.0);
    EXPECT_DOUBLE_EQ(neck_upper_bound(2.0, 0.5, 0.25), 8.0 * std::exp(1.0));
    const double lambda = M_PI / 2, a = 1;
    EXPECT_DOUBLE_EQ(neck_lower_bound(0.3, lambda, a, a + 1, 0.0), 0.3);
    EXPECT_NEAR(neck_lower_bound(0.3, lambda, a, a + 1, 2.0), 0.3 * std::exp(-lambda * lambda * 2), 1e-15);
}

TEST(NeckGradient, CylinderPassesBothSides)
{
    Trajectory t = still(cylinder(2.0, 1.0, 32));
    t.states.push_back({0.5, cylinder(1.9, 1.0, 32), {}});
    const auto r = check_neck_vertical_gradient(t, 0.0, 0.5, 1.0);
    EXPECT_TRUE(r.upper.pass);
    EXPECT_TRUE(r.lower.pass);
    EXPECT_DOUBLE_EQ(r.mu, 1.9);
    EXPECT_DOUBLE_EQ(r.h, 1.0);
    EXPECT_DOUBLE_EQ(r.a, 0.5);
}

TEST(NeckGradient, PinchInsideWindowIsRejected)
{
    Trajectory t = still(cylinder(2.0, 1.0, 32));
    t.events.push_back({0.4, EventKind::pinch, ""});
    try {
        check_neck_vertical_gradient(t, 0.0, 0.5, 1.0);
        FAIL() << "expected window-invalid";
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::window_invalid);
    }
}

TEST(HeightNeck, InitialLegHeightAndCoupling)
{
    const double alpha = torus().alpha;
    for (double delta : {2.0, 4.0}) {
        const auto c = rho(delta, 10);
        EXPECT_NEAR(c.height(), alpha / delta, 1e-9);
        EXPECT_TRUE(check_height_neck_coupling(still(c), 1.0, alpha).pass);
    }
}

TEST(HeightNeck, WideNeckFails)
{
    EXPECT_FALSE(check_height_neck_coupling(still(rho(9.0, 10)), 1.0, torus().alpha).pass);
}

TEST(Energy, IdentityHoldsOnShortRun)
{
    EvolveOptions o;
    o.scheme = Scheme::imex;
    o.c_cfl = 8;
    const auto r = evolve(rho(2.0, 10), 1.0, o);
    const auto e = energy_budget(r.traj, torus().alpha);
    EXPECT_LT(e.relative_residual, 0.01);
    EXPECT_TRUE(e.identity_pass);
    EXPECT_EQ(e.boundary_total, 0.0);
    EXPECT_GT(e.h2_total, 0.0);
    EXPECT_TRUE(e.boundary_sign.vacuous);
    ASSERT_EQ(e.window_mass.size(), 1u);
    EXPECT_NEAR(e.window_mass[0], e.h2_total, 1e-9 * e.h2_total);
}

TEST(Multiplicity, PlanePairDetectedImmediately)
{
    const auto r = detect_multiplicity_two(still(flat(0.025, 1e-3, 10, 64)), 2.0, 0.05);
    EXPECT_TRUE(r.reached);
    EXPECT_EQ(r.t_eps, 0.0);
    EXPECT_TRUE(r.persists);
}

TEST(Multiplicity, AlphaLegNotReached)
{
    const auto r = detect_multiplicity_two(still(rho(torus().alpha, 10)), 2.0, 0.05);
    EXPECT_FALSE(r.reached);
    EXPECT_THROW(detect_multiplicity_two(still(rho(2.0, 10)), 11.0, 0.05), Error);
}

TEST(FarField, AvoidanceRadiusClosesTheGap)
{
    for (double eps : {0.5, 0.1, 0.01}) {
        EXPECT_LE(sphere_gap(avoidance_radius(eps)), eps / 2 * (1 + 1e-12));
        EXPECT_GT(sphere_gap(0.99 * avoidance_radius(eps)), eps / 2);
        EXPECT_GT(sphere_gap(quadratic_radius(eps)), eps / 2);
    }
    EXPECT_NEAR(sphere_gap(2.0), 2.0, 1e-15);
}

TEST(FarField, PlaneStaysOnPlane)
{
    auto c = flat(1.0, 1e-2, 200, 128);
    c.wall = unbounded;
    const auto r = asymptotic_plane_check(still(c), 0.5);
    EXPECT_DOUBLE_EQ(r.plane, 1.0);
    EXPECT_DOUBLE_EQ(r.R_prime, 1e-2);
    EXPECT_DOUBLE_EQ(r.R_eps, r.r + r.R_prime);
    EXPECT_FALSE(r.estimate.vacuous);
    EXPECT_TRUE(r.estimate.pass);
    EXPECT_THROW(asymptotic_plane_check(still(flat(1.0, 1e-2, 10, 64)), 0.5), Error);
}
