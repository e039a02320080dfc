#include <gtest/gtest.h>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "mcflow/barriers.hpp"
#include "mcflow/errors.hpp"
#include "mcflow/parametric.hpp"

using namespace mcflow;

namespace {

const ShrinkerProfile& torus()
{
    static const ShrinkerProfile p = shoot_angenent_torus(1e-10);
    return p;
}

// Fixed-step RK4 for the shrinker profile, independent of the library integrator.
double rk4_defect(double x0, double h = 1e-4)
{
    double x = x0, y = 0, th = M_PI / 2;
    auto f = [](double X, double Y, double T, double out[3]) {
        out[0] = std::cos(T);
        out[1] = std::sin(T);
        out[2] = 0.5 * (X * std::sin(T) - Y * std::cos(T)) - std::sin(T) / X;
    };
    for (int i = 0; i < 1000000; ++i) {
        double k1[3], k2[3], k3[3], k4[3];
        f(x, y, th, k1);
        f(x + 0.5 * h * k1[0], y + 0.5 * h * k1[1], th + 0.5 * h * k1[2], k2);
        f(x + 0.5 * h * k2[0], y + 0.5 * h * k2[1], th + 0.5 * h * k2[2], k3);
        f(x + h * k3[0], y + h * k3[1], th + h * k3[2], k4);
        const double ny = y + h / 6 * (k1[1] + 2 * k2[1] + 2 * k3[1] + k4[1]);
        const double nx = x + h / 6 * (k1[0] + 2 * k2[0] + 2 * k3[0] + k4[0]);
        const double nt = th + h / 6 * (k1[2] + 2 * k2[2] + 2 * k3[2] + k4[2]);
        if (i > 10 && ny < 0) {
            const double w = y / (y - ny);
            return std::cos(th + w * (nt - th));
        }
        x = nx, y = ny, th = nt;
    }
    return NAN;
}

ProfileCurve rho(double delta, double R, double alpha)
{
    CurveOptions o;
    o.n_neck = 256;
    o.n_outer = 256;
    return build_initial_curve(delta, R, alpha, 0.05 * std::min(delta, R - delta), o);
}

} // namespace

TEST(Catenoid, Evaluation)
{
    EXPECT_DOUBLE_EQ(catenoid_x(1, 0, 0), 1.0);
    EXPECT_NEAR(catenoid_y(1, 0, std::cosh(1.0)), 1.0, 1e-14);
    EXPECT_NEAR(catenoid_x(2, 0.5, 0.5 + 2 * std::acosh(3.0)), 6.0, 1e-12);
    EXPECT_THROW(catenoid_y(1, 0, 0.5), Error);
    const double a = 8.4247;
    EXPECT_NEAR(catenoid_slope(a + 1, a + 2), (a + 1) / std::sqrt(2 * a + 3), 1e-14);
}

TEST(Catenoid, InverseRoundTrip)
{
    for (double c : {0.3, 1.0, 4.0})
        for (double y : {0.0, 0.2, 1.7, 5.0}) EXPECT_NEAR(catenoid_y(c, -0.4, catenoid_x(c, -0.4, y - 0.4)), y - 0.4, 1e-9);
}

TEST(Shrinker, DefectChangesSignAcrossTheRoot)
{
    const auto lo = shooting_defect(0.40), hi = shooting_defect(0.45);
    ASSERT_TRUE(lo.has_value() && hi.has_value());
    EXPECT_LT((*lo) * (*hi), 0.0);
    EXPECT_NEAR(*lo, rk4_defect(0.40), 1e-6);
    EXPECT_THROW(shooting_defect(0.0), Error);
}

TEST(Shrinker, ShootingClosesOrthogonally)
{
    const auto& p = torus();
    EXPECT_LE(p.defect, 1e-8);
    EXPECT_EQ(p.neck.x, 1.1);
    EXPECT_EQ(p.neck.y, 0.0);
    EXPECT_EQ(p.upper.front().x, 1.1);
    EXPECT_GT(p.alpha, 2.0);
    EXPECT_NEAR(std::abs(rk4_defect(p.x0_unit)), 0.0, 1e-6);
}

TEST(Shrinker, FrozenConstants)
{
    const auto& p = torus();
    EXPECT_NEAR(p.x0_unit, 0.43712396709400486, 1e-8);
    EXPECT_NEAR(p.x1_unit, 3.3147, 1e-3);
    EXPECT_NEAR(p.alpha, 8.4247, 1e-3);
    EXPECT_NEAR(p.T_prime, 6.3325, 1e-3);
    EXPECT_DOUBLE_EQ(p.T_prime, p.scale * p.scale);
}

TEST(Shrinker, ProfileInsideOpenBox)
{
    const auto& p = torus();
    for (const auto& q : p.upper) {
        EXPECT_GE(q.x, 1.1 - 1e-12);
        EXPECT_LT(q.x, p.alpha);
        EXPECT_GE(q.y, -1e-12);
        EXPECT_LT(q.y, p.alpha);
    }
    EXPECT_GT(p.upper.front().x, 1.0);
    const auto c = p.closed();
    EXPECT_EQ(c.front().x, c.back().x);
    EXPECT_EQ(c.size(), 2 * p.upper.size() - 1);
}

TEST(Shrinker, SelfSimilarAtHalfLife)
{
    const auto r = torus_self_similarity_check(torus(), 0.5);
    EXPECT_LE(r.max_rel_deviation, 0.02);
    EXPECT_LE(r.area_rel_error, 0.02);
    const auto early = torus_self_similarity_check(torus(), 0.01);
    EXPECT_LT(early.max_rel_deviation, r.max_rel_deviation);
    EXPECT_LT(early.max_rel_deviation, 2e-3);
}

TEST(Shrinker, CacheRoundTripAndDeterminism)
{
    const std::string path = ::testing::TempDir() + "torus_cache.txt";
    write_torus_cache(path, torus());
    const auto q = read_torus_cache(path);
    EXPECT_EQ(q.alpha, torus().alpha);
    EXPECT_EQ(q.T_prime, torus().T_prime);
    ASSERT_EQ(q.upper.size(), torus().upper.size());
    for (std::size_t i = 0; i < q.upper.size(); ++i) EXPECT_EQ(q.upper[i].x, torus().upper[i].x);
    auto slurp = [](const std::string& f) {
        std::ifstream is(f);
        std::stringstream ss;
        ss << is.rdbuf();
        return ss.str();
    };
    const std::string first = slurp(path);
    write_torus_cache(path, shoot_angenent_torus(1e-10));
    EXPECT_EQ(first, slurp(path));
    std::remove(path.c_str());
}

TEST(Sphere, RadiusLaw)
{
    ParametricCurve c;
    const double r0 = 2.0;
    const int n = 201;
    for (int i = 0; i < n; ++i) {
        const double ph = M_PI / 2 * i / (n - 1);
        c.pts.push_back({r0 * std::cos(ph), r0 * std::sin(ph)});
    }
    c.end = ParametricCurve::End::pole;
    ParametricOptions opt;
    opt.cadence = 0.05;
    const auto run = evolve_parametric(c, 0.75, opt);
    for (const auto& s : run.states) {
        const double expect = sphere_radius(r0, s.t);
        for (const auto& q : s.curve.pts) EXPECT_NEAR(std::hypot(q.x, q.y), expect, 1e-3 * r0);
    }
    EXPECT_DOUBLE_EQ(sphere_radius(2, 1), 0.0);
}

TEST(Barrier, Polylines)
{
    const auto pl = barrier_polyline(Barrier::plane(1.5), 10, nullptr, 11);
    ASSERT_EQ(pl.size(), 11u);
    EXPECT_EQ(pl.back().x, 10.0);
    const auto cat = barrier_polyline(Barrier::catenoid(1, 0.5), 10);
    for (const auto& q : cat) EXPECT_NEAR(q.x, std::cosh(q.y - 0.5), 1e-12);
    const auto tor = barrier_polyline(Barrier::torus(1.0), 100, &torus());
    double xmin = 1e9;
    for (const auto& q : tor) xmin = std::min(xmin, q.x);
    EXPECT_NEAR(xmin, torus().x0_unit, 1e-12);
    const auto sph = barrier_polyline(Barrier::sphere({0, 0}, 2), 10);
    for (const auto& q : sph) EXPECT_NEAR(std::hypot(q.x, q.y), 2.0, 1e-12);
    EXPECT_THROW(Barrier::catenoid(0, 0), Error);
    EXPECT_THROW(Barrier::sphere({0, 0}, -1), Error);
}

TEST(Certificate, FamilyExamples)
{
    const auto& p = torus();
    const auto k = barrier_constants(p);
    const auto a = certificate_check(rho(0.9, 10, p.alpha), k, p);
    EXPECT_EQ(a.kind, Certificate::torus_enclosure);
    EXPECT_GT(a.deadline, 0.0);
    const auto b = certificate_check(rho(p.alpha, 10, p.alpha), k, p);
    EXPECT_EQ(b.kind, Certificate::catenoid_on_top);
    EXPECT_GE(b.parameter, 1.0);
    EXPECT_TRUE(catenoid_on_top(rho(p.alpha, 10, p.alpha), 1.0));
    const auto c = certificate_check(rho(1.5, 10, p.alpha), k, p);
    EXPECT_EQ(c.kind, Certificate::none);
}

TEST(Certificate, ReferenceTorusOnly)
{
    const auto& p = torus();
    CertificateOptions o;
    o.scan_scales = false;
    const auto k = barrier_constants(p);
    const auto a = certificate_check(rho(0.9, 10, p.alpha), k, p, o);
    EXPECT_EQ(a.kind, Certificate::torus_enclosure);
    EXPECT_DOUBLE_EQ(a.deadline, p.T_prime);
    EXPECT_FALSE(torus_inside(rho(1.2, 10, p.alpha), p, 1.0));
}

TEST(Certificate, MonotoneInDelta)
{
    const auto& p = torus();
    const auto k = barrier_constants(p);
    bool seen_none = false;
    for (double d = 0.3; d < 3.0; d += 0.1) {
        const bool torus_cert = certificate_check(rho(d, 10, p.alpha), k, p).kind == Certificate::torus_enclosure;
        if (!torus_cert) seen_none = true;
        if (seen_none) EXPECT_FALSE(torus_cert) << "delta " << d;
    }
    EXPECT_TRUE(seen_none);
}

TEST(LGraph, InitialData)
{
    EXPECT_EQ(l_a_initial(2, 0.0), 0.0);
    EXPECT_EQ(l_a_initial(2, 1.0), 0.0);
    EXPECT_EQ(l_a_initial(2, 2.0), 1.0);
    EXPECT_EQ(l_a_initial(2, 9.0), 1.0);
    double prev = 0;
    for (int i = 0; i <= 1000; ++i) {
        const double v = l_a_initial(2, 1.0 + i * 1e-3);
        EXPECT_GE(v, prev);
        prev = v;
    }
    EXPECT_NEAR(l_a_initial(2, 1.5), 0.5, 1e-15);
}
