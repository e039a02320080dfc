#include <gtest/gtest.h>

#include <sstream>

#include "mcflow/critical_search.hpp"
#include "mcflow/errors.hpp"

using namespace mcflow;

namespace {

const ShrinkerProfile& torus()
{
    static const ShrinkerProfile p = shoot_angenent_torus(1e-10);
    return p;
}

SearchContext context()
{
    SearchContext c;
    c.torus = &torus();
    return c;
}

ManifestRecord record(double param, OutcomeKind k)
{
    ManifestRecord r;
    r.R = 10;
    r.param = param;
    r.outcome.kind = k;
    return r;
}

} // namespace

TEST(Classify, ThinLegPinchesWithTorusCertificate)
{
    const auto c = classify(0.5, 10, default_horizon(torus()), Epsilons{}, context());
    EXPECT_EQ(c.outcome.kind, OutcomeKind::neck_pinch);
    EXPECT_EQ(c.outcome.certificate, Certificate::torus_enclosure);
    EXPECT_LT(c.outcome.t, torus().T_prime);
    EXPECT_FALSE(c.outcome.suspected);
}

TEST(Classify, AlphaLegHeldByCatenoid)
{
    const auto c = classify(torus().alpha, 10, default_horizon(torus()), Epsilons{}, context());
    EXPECT_EQ(c.outcome.kind, OutcomeKind::survived_horizon);
    EXPECT_EQ(c.outcome.certificate, Certificate::catenoid_on_top);
    EXPECT_GE(c.outcome.certificate_parameter, 1.0);
}

TEST(Classify, ShortHorizonIsUndecided)
{
    const auto c = classify(1.5, 10, 0.1, Epsilons{}, context());
    EXPECT_EQ(c.outcome.kind, OutcomeKind::survived_horizon);
    EXPECT_EQ(c.outcome.certificate, Certificate::none);
    EXPECT_NEAR(c.outcome.t, 0.1, 1e-12);
}

TEST(Classify, CertificatesOnlyNeverEvolves)
{
    auto ctx = context();
    ctx.certificates_only = true;
    const auto c = classify(2.5, 10, 10.0, Epsilons{}, ctx);
    EXPECT_FALSE(c.decided);
    EXPECT_EQ(c.traj.rows.size(), 1u);
}

TEST(Classify, RejectsDeltaOutsideTheCylinder)
{
    EXPECT_THROW(classify(10.0, 10, 1.0, Epsilons{}, context()), Error);
    EXPECT_THROW(classify(0.0, 10, 1.0, Epsilons{}, context()), Error);
}

TEST(FindCritical, CertificateOnlyBracketIsCoarse)
{
    auto ctx = context();
    ctx.certificates_only = true;
    SearchOptions o;
    const auto b = find_critical(10, o, ctx);
    EXPECT_FALSE(b.converged);
    EXPECT_LE(b.lo, 1.0 + 1e-12);
    EXPECT_GT(b.hi, 1.0);
    EXPECT_LE(b.hi, torus().alpha + 1e-12);
    EXPECT_EQ(b.lo_witness.certificate, Certificate::torus_enclosure);
    EXPECT_EQ(b.hi_witness.certificate, Certificate::catenoid_on_top);
}

TEST(FindCritical, BracketIsValidAndReproducible)
{
    SearchOptions o;
    o.bracket_tol = 0.05;
    const auto a = find_critical(10, o, context());
    const auto b = find_critical(10, o, context());
    EXPECT_TRUE(a.converged);
    EXPECT_LE(a.width, 0.05);
    EXPECT_GT(a.midpoint(), 1.0);
    EXPECT_LE(a.midpoint(), torus().alpha);
    EXPECT_EQ(a.lo, b.lo);
    EXPECT_EQ(a.hi, b.hi);
    EXPECT_EQ(a.lo_witness.kind, OutcomeKind::neck_pinch);
    EXPECT_NE(a.hi_witness.kind, OutcomeKind::neck_pinch);
    EXPECT_FALSE(a.standing_hypothesis);
    EXPECT_TRUE(foliation_violations(a.records).empty());
}

TEST(FindCritical, QuarterCircleFamily)
{
    SearchOptions o;
    o.bracket_tol = 0.1;
    const auto ctx = context();
    const auto b = find_critical(quarter_circle_family(10, ctx), 10, o, ctx);
    EXPECT_TRUE(b.converged);
    EXPECT_EQ(b.family, "quarter-circle");
    EXPECT_LT(b.lo, b.hi);
    EXPECT_GT(b.lo, 0.0);
    EXPECT_LT(b.hi, 10.0);
}

TEST(FindCritical, FoliationViolationsArePaired)
{
    const std::vector<ManifestRecord> ok = {record(1, OutcomeKind::neck_pinch), record(2, OutcomeKind::survived_horizon),
                                            record(3, OutcomeKind::boundary_collapse)};
    EXPECT_TRUE(foliation_violations(ok).empty());
    auto bad = ok;
    bad.push_back(record(2.5, OutcomeKind::neck_pinch));
    const auto v = foliation_violations(bad);
    ASSERT_EQ(v.size(), 1u);
    EXPECT_EQ(v[0].first.param, 2.0);
    EXPECT_EQ(v[0].second.param, 2.5);
}

TEST(LimitStudy, SingleRadiusDegenerates)
{
    auto ctx = context();
    ctx.certificates_only = true;
    const auto s = limit_study({10}, SearchOptions{}, ctx);
    ASSERT_EQ(s.brackets.size(), 1u);
    EXPECT_EQ(s.eta, s.brackets[0].midpoint());
    EXPECT_EQ(s.eta_uncertainty, s.brackets[0].width);
    EXPECT_TRUE(s.monotone);
}

TEST(LimitStudy, RejectsUnsortedRadii)
{
    EXPECT_THROW(limit_study({12, 10}, SearchOptions{}, context()), Error);
}

TEST(NeckOrdering, IdenticalTrajectoriesAreEqual)
{
    auto ctx = context();
    const auto c = classify(2.0, 10, 1.0, Epsilons{}, ctx);
    const auto r = neck_ordering_check(c.traj, c.traj, 1e-12);
    EXPECT_TRUE(r.pass);
    EXPECT_EQ(r.max_violation, 0.0);
    EXPECT_EQ(r.compared, static_cast<int>(c.traj.rows.size()));
}

TEST(NeckOrdering, ReportsViolations)
{
    Trajectory a, b;
    for (int k = 0; k < 5; ++k) {
        TrajectoryRow r;
        r.t = k;
        r.neck_x = 1.0;
        a.rows.push_back(r);
        r.neck_x = k < 3 ? 2.0 : 0.5;
        b.rows.push_back(r);
    }
    const auto r = neck_ordering_check(a, b, 0.1);
    EXPECT_FALSE(r.pass);
    EXPECT_EQ(r.violations.size(), 2u);
    EXPECT_NEAR(r.max_violation, 0.5, 1e-12);
}

TEST(Output, ManifestAndBracketHeaders)
{
    CriticalBracket b;
    b.R = 10;
    b.lo = 2;
    b.hi = 3;
    b.width = 1;
    b.horizon = 5;
    b.records.push_back(record(2, OutcomeKind::neck_pinch));
    std::ostringstream m, c;
    write_manifest(m, b.records);
    write_bracket_csv(c, {b});
    EXPECT_EQ(m.str().substr(0, m.str().find('\n')), "R,param,outcome,t_event,certificate,suspected,decided");
    EXPECT_EQ(c.str(), "R,delta_lo,delta_hi,width,horizon\n10,2,3,1,5\n");
}
