#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "mcflow/cli_io.hpp"

using namespace mcflow;
namespace fs = std::filesystem;

namespace {

std::string slurp(const fs::path& p)
{
    std::ifstream f(p, std::ios::binary);
    std::stringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

SimConfig in_dir(const std::string& name)
{
    SimConfig c;
    c.out_dir = (fs::path(::testing::TempDir()) / ("mcflow_cli_" + name)).string();
    fs::remove_all(c.out_dir);
    return c;
}

std::string error_of(const std::string& text)
{
    std::istringstream is(text);
    try {
        parse_config(is);
    } catch (const Error& e) {
        EXPECT_EQ(exit_code(e), exit_bad_config);
        return e.what();
    }
    return "";
}

std::string full_config()
{
    std::ostringstream os;
    write_config(os, SimConfig{});
    return os.str();
}

std::string without_line(const std::string& text, const std::string& key)
{
    std::istringstream is(text);
    std::string line, out;
    while (std::getline(is, line))
        if (line.rfind(key + " =", 0) != 0) out += line + '\n';
    return out;
}

} // namespace

TEST(Config, RoundTrip)
{
    SimConfig c;
    c.R = 12.5;
    c.unbounded = true;
    c.radii = {8, 12, 16};
    c.scheme = "explicit";
    std::ostringstream os;
    write_config(os, c);
    std::istringstream is(os.str());
    const auto d = parse_config(is);
    EXPECT_EQ(d.R, 12.5);
    EXPECT_TRUE(d.unbounded);
    EXPECT_EQ(d.radii, c.radii);
    EXPECT_EQ(d.scheme, "explicit");
    std::ostringstream again;
    write_config(again, d);
    EXPECT_EQ(again.str(), os.str());
}

TEST(Config, EveryKeyIsWritten)
{
    const auto text = full_config();
    for (const auto& k : config_keys()) {
        const auto key = k.substr(k.find('.') + 1);
        EXPECT_NE(text.find('\n' + key + " = "), std::string::npos) << k;
    }
}

TEST(Config, MissingKeyIsNamed)
{
    EXPECT_NE(error_of(without_line(full_config(), "c_cfl")).find("'time.c_cfl'"), std::string::npos);
    EXPECT_NE(error_of(without_line(full_config(), "radii")).find("'search.radii'"), std::string::npos);
}

TEST(Config, RejectsBadValues)
{
    auto replace = [](std::string s, const std::string& from, const std::string& to) {
        s.replace(s.find(from), from.size(), to);
        return s;
    };
    const auto text = full_config();
    EXPECT_NE(error_of(replace(text, "n_neck = 128", "n_neck = 32")).find("grid.n_neck"), std::string::npos);
    EXPECT_NE(error_of(replace(text, "eps_wall = 0.01", "eps_wall = -1")).find("tolerances.eps_wall"),
              std::string::npos);
    EXPECT_NE(error_of(replace(text, "tangency_tol = 1.0000000000000001e-09", "tangency_tol = 0")).find("tangency_tol"),
              std::string::npos);
    EXPECT_NE(error_of(replace(text, "c_cfl = 8", "c_cfl = fast")).find("time.c_cfl"), std::string::npos);
    EXPECT_NE(error_of(text + "[extra]\nkey = 1\n").find("extra.key"), std::string::npos);
    EXPECT_NE(error_of(replace(text, "radii = 8,12,16", "radii = 12,8")).find("search.radii"), std::string::npos);
}

TEST(Commands, EvolveThinLegPinches)
{
    const auto c = in_dir("evolve");
    EvolveRequest r;
    r.param = 0.5;
    std::ostringstream log;
    EXPECT_EQ(cmd_evolve(c, r, log), exit_ok);
    const auto manifest = slurp(fs::path(c.out_dir) / "manifest.csv");
    EXPECT_NE(manifest.find(",NeckPinch,"), std::string::npos);
    for (const char* f : {"run.ini", "trajectory.csv", "events.csv", "state.json"})
        EXPECT_TRUE(fs::exists(fs::path(c.out_dir) / f)) << f;
    EXPECT_FALSE(fs::is_empty(fs::path(c.out_dir) / "snapshots"));
    std::ifstream ini(fs::path(c.out_dir) / "run.ini");
    EXPECT_EQ(parse_config(ini).out_dir, c.out_dir);
}

TEST(Commands, ResumeIsByteIdentical)
{
    auto a = in_dir("full");
    auto b = in_dir("part");
    a.horizon = b.horizon = 0.5;
    EvolveRequest r;
    r.param = 1.5;
    std::ostringstream log;
    ASSERT_EQ(cmd_evolve(a, r, log), exit_ok);
    r.stop_after = 250;
    ASSERT_EQ(cmd_evolve(b, r, log), exit_ok);
    ASSERT_TRUE(fs::exists(fs::path(b.out_dir) / "checkpoint.json"));
    ASSERT_FALSE(fs::exists(fs::path(b.out_dir) / "trajectory.csv"));
    EvolveRequest go;
    go.checkpoint_every = 100;
    ASSERT_EQ(cmd_resume(b, (fs::path(b.out_dir) / "checkpoint.json").string(), go, log), exit_ok);
    EXPECT_EQ(slurp(fs::path(a.out_dir) / "trajectory.csv"), slurp(fs::path(b.out_dir) / "trajectory.csv"));
    EXPECT_EQ(slurp(fs::path(a.out_dir) / "state.json"), slurp(fs::path(b.out_dir) / "state.json"));
}

TEST(Commands, ShootTorusIsDeterministic)
{
    const auto a = in_dir("torus_a");
    const auto b = in_dir("torus_b");
    std::ostringstream log;
    ASSERT_EQ(cmd_shoot_torus(a, false, log), exit_ok);
    ASSERT_EQ(cmd_shoot_torus(b, false, log), exit_ok);
    const auto x = slurp(torus_cache_path(a));
    EXPECT_FALSE(x.empty());
    EXPECT_EQ(x, slurp(torus_cache_path(b)));
    EXPECT_NE(log.str().find("alpha = "), std::string::npos);
}

TEST(Commands, BadArgumentsMapToConfigExit)
{
    const auto c = in_dir("bad");
    EvolveRequest r;
    r.param = 12;
    std::ostringstream log;
    try {
        cmd_evolve(c, r, log);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(exit_code(e), exit_bad_config);
    }
    EXPECT_EQ(exit_code(Error(ErrorKind::numerical_failure, "x")), exit_failure);
}

TEST(Commands, VerifyAndPlotWriteEveryReport)
{
    auto c = in_dir("verify");
    c.horizon = 1.0;
    EvolveRequest r;
    r.param = 2.0;
    std::ostringstream log;
    ASSERT_EQ(cmd_evolve(c, r, log), exit_ok);
    const auto state = (fs::path(c.out_dir) / "state.json").string();
    VerifyRequest v;
    v.state = state;
    v.t1 = 0.5;
    const int code = cmd_verify(c, v, log);
    EXPECT_TRUE(code == exit_ok || code == exit_reports_failed);
    const auto summary = slurp(fs::path(c.out_dir) / "verify" / "summary.txt");
    for (const char* id : {"uniform-catenoid-gradient", "arctan-gradient-decay", "neck-gradient-upper",
                           "neck-gradient-lower", "height-neck-coupling", "energy-identity",
                           "boundary-mean-curvature-sign", "multiplicity-two"})
        EXPECT_NE(summary.find(id), std::string::npos) << id;

    ASSERT_EQ(cmd_plot(c, {state, (fs::path(c.out_dir) / "verify" / "height-neck-coupling.csv").string()}, log),
              exit_ok);
    const auto svg = slurp(fs::path(c.out_dir) / "plots" / "state-profiles.svg");
    EXPECT_EQ(svg.rfind("<svg", 0), 0u);
    EXPECT_TRUE(fs::exists(fs::path(c.out_dir) / "plots" / "height-neck-coupling.svg"));
}

TEST(Commands, BarrierLabComparesWithRho)
{
    const auto c = in_dir("lab");
    BarrierRequest b;
    b.kind = "catenoid";
    b.c = 1.0;
    b.delta = 4.0;
    std::ostringstream log;
    EXPECT_EQ(cmd_barrier_lab(c, b, log), exit_ok);
    EXPECT_NE(log.str().find("intersections with rho: 1"), std::string::npos);
    EXPECT_TRUE(fs::exists(fs::path(c.out_dir) / "barrier.svg"));
}
