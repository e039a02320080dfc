#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "mcflow/cli_io.hpp"
#include "mcflow/errors.hpp"

using namespace mcflow;

namespace {

struct Overrides {
    std::string config;
    std::optional<std::string> out;
    std::optional<double> R;
    bool unbounded = false;
    std::optional<double> horizon;
    std::optional<double> tol;
    std::optional<int> n;
};

SimConfig effective(const Overrides& o)
{
    SimConfig c = o.config.empty() ? SimConfig{} : load_config(o.config);
    if (o.out) c.out_dir = *o.out;
    if (o.R) c.R = *o.R;
    if (o.unbounded) c.unbounded = true;
    if (o.horizon) c.horizon = *o.horizon;
    if (o.tol) c.bracket_tol = *o.tol;
    if (o.n) c.n_neck = c.n_outer = *o.n;
    validate(c);
    return c;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Rotationally symmetric mean curvature flow in a cylinder"};
    app.require_subcommand(1);
    Overrides ov;
    app.add_option("--config", ov.config, "sectioned key = value configuration file")->check(CLI::ExistingFile);
    app.add_option("--out", ov.out, "output directory");
    app.add_option("--R", ov.R, "cylinder radius");
    app.add_flag("--unbounded", ov.unbounded, "no wall; far field clamped at x_max");
    app.add_option("--horizon", ov.horizon, "final time (0: three torus extinction times)");
    app.add_option("--n", ov.n, "nodes per chart");
    bool dump = false;
    app.add_flag("--dump-config", dump, "print the effective configuration before running");

    EvolveRequest ev;
    auto* evolve = app.add_subcommand("evolve", "evolve one initial curve");
    evolve->add_option("--delta", ev.param, "leg position (rho family) or neck abscissa (quarter family)")->required();
    evolve->add_option("--family", ev.family, "rho or quarter")->check(CLI::IsMember({"rho", "quarter"}));
    evolve->add_option("--checkpoint-every", ev.checkpoint_every, "steps between checkpoints");
    evolve->add_option("--stop-after", ev.stop_after, "pause after this many steps");

    std::string ckpt;
    EvolveRequest rs;
    auto* resume = app.add_subcommand("resume", "continue from a checkpoint");
    resume->add_option("checkpoint", ckpt, "checkpoint.json")->required()->check(CLI::ExistingFile);
    resume->add_option("--checkpoint-every", rs.checkpoint_every, "steps between checkpoints");
    resume->add_option("--stop-after", rs.stop_after, "pause after this many steps");

    FindRequest fr;
    auto* find = app.add_subcommand("find-critical", "bisect the family parameter for the pinch threshold");
    find->add_option("--tol", ov.tol, "bracket width");
    find->add_option("--family", fr.family, "rho or quarter")->check(CLI::IsMember({"rho", "quarter"}));
    find->add_flag("--certificates-only", fr.certificates_only, "decide by barrier certificates alone");

    auto* limit = app.add_subcommand("limit-study", "critical brackets over the configured radii");
    limit->add_option("--tol", ov.tol, "bracket width");

    bool self_sim = false;
    auto* shoot = app.add_subcommand("shoot-torus", "shoot the shrinking torus and write the cache");
    shoot->add_flag("--self-similarity", self_sim, "also evolve the torus and compare with the scaling law");

    BarrierRequest br;
    auto* lab = app.add_subcommand("barrier-lab", "sample a barrier and compare it with a rho curve");
    lab->add_option("--kind", br.kind, "plane, catenoid, torus, sphere or la")
        ->check(CLI::IsMember({"plane", "catenoid", "torus", "sphere", "la"}));
    lab->add_option("--height", br.height, "plane height");
    lab->add_option("--c", br.c, "catenoid neck");
    lab->add_option("--xi", br.xi, "catenoid shift");
    lab->add_option("--lambda", br.lambda, "torus scale");
    lab->add_option("--center-x", br.center_x, "sphere centre");
    lab->add_option("--center-y", br.center_y, "sphere centre");
    lab->add_option("--radius", br.radius, "sphere radius");
    lab->add_option("--a", br.a, "L_a parameter");
    lab->add_option("--time", br.horizon, "L_a evolution time");
    lab->add_option("--delta", br.delta, "compare with rho_{delta,R}");

    VerifyRequest vr;
    bool all = false;
    auto* verify = app.add_subcommand("verify", "run the estimate checks on a recorded trajectory");
    verify->add_option("state", vr.state, "state.json or checkpoint.json")->required()->check(CLI::ExistingFile);
    verify->add_flag("--all", all, "every report (the default)");
    verify->add_option("--only", vr.only, "report ids");
    verify->add_option("--a", vr.a);
    verify->add_option("--b", vr.b);
    verify->add_option("--c", vr.c);
    verify->add_option("--k", vr.k);
    verify->add_option("--K", vr.K, "outer radius of the multiplicity annulus");
    verify->add_option("--eps", vr.eps);
    verify->add_option("--kappa", vr.kappa);
    verify->add_option("--t0", vr.t0, "neck gradient window start");
    verify->add_option("--t1", vr.t1, "neck gradient window end");
    verify->add_option("--rel-tol", vr.rel_tol);

    std::vector<std::string> inputs;
    auto* plot = app.add_subcommand("plot", "render SVG plots");
    plot->add_option("inputs", inputs, "state.json, trajectory.csv, report or bracket CSV files")
        ->required()
        ->check(CLI::ExistingFile);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? exit_ok : exit_bad_config;
    }

    try {
        if (*resume) {
            const auto dir = std::filesystem::path(ckpt).parent_path();
            if (ov.config.empty() && std::filesystem::exists(dir / "run.ini")) ov.config = (dir / "run.ini").string();
            if (!ov.out) ov.out = dir.empty() ? "." : dir.string();
        }
        const SimConfig c = effective(ov);
        if (dump) write_config(std::cout, c);
        if (all) vr.only.clear();
        if (*evolve) return cmd_evolve(c, ev, std::cout);
        if (*resume) return cmd_resume(c, ckpt, rs, std::cout);
        if (*find) return cmd_find_critical(c, fr, std::cout);
        if (*limit) return cmd_limit_study(c, std::cout);
        if (*shoot) return cmd_shoot_torus(c, self_sim, std::cout);
        if (*lab) return cmd_barrier_lab(c, br, std::cout);
        if (*verify) return cmd_verify(c, vr, std::cout);
        if (*plot) return cmd_plot(c, inputs, std::cout);
    } catch (const Error& e) {
        std::cerr << e.what() << '\n';
        return exit_code(e);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_failure;
    }
    return exit_failure;
}
