#include "mcflow/cli_io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <ostream>
#include <sstream>

#include "mcflow/errors.hpp"
#include "mcflow/sturm.hpp"

namespace mcflow {

namespace fs = std::filesystem;

namespace {

constexpr double family_rho = 0.0;
constexpr double family_quarter = 1.0;

fs::path out_dir(const SimConfig& c)
{
    fs::path d(c.out_dir);
    std::error_code ec;
    fs::create_directories(d, ec);
    require(!ec, ErrorKind::io_error, "cannot create output directory " + c.out_dir);
    return d;
}

std::ofstream open_out(const fs::path& p)
{
    std::ofstream f(p);
    require(bool(f), ErrorKind::io_error, "cannot write " + p.string());
    return f;
}

void write_events_csv(std::ostream& os, const Trajectory& tr)
{
    os << "t,kind,detail\n";
    for (const auto& e : tr.events) {
        std::string d = e.detail;
        std::replace(d.begin(), d.end(), ',', ';');
        os << format_double(e.t) << ',' << to_string(e.kind) << ',' << d << '\n';
    }
}

ProfileCurve initial_curve(const SimConfig& c, const std::string& family, double param, double alpha)
{
    const double R = domain_radius(c);
    const auto co = curve_options(c);
    if (family == "rho") {
        require(param > 0 && param < R, ErrorKind::invalid_parameter, "delta must lie in (0, R)");
        return build_initial_curve(param, R, alpha, c.smoothing * std::min(param, R - param), co);
    }
    require(family == "quarter", ErrorKind::invalid_parameter, "unknown family '" + family + "'");
    require(!c.unbounded, ErrorKind::invalid_parameter, "the quarter-circle family needs a bounded domain");
    require(param > 0 && param < R, ErrorKind::invalid_parameter, "neck abscissa must lie in (0, R)");
    return build_quarter_circle_curve(R - param, R, co);
}

void write_run_outputs(const SimConfig& c, const EvolveProgress& p, std::ostream& log)
{
    const auto dir = out_dir(c);
    {
        auto f = open_out(dir / "run.ini");
        write_config(f, c);
    }
    {
        auto f = open_out(dir / "trajectory.csv");
        write_trajectory_csv(f, p.traj);
    }
    {
        auto f = open_out(dir / "events.csv");
        write_events_csv(f, p.traj);
    }
    const auto& prov = p.traj.provenance;
    ManifestRecord rec;
    rec.R = p.state.curve.wall;
    rec.param = prov.count("param") ? prov.at("param") : 0.0;
    rec.outcome = p.outcome;
    {
        auto f = open_out(dir / "manifest.csv");
        write_manifest(f, {rec});
    }
    write_checkpoint((dir / "state.json").string(), p);

    const auto snaps = dir / "snapshots";
    fs::create_directories(snaps);
    for (const auto& old : fs::directory_iterator(snaps)) fs::remove(old.path());
    for (std::size_t k = 0; k < p.traj.states.size(); ++k) {
        const auto& s = p.traj.states[k];
        char name[32];
        std::snprintf(name, sizeof name, "snap_%05zu.csv", k);
        write_snapshot_file((snaps / name).string(), to_polyline(s.curve), s.curve.wall, s.t,
                            {{"neck", s.curve.neck_radius()}, {"height", s.curve.height()}});
    }

    for (const auto& w : check_invariants(p.state.curve, c.chart_tol, false)) log << "warning: " << w << '\n';
    log << "outcome: " << to_string(p.outcome.kind) << " at t = " << format_double(p.outcome.t);
    if (p.outcome.certificate != Certificate::none) log << " (" << to_string(p.outcome.certificate) << ")";
    if (p.outcome.suspected) log << " (suspected)";
    log << '\n';
    if (!p.outcome.detail.empty()) log << "detail: " << p.outcome.detail << '\n';
    log << "steps: " << p.steps << ", recorded states: " << p.traj.states.size() << '\n';
}

int run_progress(const SimConfig& c, EvolveProgress& p, const EvolveOptions& opt, const EvolveRequest& req,
                 std::ostream& log)
{
    const auto dir = out_dir(c);
    const auto ckpt = (dir / "checkpoint.json").string();
    if (req.stop_after > 0) {
        EvolveOptions pause = opt;
        pause.stop_after_steps = req.stop_after;
        continue_evolution(p, pause);
        if (!p.finished) {
            write_checkpoint(ckpt, p);
            auto f = open_out(dir / "run.ini");
            write_config(f, c);
            log << "paused at t = " << format_double(p.state.t) << " after " << p.steps << " steps; checkpoint "
                << ckpt << '\n';
            return exit_ok;
        }
    } else if (req.checkpoint_every > 0) {
        EvolveOptions pause = opt;
        pause.stop_after_steps = req.checkpoint_every;
        while (!p.finished) {
            continue_evolution(p, pause);
            if (!p.finished) write_checkpoint(ckpt, p);
        }
    } else {
        continue_evolution(p, opt);
    }
    write_run_outputs(c, p, log);
    return p.outcome.kind == OutcomeKind::numerical_failure ? exit_failure : exit_ok;
}

struct CsvTable {
    std::vector<std::string> header;
    std::vector<std::vector<double>> rows;
    int column(const std::string& name) const
    {
        const auto it = std::find(header.begin(), header.end(), name);
        return it == header.end() ? -1 : static_cast<int>(it - header.begin());
    }
    std::vector<double> values(const std::string& name) const
    {
        const int k = column(name);
        std::vector<double> out;
        for (const auto& r : rows) out.push_back(k >= 0 && k < int(r.size()) ? r[k] : NAN);
        return out;
    }
};

CsvTable read_csv(const std::string& path)
{
    std::ifstream f(path);
    require(bool(f), ErrorKind::io_error, "cannot read " + path);
    CsvTable t;
    std::string line;
    if (std::getline(f, line)) {
        std::stringstream ss(line);
        std::string cell;
        while (std::getline(ss, cell, ',')) t.header.push_back(cell);
    }
    while (std::getline(f, line)) {
        if (line.empty()) continue;
        std::stringstream ss(line);
        std::string cell;
        std::vector<double> row;
        while (std::getline(ss, cell, ',')) row.push_back(std::strtod(cell.c_str(), nullptr));
        t.rows.push_back(row);
    }
    return t;
}

fs::path plot_dir(const SimConfig& c)
{
    auto d = out_dir(c) / "plots";
    fs::create_directories(d);
    return d;
}

void emit(const SvgPlot& p, const fs::path& path, std::ostream& log)
{
    p.write_file(path.string());
    log << "wrote " << path.string() << '\n';
}

void plot_state(const SimConfig& c, const std::string& input, std::ostream& log)
{
    const auto p = read_checkpoint(input);
    const auto& tr = p.traj;
    const auto stem = fs::path(input).stem().string();
    const auto dir = plot_dir(c);

    SvgPlot prof("profile curves", "x", "y");
    prof.equal_aspect(true);
    std::vector<const FlowState*> pick;
    if (!tr.states.empty()) {
        const std::size_t n = tr.states.size(), m = std::min<std::size_t>(8, n);
        for (std::size_t k = 0; k < m; ++k) pick.push_back(&tr.states[m == 1 ? 0 : k * (n - 1) / (m - 1)]);
    } else {
        pick.push_back(&p.state);
    }
    double top = 0;
    for (const auto* s : pick) {
        const auto pl = to_polyline(s->curve);
        std::vector<double> x, y;
        for (const auto& q : pl) {
            x.push_back(q.x);
            y.push_back(q.y);
            top = std::max(top, q.y);
        }
        prof.add("t = " + format_double(s->t), x, y);
    }
    if (p.state.curve.bounded()) prof.add("wall", {p.state.curve.wall, p.state.curve.wall}, {0.0, top}, true);
    emit(prof, dir / (stem + "-profiles.svg"), log);

    std::vector<double> t, neck, h, area;
    for (const auto& r : tr.rows) {
        t.push_back(r.t);
        neck.push_back(r.neck_x);
        h.push_back(r.height_at_R);
        area.push_back(r.area);
    }
    SvgPlot a("neck radius and wall height", "t", "");
    a.add("neck radius", t, neck);
    a.add("height at the wall", t, h);
    emit(a, dir / (stem + "-series.svg"), log);
    SvgPlot b("area", "t", "area");
    b.add("area", t, area);
    emit(b, dir / (stem + "-area.svg"), log);
}

void plot_csv(const SimConfig& c, const std::string& input, std::ostream& log)
{
    const auto tab = read_csv(input);
    const auto stem = fs::path(input).stem().string();
    const auto dir = plot_dir(c);
    if (tab.column("violation") >= 0) {
        SvgPlot p(stem, "t", "value at the worst point");
        p.add("value", tab.values("t"), tab.values("value"));
        p.add("bound", tab.values("t"), tab.values("bound"), true);
        emit(p, dir / (stem + ".svg"), log);
    } else if (tab.column("neck_x") >= 0) {
        SvgPlot p("neck radius and wall height", "t", "");
        p.add("neck radius", tab.values("t"), tab.values("neck_x"));
        p.add("height at the wall", tab.values("t"), tab.values("height_at_R"));
        emit(p, dir / (stem + ".svg"), log);
    } else if (tab.column("delta_lo") >= 0) {
        SvgPlot p("critical bracket against 1/R", "1/R", "delta");
        std::vector<double> inv, lo, hi;
        for (const auto& r : tab.rows) {
            inv.push_back(1.0 / r[tab.column("R")]);
            lo.push_back(r[tab.column("delta_lo")]);
            hi.push_back(r[tab.column("delta_hi")]);
        }
        p.add("delta_lo", inv, lo);
        p.add("delta_hi", inv, hi, true);
        emit(p, dir / (stem + ".svg"), log);
    } else {
        fail(ErrorKind::invalid_parameter, "unrecognised CSV header in " + input);
    }
}

std::string verdict(const EstimateReport& r)
{
    return r.vacuous ? "pass (vacuous)" : (r.pass ? "pass" : "fail");
}

} // namespace

int exit_code(const Error& e)
{
    return e.kind() == ErrorKind::config_error || e.kind() == ErrorKind::invalid_parameter ? exit_bad_config
                                                                                             : exit_failure;
}

std::string torus_cache_path(const SimConfig& c)
{
    const fs::path p(c.torus_cache);
    return p.is_absolute() ? p.string() : (fs::path(c.out_dir) / p).string();
}

ShrinkerProfile load_torus(const SimConfig& c)
{
    out_dir(c);
    return load_or_shoot_torus(torus_cache_path(c), c.torus_tolerance);
}

int cmd_evolve(const SimConfig& c, const EvolveRequest& req, std::ostream& log)
{
    validate(c);
    const auto torus = load_torus(c);
    const auto initial = initial_curve(c, req.family, req.param, torus.alpha);
    auto opt = evolve_options(c, &torus);
    opt.provenance = {{"family", req.family == "rho" ? family_rho : family_quarter},
                      {"param", req.param},
                      {"alpha", torus.alpha}};
    const double horizon = run_horizon(c, torus);
    log << req.family << " curve, parameter " << format_double(req.param) << ", R = " << format_double(domain_radius(c))
        << ", horizon " << format_double(horizon) << '\n';
    if (c.unbounded)
        log << "far field: clamped at x = " << format_double(initial.x_end()) << " to height "
            << format_double(initial.outer.val.back()) << '\n';
    auto p = start_evolution(initial, horizon, opt);
    return run_progress(c, p, opt, req, log);
}

int cmd_resume(const SimConfig& c, const std::string& checkpoint, const EvolveRequest& req, std::ostream& log)
{
    validate(c);
    auto p = read_checkpoint(checkpoint);
    const auto torus = load_torus(c);
    auto opt = evolve_options(c, &torus);
    opt.provenance = p.traj.provenance;
    if (p.state.curve.wall == unbounded) opt.wall = WallCondition::clamp;
    log << "resuming at t = " << format_double(p.state.t) << " after " << p.steps << " steps\n";
    if (p.finished) {
        write_run_outputs(c, p, log);
        return p.outcome.kind == OutcomeKind::numerical_failure ? exit_failure : exit_ok;
    }
    return run_progress(c, p, opt, req, log);
}

int cmd_find_critical(const SimConfig& c, const FindRequest& req, std::ostream& log)
{
    validate(c);
    require(!c.unbounded, ErrorKind::invalid_parameter, "find-critical needs a bounded domain");
    const auto torus = load_torus(c);
    auto ctx = search_context(c, &torus);
    ctx.certificates_only = req.certificates_only;
    SearchOptions so;
    so.bracket_tol = c.bracket_tol;
    so.horizon = run_horizon(c, torus);
    Family fam;
    if (req.family == "rho")
        fam = rho_family(c.R, ctx);
    else if (req.family == "quarter")
        fam = quarter_circle_family(c.R, ctx);
    else
        fail(ErrorKind::invalid_parameter, "unknown family '" + req.family + "'");
    const auto b = find_critical(fam, c.R, so, ctx);

    const auto dir = out_dir(c);
    {
        auto f = open_out(dir / "bracket.csv");
        write_bracket_csv(f, {b});
    }
    {
        auto f = open_out(dir / "manifest.csv");
        write_manifest(f, b.records);
    }
    log << "family " << b.family << ", R = " << format_double(b.R) << '\n';
    log << "bracket [" << format_double(b.lo) << ", " << format_double(b.hi) << "], width " << format_double(b.width)
        << ", " << b.steps << " steps, horizon " << format_double(b.horizon) << '\n';
    log << "lo: " << to_string(b.lo_witness.kind) << " at t = " << format_double(b.lo_witness.t) << " ("
        << to_string(b.lo_witness.certificate) << ")\n";
    log << "hi: " << to_string(b.hi_witness.kind) << " at t = " << format_double(b.hi_witness.t) << " ("
        << to_string(b.hi_witness.certificate) << ")\n";
    if (!b.standing_hypothesis) log << "note: R <= 2 alpha = " << format_double(2 * torus.alpha) << '\n';
    if (!b.converged) {
        log << "bracket did not reach the tolerance " << format_double(c.bracket_tol) << '\n';
        return exit_failure;
    }
    return exit_ok;
}

int cmd_limit_study(const SimConfig& c, std::ostream& log)
{
    validate(c);
    const auto torus = load_torus(c);
    const auto ctx = search_context(c, &torus);
    SearchOptions so;
    so.bracket_tol = c.bracket_tol;
    so.horizon = run_horizon(c, torus);
    const auto s = limit_study(c.radii, so, ctx);

    const auto dir = out_dir(c);
    {
        auto f = open_out(dir / "limit_study.csv");
        write_bracket_csv(f, s.brackets);
    }
    {
        std::vector<ManifestRecord> all;
        for (const auto& b : s.brackets) all.insert(all.end(), b.records.begin(), b.records.end());
        auto f = open_out(dir / "manifest.csv");
        write_manifest(f, all);
    }
    std::ostringstream sum;
    for (const auto& b : s.brackets)
        sum << "R = " << format_double(b.R) << ": [" << format_double(b.lo) << ", " << format_double(b.hi) << "]\n";
    sum << "eta = " << format_double(s.eta) << " +- " << format_double(s.eta_uncertainty) << '\n';
    sum << "monotone: " << (s.monotone ? "yes" : "no") << '\n';
    for (const auto& l : s.monotonicity_report) sum << "  " << l << '\n';
    {
        auto f = open_out(dir / "limit_study.txt");
        f << sum.str();
    }
    log << sum.str();
    return exit_ok;
}

int cmd_shoot_torus(const SimConfig& c, bool self_similarity, std::ostream& log)
{
    validate(c);
    out_dir(c);
    const auto p = shoot_angenent_torus(c.torus_tolerance);
    const auto path = torus_cache_path(c);
    write_torus_cache(path, p);
    log << "x0 (unit) = " << format_double(p.x0_unit) << ", x1 (unit) = " << format_double(p.x1_unit) << '\n';
    log << "defect = " << format_double(p.defect) << '\n';
    log << "scale = " << format_double(p.scale) << ", neck = (" << format_double(p.neck.x) << ", "
        << format_double(p.neck.y) << ")\n";
    log << "alpha = " << format_double(p.alpha) << ", T' = " << format_double(p.T_prime) << '\n';
    if (self_similarity) {
        const auto r = torus_self_similarity_check(p, 0.5);
        log << "self-similarity at t = " << format_double(r.t) << ": max deviation "
            << format_double(r.max_rel_deviation) << ", area ratio " << format_double(r.area_ratio) << " (expected "
            << format_double(r.area_expected) << ")\n";
    }
    log << "cache " << path << '\n';
    return exit_ok;
}

int cmd_barrier_lab(const SimConfig& c, const BarrierRequest& req, std::ostream& log)
{
    validate(c);
    const auto torus = load_torus(c);
    const double R = domain_radius(c);
    const double x_max = std::isfinite(R) ? R : (c.x_max > 0 ? c.x_max : 40.0);
    const auto dir = out_dir(c);

    Barrier b;
    if (req.kind == "plane") {
        b = Barrier::plane(req.height);
    } else if (req.kind == "catenoid") {
        b = Barrier::catenoid(req.c, req.xi);
    } else if (req.kind == "torus") {
        b = Barrier::torus(req.lambda);
    } else if (req.kind == "sphere") {
        b = Barrier::sphere({req.center_x, req.center_y}, req.radius);
    } else if (req.kind == "la") {
        require(std::isfinite(R), ErrorKind::invalid_parameter, "the L_a barrier needs a bounded domain");
        require(req.a > 0 && req.a < R, ErrorKind::invalid_parameter, "a must lie in (0, R)");
        const int n = c.n_outer;
        std::vector<double> x(n), v(n);
        for (int i = 0; i < n; ++i) {
            x[i] = R * i / (n - 1);
            v[i] = l_a_initial(req.a, x[i]);
        }
        const auto run = evolve_graph_on_disk(x, v, req.horizon, c.cadence);
        auto f = open_out(dir / "la_series.csv");
        f << "t,height_at_R\n";
        for (std::size_t k = 0; k < run.times.size(); ++k)
            f << format_double(run.times[k]) << ',' << format_double(run.height_at_R[k]) << '\n';
        b.kind = Barrier::Kind::lgraph;
        b.a = req.a;
        for (int i = 0; i < n; ++i) b.lgraph.push_back({x[i], run.states.empty() ? v[i] : run.states.back()[i]});
        log << "L_a graph evolved to t = " << format_double(req.horizon) << ", min slope "
            << format_double(run.min_slope) << ", beta " << format_double(run.beta) << '\n';
    } else {
        fail(ErrorKind::invalid_parameter, "unknown barrier kind '" + req.kind + "'");
    }

    const auto poly = barrier_polyline(b, x_max, &torus);
    {
        auto f = open_out(dir / "barrier.csv");
        f << "x,y\n";
        for (const auto& q : poly) f << format_double(q.x) << ',' << format_double(q.y) << '\n';
    }
    SvgPlot plot(b.name(), "x", "y");
    plot.equal_aspect(true);
    {
        std::vector<double> x, y;
        for (const auto& q : poly) x.push_back(q.x), y.push_back(q.y);
        plot.add(b.name(), x, y);
    }
    log << b.name() << ": " << poly.size() << " points\n";

    if (req.delta > 0) {
        const auto curve = initial_curve(c, "rho", req.delta, torus.alpha);
        const auto pl = to_polyline(curve);
        std::vector<double> x, y;
        for (const auto& q : pl) x.push_back(q.x), y.push_back(q.y);
        plot.add("rho, delta = " + format_double(req.delta), x, y);
        const auto ir = count_intersections(pl, poly, c.tangency_tol);
        log << "intersections with rho: " << (ir.identical ? "identical" : std::to_string(ir.count)) << ", tangencies "
            << ir.tangencies.size() << '\n';
        for (const auto& q : ir.locations) log << "  at (" << format_double(q.x) << ", " << format_double(q.y) << ")\n";
        log << "barrier on top of rho: " << to_string(is_on_top(poly, pl, c.tangency_tol)) << '\n';
        const auto cert = certificate_check(curve, barrier_constants(torus), torus);
        log << "certificate: " << to_string(cert.kind);
        if (cert.kind != Certificate::none) log << " (parameter " << format_double(cert.parameter) << ")";
        log << '\n';
    }
    emit(plot, dir / "barrier.svg", log);
    return exit_ok;
}

int cmd_verify(const SimConfig& c, const VerifyRequest& req, std::ostream& log)
{
    validate(c);
    const auto torus = load_torus(c);
    const double alpha = torus.alpha;
    const auto p = read_checkpoint(req.state);
    const auto& tr = p.traj;
    require(!tr.states.empty(), ErrorKind::invalid_parameter, "the state file holds no recorded states");
    const auto dir = out_dir(c) / "verify";
    fs::create_directories(dir);

    auto wanted = [&](const std::string& id) {
        return req.only.empty() || std::find(req.only.begin(), req.only.end(), id) != req.only.end();
    };
    std::vector<std::pair<std::string, std::string>> summary;
    bool all_pass = true;
    auto record = [&](const EstimateReport& r) {
        auto f = open_out(dir / (r.id + ".txt"));
        write_report_text(f, r);
        auto g = open_out(dir / (r.id + ".csv"));
        write_report_csv(g, r);
        summary.push_back({r.id, verdict(r) + ", max violation " + format_double(r.max_violation)});
        all_pass = all_pass && r.pass;
    };
    auto error = [&](const std::string& id, const Error& e) {
        summary.push_back({id, std::string("error: ") + e.what()});
        all_pass = false;
    };
    auto line = [&](const std::string& id, bool ok, const std::string& text) {
        summary.push_back({id, (ok ? "pass, " : "fail, ") + text});
        all_pass = all_pass && ok;
    };

    if (wanted("uniform-catenoid-gradient")) record(check_uniform_catenoid_gradient(tr, alpha, req.rel_tol));
    if (wanted("arctan-gradient-decay")) {
        try {
            const auto r = check_arctan_gradient_decay(tr, req.a, req.b, req.c, req.k, alpha, req.rel_tol);
            record(r.estimate);
            const auto& o = r.oscillation;
            line("arctan-oscillation", o.decreasing && o.final_value < 1e-2,
                 std::string(o.decreasing ? "decreasing" : "not decreasing") + ", final " + format_double(o.final_value));
        } catch (const Error& e) {
            error("arctan-gradient-decay", e);
        }
    }
    if (wanted("neck-gradient")) {
        try {
            const auto r = check_neck_vertical_gradient(tr, req.t0, req.t1, alpha, req.rel_tol);
            record(r.upper);
            record(r.lower);
        } catch (const Error& e) {
            error("neck-gradient", e);
        }
    }
    if (wanted("height-neck-coupling")) record(check_height_neck_coupling(tr, req.kappa, alpha));
    if (wanted("energy")) {
        const auto e = energy_budget(tr, alpha);
        line("energy-identity", e.identity_pass,
             "relative residual " + format_double(e.relative_residual) + ", area " + format_double(e.area0) + " -> " +
                 format_double(e.area_end));
        record(e.boundary_sign);
        auto f = open_out(dir / "energy_windows.csv");
        f << "t_start,h2_mass\n";
        for (std::size_t k = 0; k < e.window_start.size(); ++k)
            f << format_double(e.window_start[k]) << ',' << format_double(e.window_mass[k]) << '\n';
    }
    if (wanted("multiplicity-two")) {
        try {
            const double K = std::min(req.K, tr.states.front().curve.bounded() ? tr.states.front().curve.wall : req.K);
            const auto m = detect_multiplicity_two(tr, K, req.eps);
            line("multiplicity-two", m.reached && m.persists,
                 m.reached ? "reached at t = " + format_double(m.t_eps) + (m.persists ? ", persists" : ", lost")
                           : std::string("not reached"));
        } catch (const Error& e) {
            error("multiplicity-two", e);
        }
    }
    if (wanted("asymptotic-plane") && !tr.states.front().curve.bounded()) {
        try {
            record(asymptotic_plane_check(tr, req.eps).estimate);
        } catch (const Error& e) {
            error("asymptotic-plane", e);
        }
    }

    std::ostringstream sum;
    for (const auto& [id, text] : summary) sum << id << ": " << text << '\n';
    {
        auto f = open_out(dir / "summary.txt");
        f << sum.str();
    }
    log << sum.str();
    return all_pass ? exit_ok : exit_reports_failed;
}

int cmd_plot(const SimConfig& c, const std::vector<std::string>& inputs, std::ostream& log)
{
    require(!inputs.empty(), ErrorKind::invalid_parameter, "plot needs at least one input file");
    for (const auto& in : inputs) {
        const auto ext = fs::path(in).extension().string();
        if (ext == ".json")
            plot_state(c, in, log);
        else if (ext == ".csv")
            plot_csv(c, in, log);
        else
            fail(ErrorKind::invalid_parameter, "cannot plot " + in);
    }
    return exit_ok;
}

} // namespace mcflow
