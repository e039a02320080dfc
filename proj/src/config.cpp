#include "mcflow/config.hpp"

#include <algorithm>
#include <fstream>
#include <ostream>
#include <set>
#include <sstream>

#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>

#include "mcflow/errors.hpp"

namespace mcflow {

namespace {

namespace pt = boost::property_tree;

const std::vector<std::pair<std::string, std::vector<std::string>>> schema = {
    {"grid", {"n_neck", "n_outer", "slope_threshold"}},
    {"time", {"scheme", "c_cfl", "c_react", "horizon", "cadence"}},
    {"tolerances", {"chart_tol", "eps_pinch", "eps_wall", "tangency_tol", "bracket_tol"}},
    {"domain", {"R", "unbounded", "x_max"}},
    {"initial", {"smoothing"}},
    {"search", {"certificate_interval", "radii"}},
    {"torus", {"tolerance", "cache"}},
    {"output", {"dir"}},
};

std::string trim(const std::string& s)
{
    const auto a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    return s.substr(a, s.find_last_not_of(" \t\r") - a + 1);
}

double to_number(const std::string& key, const std::string& text)
{
    const std::string s = trim(text);
    std::size_t used = 0;
    double v = 0;
    try {
        v = std::stod(s, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (s.empty() || used != s.size()) fail(ErrorKind::config_error, "config key '" + key + "' must be a number, got '" + s + "'");
    return v;
}

int to_int(const std::string& key, const std::string& text)
{
    const double v = to_number(key, text);
    if (v != static_cast<int>(v)) fail(ErrorKind::config_error, "config key '" + key + "' must be an integer");
    return static_cast<int>(v);
}

bool to_bool(const std::string& key, const std::string& text)
{
    const std::string s = trim(text);
    if (s == "true" || s == "1" || s == "yes") return true;
    if (s == "false" || s == "0" || s == "no") return false;
    fail(ErrorKind::config_error, "config key '" + key + "' must be true or false");
}

std::vector<double> to_list(const std::string& key, const std::string& text)
{
    std::vector<double> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(to_number(key, item));
    return out;
}

void check(bool ok, const std::string& key, const std::string& what)
{
    if (!ok) fail(ErrorKind::config_error, "config key '" + key + "' " + what);
}

} // namespace

std::vector<std::string> config_keys()
{
    std::vector<std::string> out;
    for (const auto& [section, keys] : schema)
        for (const auto& k : keys) out.push_back(section + "." + k);
    return out;
}

SimConfig parse_config(std::istream& is)
{
    pt::ptree tree;
    try {
        pt::read_ini(is, tree);
    } catch (const pt::ini_parser_error& e) {
        fail(ErrorKind::config_error, std::string("malformed config: ") + e.message() + " at line " +
                                          std::to_string(e.line()));
    }
    const auto keys = config_keys();
    const std::set<std::string> known(keys.begin(), keys.end());
    for (const auto& [section, body] : tree) {
        if (body.empty()) fail(ErrorKind::config_error, "config key '" + section + "' lies outside any section");
        for (const auto& kv : body)
            if (!known.count(section + "." + kv.first))
                fail(ErrorKind::config_error, "unknown config key '" + section + "." + kv.first + "'");
    }
    auto get = [&](const std::string& key) {
        const auto v = tree.get_optional<std::string>(pt::ptree::path_type(key, '.'));
        if (!v) fail(ErrorKind::config_error, "missing config key '" + key + "'");
        return *v;
    };

    SimConfig c;
    c.n_neck = to_int("grid.n_neck", get("grid.n_neck"));
    c.n_outer = to_int("grid.n_outer", get("grid.n_outer"));
    c.slope_threshold = to_number("grid.slope_threshold", get("grid.slope_threshold"));
    c.scheme = trim(get("time.scheme"));
    c.c_cfl = to_number("time.c_cfl", get("time.c_cfl"));
    c.c_react = to_number("time.c_react", get("time.c_react"));
    c.horizon = to_number("time.horizon", get("time.horizon"));
    c.cadence = to_number("time.cadence", get("time.cadence"));
    c.chart_tol = to_number("tolerances.chart_tol", get("tolerances.chart_tol"));
    c.eps_pinch = to_number("tolerances.eps_pinch", get("tolerances.eps_pinch"));
    c.eps_wall = to_number("tolerances.eps_wall", get("tolerances.eps_wall"));
    c.tangency_tol = to_number("tolerances.tangency_tol", get("tolerances.tangency_tol"));
    c.bracket_tol = to_number("tolerances.bracket_tol", get("tolerances.bracket_tol"));
    c.R = to_number("domain.R", get("domain.R"));
    c.unbounded = to_bool("domain.unbounded", get("domain.unbounded"));
    c.x_max = to_number("domain.x_max", get("domain.x_max"));
    c.smoothing = to_number("initial.smoothing", get("initial.smoothing"));
    c.certificate_interval = to_number("search.certificate_interval", get("search.certificate_interval"));
    c.radii = to_list("search.radii", get("search.radii"));
    c.torus_tolerance = to_number("torus.tolerance", get("torus.tolerance"));
    c.torus_cache = trim(get("torus.cache"));
    c.out_dir = trim(get("output.dir"));
    validate(c);
    return c;
}

SimConfig load_config(const std::string& path)
{
    std::ifstream is(path);
    if (!is) fail(ErrorKind::config_error, "cannot read config file " + path);
    return parse_config(is);
}

void validate(const SimConfig& c)
{
    check(c.n_neck >= 64, "grid.n_neck", "must be at least 64");
    check(c.n_outer >= 64, "grid.n_outer", "must be at least 64");
    check(c.slope_threshold > 0, "grid.slope_threshold", "must be positive");
    check(c.scheme == "imex" || c.scheme == "explicit", "time.scheme", "must be imex or explicit");
    check(c.c_cfl > 0, "time.c_cfl", "must be positive");
    check(c.c_react > 0, "time.c_react", "must be positive");
    check(c.horizon >= 0, "time.horizon", "must be nonnegative");
    check(c.cadence > 0, "time.cadence", "must be positive");
    check(c.chart_tol > 0, "tolerances.chart_tol", "must be positive");
    check(c.eps_pinch > 0 && c.eps_pinch < 1, "tolerances.eps_pinch", "must lie in (0, 1)");
    check(c.eps_wall > 0 && c.eps_wall < 1, "tolerances.eps_wall", "must lie in (0, 1)");
    check(c.tangency_tol > 0, "tolerances.tangency_tol", "must be positive");
    check(c.bracket_tol > 0, "tolerances.bracket_tol", "must be positive");
    check(c.unbounded || c.R > 0, "domain.R", "must be positive");
    check(c.x_max >= 0, "domain.x_max", "must be nonnegative");
    check(c.smoothing >= 0 && c.smoothing < 0.5, "initial.smoothing", "must lie in [0, 0.5)");
    check(c.certificate_interval >= 0, "search.certificate_interval", "must be nonnegative");
    check(!c.radii.empty(), "search.radii", "must list at least one radius");
    for (std::size_t k = 0; k < c.radii.size(); ++k)
        check(c.radii[k] > 0 && (k == 0 || c.radii[k] > c.radii[k - 1]), "search.radii",
              "must be positive and increasing");
    check(c.torus_tolerance > 0, "torus.tolerance", "must be positive");
    check(!c.torus_cache.empty(), "torus.cache", "must not be empty");
    check(!c.out_dir.empty(), "output.dir", "must not be empty");
}

void write_config(std::ostream& os, const SimConfig& c)
{
    std::string radii;
    for (double r : c.radii) radii += (radii.empty() ? "" : ",") + format_double(r);
    os << "[grid]\n"
       << "n_neck = " << c.n_neck << '\n'
       << "n_outer = " << c.n_outer << '\n'
       << "slope_threshold = " << format_double(c.slope_threshold) << "\n\n"
       << "[time]\n"
       << "scheme = " << c.scheme << '\n'
       << "c_cfl = " << format_double(c.c_cfl) << '\n'
       << "c_react = " << format_double(c.c_react) << '\n'
       << "horizon = " << format_double(c.horizon) << '\n'
       << "cadence = " << format_double(c.cadence) << "\n\n"
       << "[tolerances]\n"
       << "chart_tol = " << format_double(c.chart_tol) << '\n'
       << "eps_pinch = " << format_double(c.eps_pinch) << '\n'
       << "eps_wall = " << format_double(c.eps_wall) << '\n'
       << "tangency_tol = " << format_double(c.tangency_tol) << '\n'
       << "bracket_tol = " << format_double(c.bracket_tol) << "\n\n"
       << "[domain]\n"
       << "R = " << format_double(c.R) << '\n'
       << "unbounded = " << (c.unbounded ? "true" : "false") << '\n'
       << "x_max = " << format_double(c.x_max) << "\n\n"
       << "[initial]\n"
       << "smoothing = " << format_double(c.smoothing) << "\n\n"
       << "[search]\n"
       << "certificate_interval = " << format_double(c.certificate_interval) << '\n'
       << "radii = " << radii << "\n\n"
       << "[torus]\n"
       << "tolerance = " << format_double(c.torus_tolerance) << '\n'
       << "cache = " << c.torus_cache << "\n\n"
       << "[output]\n"
       << "dir = " << c.out_dir << '\n';
}

double domain_radius(const SimConfig& c) { return c.unbounded ? unbounded : c.R; }

CurveOptions curve_options(const SimConfig& c)
{
    CurveOptions o;
    o.n_neck = c.n_neck;
    o.n_outer = c.n_outer;
    o.slope_threshold = c.slope_threshold;
    o.x_max = c.x_max;
    return o;
}

EvolveOptions evolve_options(const SimConfig& c, const ShrinkerProfile* torus)
{
    EvolveOptions o;
    o.scheme = c.scheme == "imex" ? Scheme::imex : Scheme::explicit_euler;
    o.c_cfl = c.c_cfl;
    o.c_react = c.c_react;
    o.slope_threshold = c.slope_threshold;
    o.cadence = c.cadence;
    o.eps.pinch_fraction = c.eps_pinch;
    o.eps.wall_fraction = c.eps_wall;
    o.torus = torus;
    if (torus) o.constants = barrier_constants(*torus);
    return o;
}

SearchContext search_context(const SimConfig& c, const ShrinkerProfile* torus)
{
    SearchContext ctx;
    ctx.torus = torus;
    ctx.evolve = evolve_options(c, torus);
    ctx.evolve.keep_states = false;
    ctx.curve = curve_options(c);
    ctx.smoothing = c.smoothing;
    ctx.certificate_interval = c.certificate_interval;
    return ctx;
}

double run_horizon(const SimConfig& c, const ShrinkerProfile& torus)
{
    return c.horizon > 0 ? c.horizon : default_horizon(torus);
}

} // namespace mcflow
