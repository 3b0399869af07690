#include "wedge/config.hpp"

#include <charconv>
#include <fstream>
#include <functional>
#include <map>
#include <set>
#include <sstream>

namespace wedge {

namespace {

std::string trim(const std::string& s) {
    const char* ws = " \t\r\n";
    auto a = s.find_first_not_of(ws);
    if (a == std::string::npos) return "";
    auto b = s.find_last_not_of(ws);
    return s.substr(a, b - a + 1);
}

double to_double(const std::string& v, int line, const std::string& key) {
    std::istringstream is(v);
    is.imbue(std::locale::classic());
    double x;
    if (!(is >> x) || !(is >> std::ws).eof())
        throw ParseError("line " + std::to_string(line) + ": key '" + key + "' expects a number, got '" + v + "'",
                         line, key);
    return x;
}

long long to_int(const std::string& v, int line, const std::string& key) {
    long long x = 0;
    auto [p, ec] = std::from_chars(v.data(), v.data() + v.size(), x);
    if (ec != std::errc() || p != v.data() + v.size())
        throw ParseError("line " + std::to_string(line) + ": key '" + key + "' expects an integer, got '" + v + "'",
                         line, key);
    return x;
}

bool to_bool(const std::string& v, int line, const std::string& key) {
    if (v == "1" || v == "true") return true;
    if (v == "0" || v == "false") return false;
    throw ParseError("line " + std::to_string(line) + ": key '" + key + "' expects true/false", line, key);
}

}  // namespace

RunConfig parse_config(const std::string& text) {
    RunConfig c;
    double om_re = c.params.omega.real(), om_im = c.params.omega.imag();
    using Setter = std::function<void(const std::string&, int, const std::string&)>;
    const std::map<std::string, Setter> keys = {
        {"omega_re", [&](auto& v, int l, auto& k) { om_re = to_double(v, l, k); }},
        {"omega_im", [&](auto& v, int l, auto& k) { om_im = to_double(v, l, k); }},
        {"phi", [&](auto& v, int l, auto& k) { c.params.phi = to_double(v, l, k); }},
        {"k1", [&](auto& v, int l, auto& k) { c.params.k1 = to_double(v, l, k); }},
        {"k2", [&](auto& v, int l, auto& k) { c.params.k2 = to_double(v, l, k); }},
        {"rho_min", [&](auto& v, int l, auto& k) { c.grid.rho_min = to_double(v, l, k); }},
        {"rho_max", [&](auto& v, int l, auto& k) { c.grid.rho_max = to_double(v, l, k); }},
        {"n_rho", [&](auto& v, int l, auto& k) { c.grid.n_rho = int(to_int(v, l, k)); }},
        {"log_rho", [&](auto& v, int l, auto& k) { c.grid.log_rho = to_bool(v, l, k); }},
        {"theta_min", [&](auto& v, int l, auto& k) { c.grid.theta_min = to_double(v, l, k); }},
        {"theta_max", [&](auto& v, int l, auto& k) { c.grid.theta_max = to_double(v, l, k); }},
        {"n_theta", [&](auto& v, int l, auto& k) { c.grid.n_theta = int(to_int(v, l, k)); }},
        {"seed", [&](auto& v, int l, auto& k) { c.seed = uint64_t(to_int(v, l, k)); }},
        {"quad_rel", [&](auto& v, int l, auto& k) { c.tolerances.quad_rel = to_double(v, l, k); }},
        {"id_tol", [&](auto& v, int l, auto& k) { c.tolerances.id_tol = to_double(v, l, k); }},
        {"pole_clearance", [&](auto& v, int l, auto& k) { c.tolerances.pole_clearance = to_double(v, l, k); }},
        {"out_field", [&](auto& v, int, auto&) { c.out_field = v; }},
        {"out_report", [&](auto& v, int, auto&) { c.out_report = v; }},
        {"out_kernel", [&](auto& v, int, auto&) { c.out_kernel = v; }},
    };

    std::set<std::string> seen;
    std::istringstream in(text);
    std::string raw;
    int line = 0;
    while (std::getline(in, raw)) {
        ++line;
        std::string s = raw.substr(0, raw.find('#'));
        s = trim(s);
        if (s.empty()) continue;
        auto eq = s.find('=');
        if (eq == std::string::npos)
            throw ParseError("line " + std::to_string(line) + ": expected key = value", line, s);
        std::string key = trim(s.substr(0, eq)), val = trim(s.substr(eq + 1));
        auto it = keys.find(key);
        if (it == keys.end())
            throw ParseError("line " + std::to_string(line) + ": unknown key '" + key + "'", line, key);
        if (!seen.insert(key).second)
            throw ParseError("line " + std::to_string(line) + ": duplicate key '" + key + "'", line, key);
        if (val.empty())
            throw ParseError("line " + std::to_string(line) + ": key '" + key + "' has no value", line, key);
        it->second(val, line, key);
    }

    c.params.omega = cplx(om_re, om_im);
    validate_params(c.params);
    validate_tolerances(c.tolerances);
    const auto& g = c.grid;
    if (!(g.rho_min > 0.0) || !(g.rho_max >= g.rho_min)) throw DomainError("grid: need 0 < rho_min <= rho_max");
    if (g.n_rho < 1 || g.n_theta < 1) throw DomainError("grid: n_rho and n_theta must be positive");
    if (!(g.theta_min == 0.0 && g.theta_max == 0.0)) {
        if (!(g.theta_max >= g.theta_min) || !in_wedge(g.theta_min, c.params.phi) ||
            !in_wedge(g.theta_max, c.params.phi))
            throw DomainError("grid: theta range must lie inside the wedge [2 pi - phi, 2 pi]");
    }
    return c;
}

RunConfig load_config(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw ParseError("cannot open config file '" + path + "'", 0, "");
    std::ostringstream ss;
    ss << f.rdbuf();
    return parse_config(ss.str());
}

}  // namespace wedge
