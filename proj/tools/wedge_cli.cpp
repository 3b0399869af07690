#include <chrono>
#include <cmath>
#include <ctime>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <memory>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "wedge/config.hpp"
#include "wedge/contour.hpp"
#include "wedge/kernel.hpp"
#include "wedge/solver.hpp"
#include "wedge/verify.hpp"

using namespace wedge;

namespace {

enum Exit { kOk = 0, kConfig = 1, kNumerical = 2, kVerification = 3 };

std::string utc_timestamp() {
    std::time_t t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&t, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

std::ofstream open_out(const std::string& path) {
    std::ofstream f(path);
    if (!f) throw ParseError("cannot write '" + path + "'", 0, "out");
    return f;
}

nlohmann::ordered_json cj(cplx z) { return nlohmann::ordered_json::array({z.real(), z.imag()}); }

int cmd_field(const RunConfig& c, const std::string& out) {
    KernelEngine E1(c.params, c.params.k1, c.tolerances);
    KernelEngine E2(c.params, c.params.k2, c.tolerances);
    auto samples = grid_eval(c.grid, E1, &E2);
    auto f = open_out(out);
    write_field_csv(f, samples, c.params, utc_timestamp());
    int bad = 0;
    for (const auto& s : samples)
        if (!s.error.empty()) {
            if (bad++ < 5) std::cerr << "rho=" << s.point.rho << " theta=" << s.point.theta << ": " << s.error << '\n';
        }
    std::cout << samples.size() << " points written to " << out << '\n';
    if (bad) {
        std::cerr << bad << " grid points failed\n";
        return kNumerical;
    }
    return kOk;
}

int cmd_verify(const RunConfig& c, const std::string& out) {
    VerificationReport r = run_full_suite(c.params, c.seed, c.tolerances);
    auto f = open_out(out);
    write_report_json(f, r, utc_timestamp());
    print_report_table(std::cout, r);
    return r.overall ? kOk : kVerification;
}

int cmd_kernel_dump(const RunConfig& c, const std::string& out, int n) {
    KernelEngine E(c.params, c.params.k1, c.tolerances);
    const double W = 12.0;
    auto beta = beta_hat_polyline(c.params, W, n);
    auto f = open_out(out);
    f << "curve,re_w,im_w,re_G2,im_G2,re_v11,im_v11,re_v1,im_v1\n" << std::setprecision(17);
    auto row = [&](const char* tag, cplx w) {
        cplx g2, v11, v1;
        try {
            g2 = E.G2_hat(w);
            v11 = E.v11_hat(w);
            v1 = E.v1_hat(w);
        } catch (const PoleError&) {
            g2 = v11 = v1 = cplx(NAN, NAN);
        }
        f << tag << ',' << w.real() << ',' << w.imag() << ',' << g2.real() << ',' << g2.imag() << ',' << v11.real()
          << ',' << v11.imag() << ',' << v1.real() << ',' << v1.imag() << '\n';
    };
    for (const auto& nd : beta.nodes) row("beta", nd.w);
    for (int j = 0; j < n; ++j) row("gamma_-pi/2", gamma_point(c.params.omega, -0.5 * kPi, -W + 2.0 * W * j / (n - 1)));

    nlohmann::ordered_json j;
    j["kind"] = E.kind() == KernelKind::Elementary ? "elementary" : "cauchy_built";
    j["p1"] = cj(E.branch().p1);
    j["r1"] = cj(E.branch().r1);
    j["r2"] = cj(E.branch().r2);
    j["C"] = cj(E.const_C());
    j["C2"] = cj(E.const_C2());
    j["switch_width"] = E.switch_width();
    auto poles = nlohmann::ordered_json::array();
    for (const auto& p : E.pole_list()) poles.push_back({{"label", p.label}, {"w", cj(p.w)}});
    j["poles"] = poles;
    auto jf = open_out(out + ".json");
    jf << j.dump(2) << '\n';
    std::cout << "kernel samples written to " << out << ", branch data to " << out << ".json\n";
    return kOk;
}

int cmd_decompose(const RunConfig& c, const std::string& out, double rho, int n) {
    KernelEngine E(c.params, c.params.k1, c.tolerances);
    GridSpec g = c.grid;
    g.n_theta = n;
    auto thetas = grid_thetas(g, c.params.phi);
    auto f = open_out(out);
    f << "theta,re_up,im_up,re_ud,im_ud,re_u1,im_u1,method\n" << std::setprecision(17);
    for (double th : thetas) {
        const bool ray = std::abs(th - 1.5 * kPi) < 1e-12;
        Decomposition d = decompose(E, {rho, th}, {}, ray);
        cplx u1 = u1_field(E, {rho, th}).value;
        f << th << ',' << d.u_p.real() << ',' << d.u_p.imag() << ',' << d.u_d.real() << ',' << d.u_d.imag() << ','
          << u1.real() << ',' << u1.imag() << ',' << to_string(d.method) << '\n';
    }
    std::cout << thetas.size() << " angles written to " << out << '\n';
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Sommerfeld-integral solver for the Helmholtz equation in a nonconvex wedge"};
    app.require_subcommand(1);
    std::string cfg_path;
    app.add_option("-c,--config", cfg_path, "key = value configuration file")->check(CLI::ExistingFile);

    std::string out;
    auto* field = app.add_subcommand("field", "evaluate U = u1 + u2 on the configured grid");
    field->add_option("-o,--out", out, "CSV path (default: out_field)");

    auto* verify = app.add_subcommand("verify", "run the verification suite");
    verify->add_option("-o,--out", out, "JSON report path (default: out_report)");
    long long seed = -1;
    verify->add_option("--seed", seed, "override the configured seed");

    auto* kdump = app.add_subcommand("kernel-dump", "sample G2, v11 and v1 along beta and Gamma_{-pi/2}");
    kdump->add_option("-o,--out", out, "CSV path (default: out_kernel)");
    int n_dump = 201;
    kdump->add_option("-n,--samples", n_dump, "samples per curve")->check(CLI::Range(2, 100000));

    auto* dec = app.add_subcommand("decompose", "u_p, u_d and u1 for a theta sweep at fixed rho");
    double rho = 1.0;
    int n_dec = 41;
    dec->add_option("--rho", rho, "radius")->check(CLI::PositiveNumber);
    dec->add_option("-n,--n-theta", n_dec, "number of angles")->check(CLI::Range(1, 100000));
    dec->add_option("-o,--out", out, "CSV path (default: decompose.csv)");

    for (auto* s : {field, verify, kdump, dec})
        s->add_option("-c,--config", cfg_path, "key = value configuration file")->check(CLI::ExistingFile);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? kOk : kConfig;
    }

    RunConfig cfg;
    try {
        cfg = cfg_path.empty() ? parse_config("") : load_config(cfg_path);
        if (seed >= 0) cfg.seed = uint64_t(seed);
    } catch (const ParseError& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return kConfig;
    } catch (const DomainError& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return kConfig;
    }

    try {
        if (*field) return cmd_field(cfg, out.empty() ? cfg.out_field : out);
        if (*verify) return cmd_verify(cfg, out.empty() ? cfg.out_report : out);
        if (*kdump) return cmd_kernel_dump(cfg, out.empty() ? cfg.out_kernel : out, n_dump);
        if (*dec) return cmd_decompose(cfg, out.empty() ? "decompose.csv" : out, rho, n_dec);
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kConfig;
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kConfig;
    } catch (const std::exception& e) {
        std::cerr << "numerical failure: " << e.what() << '\n';
        return kNumerical;
    }
    return kOk;
}
