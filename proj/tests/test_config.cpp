#include <catch_amalgamated.hpp>

#include "wedge/config.hpp"
#include "wedge/kernel.hpp"

using namespace wedge;

TEST_CASE("minimal config fills defaults and selects the elementary branch") {
    RunConfig c = parse_config("omega_im=1\nphi=4.7123889803846899\nk1=1\nk2=1\n");
    CHECK(c.params.omega == cplx(0.0, 1.0));
    CHECK(c.grid.n_rho == 10);
    CHECK(c.grid.n_theta == 10);
    CHECK(c.tolerances.id_tol == 1e-6);
    CHECK(c.tolerances.pole_clearance == 1e-3);
    KernelEngine E(c.params, c.params.k1, c.tolerances);
    CHECK(E.kind() == KernelKind::Elementary);
}

TEST_CASE("phi at or below pi is a domain error") {
    CHECK_THROWS_AS(parse_config("phi=3.0\n"), DomainError);
    CHECK_THROWS_AS(parse_config("phi=6.5\n"), DomainError);
}

TEST_CASE("unknown key names the key and the line") {
    try {
        parse_config("phi = 4.5\n\n  # comment\nfrequency = 2\n");
        FAIL("no exception");
    } catch (const ParseError& e) {
        CHECK(e.key == "frequency");
        CHECK(e.line == 4);
        CHECK(std::string(e.what()).find("frequency") != std::string::npos);
    }
}

TEST_CASE("malformed values and duplicates") {
    CHECK_THROWS_AS(parse_config("k1 = one\n"), ParseError);
    CHECK_THROWS_AS(parse_config("n_rho = 2.5\n"), ParseError);
    CHECK_THROWS_AS(parse_config("k1 = 1\nk1 = 2\n"), ParseError);
    CHECK_THROWS_AS(parse_config("k1\n"), ParseError);
    CHECK_THROWS_AS(parse_config("k1 =\n"), ParseError);
    CHECK_THROWS_AS(parse_config("omega_im = -1\n"), DomainError);
    CHECK_THROWS_AS(parse_config("rho_min = 2\nrho_max = 1\n"), DomainError);
    CHECK_THROWS_AS(parse_config("theta_min = 1\ntheta_max = 2\n"), DomainError);
}

TEST_CASE("comments, whitespace and every key") {
    RunConfig c = parse_config(
        "omega_re = 0.5   # trailing comment\n"
        "omega_im = 1\n"
        "phi = 5.497787143782138\n"
        "k1 = 1.5\n k2 = 0.75\n"
        "rho_min = 0.25\nrho_max = 4\nn_rho = 3\nlog_rho = true\n"
        "theta_min = 3.5\ntheta_max = 6.0\nn_theta = 4\n"
        "seed = 99\nid_tol = 1e-7\nquad_rel = 1e-9\npole_clearance = 1e-4\n"
        "out_field = f.csv\nout_report = r.json\nout_kernel = k.csv\n");
    CHECK(c.params.omega == cplx(0.5, 1.0));
    CHECK(c.params.k2 == 0.75);
    CHECK(c.grid.log_rho);
    CHECK(c.grid.theta_max == 6.0);
    CHECK(c.seed == 99u);
    CHECK(c.tolerances.id_tol == 1e-7);
    CHECK(c.out_kernel == "k.csv");
    auto r = grid_rhos(c.grid);
    REQUIRE(r.size() == 3);
    CHECK(r[1] == Catch::Approx(1.0).epsilon(1e-14));
}
