#include <catch_amalgamated.hpp>

#include <algorithm>
#include <sstream>

#include "wedge/solver.hpp"

using namespace wedge;

namespace {

ProblemParams params(double phi, cplx om, double k1 = 1.0, double k2 = 1.0) {
    ProblemParams p;
    p.phi = phi;
    p.omega = om;
    p.k1 = k1;
    p.k2 = k2;
    return p;
}

}  // namespace

TEST_CASE("plane wave is the explicit exponential and solves Helmholtz") {
    auto p = params(1.7 * kPi, cplx(0.5, 1.0), 1.3);
    KernelEngine E(p, 1.3);
    const cplx ch = std::cosh(E.branch().p1), om = p.omega;
    for (double r : {0.3, 1.0, 2.5})
        for (double t : {0.5 * kPi, 1.2 * kPi, 1.9 * kPi}) {
            cplx ref = std::exp(-kI * 1.3 * r * std::cos(t) - kI * om * r * ch * std::sin(t));
            CHECK(std::abs(u_plane(E, {r, t}) - ref) < 1e-13 * std::abs(ref));
        }
    // Cartesian wave numbers a = -i k, b = -i om cosh p1 satisfy a^2 + b^2 = -om^2
    cplx a = -kI * 1.3, b = -kI * om * ch;
    CHECK(std::abs(a * a + b * b + om * om) < 1e-13);
}

TEST_CASE("u1 takes the boundary data on both sides") {
    for (double phi : {4.0 * kPi / 3.0, 1.5 * kPi, 1.75 * kPi})
        for (cplx om : {cplx(0, 1), cplx(0.5, 1)}) {
            KernelEngine E(params(phi, om), 1.0);
            for (double r : {0.25, 1.0, 4.0}) {
                CHECK(std::abs(u1_field(E, {r, 2.0 * kPi}).value - std::exp(-kI * r)) < 1e-9);
                CHECK(std::abs(u1_field(E, {r, 2.0 * kPi - phi}).value) < 1e-9);
            }
        }
}

TEST_CASE("U = u1 + u2 matches both Dirichlet data") {
    auto p = params(1.6 * kPi, cplx(0.3, 1.0), 1.0, 1.7);
    KernelEngine E1(p, p.k1), E2(p, p.k2);
    for (double r : {0.5, 2.0}) {
        CHECK(std::abs(U_total(E1, E2, {r, 2.0 * kPi}).value - std::exp(-kI * r)) < 1e-9);
        CHECK(std::abs(U_total(E1, E2, {r, 2.0 * kPi - p.phi}).value - std::exp(-kI * 1.7 * r)) < 1e-9);
    }
    CHECK_THROWS_AS(u1_field(E1, {1.0, 0.1}), DomainError);
}

TEST_CASE("large radius routes to the decomposition") {
    KernelEngine E(params(1.75 * kPi, cplx(0.5, 1)), 1.0);
    auto s = u1_field(E, {8.0, 2.0 * kPi});
    CHECK(s.method != FieldMethod::FullContour);
    CHECK(std::abs(s.value - std::exp(-8.0 * kI)) < 1e-8);
}

TEST_CASE("decomposition on and off the special ray") {
    KernelEngine E(params(1.75 * kPi, cplx(0.5, 1)), 1.0);
    CHECK_THROWS_AS(decompose(E, {1.0, 1.5 * kPi}), RayError);
    auto pv = u1_decomposed(E, {1.0, 1.5 * kPi}, {}, true);
    CHECK(pv.method == FieldMethod::PrincipalValue);
    CHECK(std::abs(pv.value - u1_loop(E, {1.0, 1.5 * kPi}).value) < 1e-8);
    for (double t : {1.2 * kPi, 1.45 * kPi, 1.52 * kPi, 1.8 * kPi}) {
        auto d = decompose(E, {1.3, t});
        cplx u = u1_loop(E, {1.3, t}).value;
        CHECK(std::abs(d.u1 - u) < 1e-8);
        cplx expect = d.u_d + (t > 1.5 * kPi ? d.u_p : cplx(0.0));
        CHECK(std::abs(d.u1 - expect) < 1e-14);
    }
}

TEST_CASE("origin limit is the harmonic interpolation of the boundary values") {
    for (auto [phi, om] : {std::pair{4.0 * kPi / 3.0, cplx(0, 1)}, {1.75 * kPi, cplx(0.5, 1)}}) {
        KernelEngine E(params(phi, om), 1.0);
        const double th = 1.7 * kPi;
        auto P = origin_probe(E, th, {1e-2, 1e-3, 1e-4});
        // u -> (theta - (2 pi - Phi)) / Phi at the tip
        CHECK(std::abs(P.C_theta - (th - 2.0 * kPi + phi) / phi) < 5e-3);
        CHECK(P.grad_exponent == Catch::Approx(-1.0).margin(0.2));
    }
    KernelEngine E(params(1.5 * kPi, cplx(0, 1)), 1.0);
    CHECK_THROWS_AS(origin_probe(E, 1.7 * kPi, {1e-2}), DomainError);
    CHECK_THROWS_AS(origin_probe(E, 1.7 * kPi, {1e-3, 1e-2}), DomainError);
}

TEST_CASE("grid evaluation is independent of the thread count") {
    auto p = params(1.6 * kPi, cplx(0.5, 1.0));
    KernelEngine E1(p, 1.0), E2(p, 1.0);
    GridSpec g;
    g.n_rho = 3;
    g.n_theta = 5;
    auto a = grid_eval(g, E1, &E2, {}, 1);
    auto b = grid_eval(g, E1, &E2, {}, 3);
    REQUIRE(a.size() == 15);
    for (size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].value == b[i].value);
        CHECK(a[i].point.theta == b[i].point.theta);
        CHECK(a[i].error.empty());
    }
    // theta outer, rho inner
    CHECK(a[0].point.theta == a[2].point.theta);
    CHECK(a[0].point.rho < a[1].point.rho);
    std::ostringstream os;
    write_field_csv(os, a, p, "T");
    std::string s = os.str();
    CHECK(std::count(s.begin(), s.end(), '\n') == 18);
    CHECK(s.find("# timestamp: T\n") != std::string::npos);
}

TEST_CASE("grid ranges") {
    GridSpec g;
    g.rho_min = 0.1;
    g.rho_max = 10.0;
    g.n_rho = 3;
    g.log_rho = true;
    auto r = grid_rhos(g);
    CHECK(r[1] == Catch::Approx(1.0));
    auto t = grid_thetas(g, 1.5 * kPi);
    CHECK(t.front() == Catch::Approx(0.5 * kPi));
    CHECK(t.back() == Catch::Approx(2.0 * kPi));
    g.theta_min = 0.1;
    g.theta_max = 6.0;
    CHECK_THROWS_AS(grid_thetas(g, 1.5 * kPi), DomainError);
}
