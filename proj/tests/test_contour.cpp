#include <catch_amalgamated.hpp>

#include <algorithm>
#include <sstream>

#include "wedge/contour.hpp"
#include "wedge/kernel.hpp"

using namespace wedge;

TEST_CASE("Gamma curves and their tangents") {
    const cplx om(0.7, 1.1);
    for (double x : {-3.0, -0.5, 0.0, 1.2, 4.0}) {
        cplx w = gamma_point(om, -0.5 * kPi, x);
        CHECK(curve_offset(om, w) == Catch::Approx(-0.5 * kPi));
        const double h = 1e-6;
        cplx fd = (gamma_point(om, 0.0, x + h) - gamma_point(om, 0.0, x - h)) / (2.0 * h);
        CHECK(std::abs(gamma_tangent(om, x) - fd) < 1e-8);
    }
}

TEST_CASE("truncation cutoff meets its bound") {
    for (cplx om : {cplx(0, 1), cplx(0.5, 1), cplx(2, 0.5)})
        for (double rho : {0.1, 1.0, 5.0}) {
            const double tau0 = 0.5 * kPi, tol = 1e-16;
            double W = truncation_cutoff(om, tau0, rho, tol);
            double C = decay_constant(om, tau0);
            CHECK(C == Catch::Approx(om.imag() * om.imag() / std::abs(om)));
            if (W > 0.0) CHECK(std::exp(-C * rho * std::cosh(W)) == Catch::Approx(tol).epsilon(1e-9));
        }
    CHECK_THROWS_AS(truncation_cutoff({0, 1}, 0.5 * kPi, 1.0, 0.0), DomainError);
    CHECK_THROWS_AS(truncation_cutoff({0, 1}, 0.5 * kPi, -1.0, 1e-8), DomainError);
    CHECK_THROWS_AS(truncation_cutoff({0, 1}, 2.0, 1.0, 1e-8), DomainError);
}

TEST_CASE("double loop geometry") {
    ProblemParams p;
    p.omega = {0.5, 1.0};
    p.phi = 1.75 * kPi;
    const double b = default_loop_b(p);
    CHECK(b >= 2.0 * std::abs(branch_point(p, 1.0).p1.real()));
    Contour C = sommerfeld_double_loop(p, b, 6.0);
    REQUIRE(C.pieces.size() == 6);
    // the right hairpin is the image of the left one under w -> -w - 3 pi i
    for (int i = 0; i < 3; ++i) {
        const auto &L = C.pieces[i], &R = C.pieces[i + 3];
        CHECK_FALSE(L.reflect);
        CHECK(R.reflect);
        for (double f : {0.0, 0.3, 1.0}) {
            double s = f * L.length();
            CHECK(std::abs(R.point(p.omega, s) - (-L.point(p.omega, s) - 3.0 * kPi * kI)) < 1e-14);
        }
    }
    // consecutive pieces join
    for (int i : {0, 1, 3, 4})
        CHECK(std::abs(C.pieces[i].point(p.omega, C.pieces[i].length()) - C.pieces[i + 1].point(p.omega, 0.0)) < 1e-12);
    CHECK_THROWS_AS(sommerfeld_double_loop(p, 0.5 * b - 0.1, 6.0), GeometryError);
    CHECK_THROWS_AS(sommerfeld_double_loop(p, b, b), GeometryError);
}

TEST_CASE("adaptive contour integration of entire functions") {
    ProblemParams p;
    p.omega = {0.5, 1.0};
    Contour C = sommerfeld_double_loop(p, 2.0, 3.0);
    // int f'(w) dw over a piece equals the difference of f at the ends
    auto F = [](cplx w) { return std::sin(w) * std::exp(-0.1 * w * w); };
    auto dF = [](cplx w) { return (std::cos(w) - 0.2 * w * std::sin(w)) * std::exp(-0.1 * w * w); };
    for (const auto& pc : C.pieces) {
        Contour one = C;
        one.pieces = {pc};
        auto r = integrate(one, dF, 1e-13);
        cplx exact = F(pc.point(p.omega, pc.length())) - F(pc.point(p.omega, 0.0));
        CHECK(std::abs(r.value - exact) < 1e-12 * (1.0 + std::abs(exact)));
        // fixed discretization agrees as well
        CHECK(std::abs(apply(discretize(one, 0.25), dF) - exact) < 1e-10 * (1.0 + std::abs(exact)));
    }
}

TEST_CASE("integration around a pole recovers 2 pi i") {
    // rectangle traversed counterclockwise through four segments
    Contour C;
    C.omega = {0, 1};
    auto seg = [](cplx a, cplx b) {
        ContourPiece s;
        s.kind = ContourPiece::Kind::Segment;
        s.z0 = a;
        s.z1 = b;
        return s;
    };
    cplx a(-1, -1), b(2, -1), c(2, 1.5), d(-1, 1.5);
    C.pieces = {seg(a, b), seg(b, c), seg(c, d), seg(d, a)};
    auto r = integrate(C, [](cplx w) { return 3.0 / (w - cplx(0.2, 0.1)) + w * w; }, 1e-12);
    CHECK(std::abs(r.value - 6.0 * kPi * kI) < 1e-11);
}

TEST_CASE("beta polyline and csv export") {
    ProblemParams p;
    p.phi = 1.6 * kPi;
    auto pl = beta_hat_polyline(p, 8.0, 33);
    REQUIRE(pl.nodes.size() == 33);
    double wsum = 0.0;
    for (auto& nd : pl.nodes) {
        wsum += nd.weight;
        CHECK(curve_offset(p.omega, nd.w) == Catch::Approx(0.5 * kPi - p.phi));
    }
    CHECK(wsum == Catch::Approx(8.0));
    std::ostringstream os;
    write_csv(pl, os);
    std::string s = os.str();
    CHECK(s.rfind("re_w,im_w,re_dw,im_dw,weight\n", 0) == 0);
    CHECK(std::count(s.begin(), s.end(), '\n') == 34);
    CHECK_THROWS_AS(beta_hat_polyline(p, 8.0, 1), DomainError);
}

TEST_CASE("distance to a contour") {
    ProblemParams p;
    Contour C = rectilinear_loop(p, 2.0, 5.0);
    CHECK(distance_to(C, cplx(-3.0, -0.5 * kPi + 0.25)) == Catch::Approx(0.25).margin(1e-3));
    CHECK(distance_to(C, cplx(-2.0 - 0.1, -1.5 * kPi)) == Catch::Approx(0.1).margin(1e-3));
}
