#include <catch_amalgamated.hpp>

#include <random>
#include <vector>

#include "wedge/contour.hpp"
#include "wedge/kernel.hpp"

using namespace wedge;

namespace {

// G(w) = i om sinh(w - i Phi) / (i om sinh w + k), written out independently of the engine
cplx G_oracle(const ProblemParams& p, double k, cplx w) {
    const cplx iw = kI * p.omega;
    return iw * std::sinh(w - kI * p.phi) / (iw * std::sinh(w) + k);
}

std::vector<cplx> random_points(uint64_t seed, int n, double re, double im) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> a(-re, re), b(-im, im);
    std::vector<cplx> v;
    for (int i = 0; i < n; ++i) {
        double x = a(rng);
        double y = b(rng);
        v.push_back({x, y});
    }
    return v;
}

ProblemParams params(double phi, cplx om, double k1 = 1.0) {
    ProblemParams p;
    p.phi = phi;
    p.omega = om;
    p.k1 = k1;
    return p;
}

// evaluate, skipping points that sit too close to a pole
template <class F>
bool try_eval(F f, cplx& out) {
    try {
        out = f();
        return true;
    } catch (const PoleError&) {
        return false;
    }
}

}  // namespace

TEST_CASE("kernel kind follows the special angle") {
    CHECK(KernelEngine(params(1.5 * kPi, kI), 1.0).kind() == KernelKind::Elementary);
    CHECK(KernelEngine(params(1.5 * kPi + 1e-10, kI), 1.0).kind() == KernelKind::Elementary);
    CHECK(KernelEngine(params(1.5 * kPi + 1e-3, kI), 1.0).kind() == KernelKind::CauchyBuilt);
}

TEST_CASE("G and G2 match closed forms") {
    for (auto [phi, om] : {std::pair{4.0 * kPi / 3.0, cplx(0, 1)}, {1.75 * kPi, cplx(0.5, 1)}, {1.5 * kPi, cplx(1, 0.5)}}) {
        auto p = params(phi, om);
        KernelEngine E(p, 1.0);
        for (cplx w : random_points(7, 60, 6.0, 8.0)) {
            cplx g;
            if (!try_eval([&] { return E.G_hat(w); }, g)) continue;
            cplx ref = G_oracle(p, 1.0, w);
            CHECK(std::abs(g - ref) <= 1e-12 * (1.0 + std::abs(ref)));
            cplx g2;
            if (!try_eval([&] { return E.G2_hat(w); }, g2)) continue;
            cplx ref2 = ref - G_oracle(p, 1.0, -w + kPi * kI - 2.0 * kI * phi);
            CHECK(std::abs(g2 - ref2) <= 1e-12 * (1.0 + std::abs(ref2)));
        }
    }
}

TEST_CASE("residues of G at p1 and -p1 -+ pi i are r2 and r1") {
    auto p = params(1.3 * kPi, cplx(0.4, 1.2));
    KernelEngine E(p, 1.0);
    const auto& b = E.branch();
    const double e = 1e-7;
    // symmetric difference cancels the regular part to O(e^2)
    auto lim = [&](cplx z) { return 0.5 * e * (G_oracle(p, 1.0, z + e) - G_oracle(p, 1.0, z - e)); };
    CHECK(std::abs(lim(b.p1) - b.r2) < 1e-6);
    CHECK(std::abs(lim(-b.p1 + kPi * kI) - b.r1) < 1e-6);
    CHECK(std::abs(lim(-b.p1 - kPi * kI) - b.r1) < 1e-6);
}

TEST_CASE("conformal map symmetries") {
    const double phi = 1.65 * kPi;
    for (cplx w : random_points(11, 40, 3.0, 6.0)) {
        cplx t = t_map(w, phi);
        CHECK(std::abs(t_minus_one(w, phi) - (t - 1.0)) <= 1e-12 * std::abs(t));
        CHECK(std::abs(t_map(-w + kPi * kI, phi) - t) <= 1e-11 * std::abs(t));
        CHECK(std::abs(t_map(w + 2.0 * kI * phi, phi) - t) <= 1e-11 * std::abs(t));
        const double h = 1e-5;
        cplx fd = (t_map(w + h, phi) - t_map(w - h, phi)) / (2.0 * h);
        CHECK(std::abs(dt_map(w, phi) - fd) <= 1e-6 * (1.0 + std::abs(fd)));
    }
    CHECK_THROWS_AS(t_map(0.5 * kPi * kI, phi), PoleError);
}

TEST_CASE("elementary branch identities at seeded points") {
    for (cplx om : {cplx(0, 1), cplx(0.5, 1), cplx(1.5, 0.3)}) {
        KernelEngine E(params(1.5 * kPi, om), 1.0);
        const cplx s = 3.0 * kPi * kI;
        int n = 0;
        for (cplx w : random_points(123, 100, 4.0, 3.0 * kPi)) {
            cplx a, b, g, c;
            if (!try_eval([&] { return E.v11_hat(w); }, a) || !try_eval([&] { return E.v11_hat(w + s); }, b) ||
                !try_eval([&] { return E.G2_hat(w); }, g) || !try_eval([&] { return E.v11_hat(-w + kPi * kI); }, c))
                continue;
            ++n;
            CHECK(std::abs(a - b - g) <= 1e-12 * (1.0 + std::abs(a)));
            CHECK(std::abs(a - c) <= 1e-12 * (1.0 + std::abs(a)));
            CHECK(std::abs(E.Q_func(w) - E.Q_func(-w + kPi * kI)) <= 1e-12 * (1.0 + std::abs(E.Q_func(w))));
        }
        CHECK(n > 90);
    }
}

TEST_CASE("Cauchy-built branch identities at seeded points") {
    for (auto [phi, om] : {std::pair{4.0 * kPi / 3.0, cplx(0, 1)}, {1.75 * kPi, cplx(0.5, 1)},
                           {1.9 * kPi, cplx(0.2, 1)}, {1.2 * kPi, cplx(1, 1)}}) {
        KernelEngine E(params(phi, om), 1.0);
        REQUIRE(E.kind() == KernelKind::CauchyBuilt);
        const cplx s = 2.0 * kI * phi;
        for (cplx w : random_points(321, 60, 4.0, 2.0 * phi)) {
            cplx a, b, g, c;
            if (!try_eval([&] { return E.v11_hat(w); }, a) || !try_eval([&] { return E.v11_hat(w + s); }, b) ||
                !try_eval([&] { return E.G2_hat(w); }, g) || !try_eval([&] { return E.v11_hat(-w + kPi * kI); }, c))
                continue;
            CHECK(std::abs(a - b - g) <= 1e-6);
            CHECK(std::abs(a - c) <= 1e-6);
        }
    }
}

TEST_CASE("Plemelj jump of the Cauchy integral reproduces the density") {
    for (auto [phi, om] : {std::pair{4.0 * kPi / 3.0, cplx(0, 1)}, {1.75 * kPi, cplx(0.5, 1)}}) {
        auto p = params(phi, om);
        KernelEngine E(p, 1.0);
        for (double s : {0.2, 0.9, 2.5, 5.0}) {
            cplx wb = gamma_point(om, 0.5 * kPi - phi, s);
            cplx t = t_map(wb, phi);
            cplx jump = E.cauchy_a1_check(t, BoundarySide::Plus) - E.cauchy_a1_check(t, BoundarySide::Minus);
            CHECK(std::abs(jump - E.G2_check(t)) < 1e-9);
            CHECK(std::abs(E.G2_check(t) - E.G2_hat(wb)) < 1e-12);
        }
        CHECK_THROWS_AS(E.cauchy_a1_check(t_map(gamma_point(om, 0.5 * kPi - phi, 1.0), phi)), NearArcError);
    }
}

TEST_CASE("constant C: direct integral agrees with the logarithmic ladder") {
    for (auto [phi, om] : {std::pair{4.0 * kPi / 3.0, cplx(0, 1)}, {1.75 * kPi, cplx(0.5, 1)}}) {
        KernelEngine E(params(phi, om), 1.0);
        auto L = E.const_C_ladder();
        CHECK(std::abs(L[3] - E.const_C_direct()) < 1e-6);
        // successive ladder entries approach the limit
        CHECK(std::abs(L[2] - L[3]) < std::abs(L[0] - L[3]));
    }
}

TEST_CASE("linear growth at infinity and the far-field switch") {
    for (auto [phi, om] : {std::pair{4.0 * kPi / 3.0, cplx(0, 1)}, {1.5 * kPi, cplx(0.5, 1)}, {1.75 * kPi, cplx(0.5, 1)}}) {
        KernelEngine E(params(phi, om), 1.0);
        const double lin = std::sin(phi) / phi;
        for (double sg : {1.0, -1.0}) {
            cplx w = gamma_point(om, 0.3, sg * 24.0);
            const double h = 1e-3;
            cplx d = (E.v11_hat(w + h) - E.v11_hat(w - h)) / (2.0 * h);
            CHECK(std::abs(d - sg * lin) < 2e-6);
            const double W = E.switch_width();
            cplx a = E.v1_hat(cplx(sg * (W - 1e-9), 0.4)), b = E.v1_hat(cplx(sg * (W + 1e-9), 0.4));
            CHECK(std::abs(a - b) < 1e-6);
            CHECK(std::abs(E.v1_direct(cplx(sg * (W + 2.0), 0.4)) - E.v1_asymptotic(cplx(sg * (W + 2.0), 0.4))) < 1e-6);
        }
        CHECK_THROWS_AS(E.v1_asymptotic(cplx(1.0, 0.0)), DomainError);
    }
}

TEST_CASE("checked evaluators refuse points next to a pole") {
    KernelEngine E(params(1.75 * kPi, cplx(0.5, 1)), 1.0);
    const cplx p1 = E.branch().p1;
    CHECK_THROWS_AS(E.v11_hat(p1 + 1e-5), PoleError);
    CHECK_THROWS_AS(E.G_hat(p1 + cplx(0, 1e-5)), PoleError);
    CHECK_NOTHROW(E.v11_hat(p1 + 0.05));
    try {
        E.v1_hat(-p1 + kPi * kI + 1e-6);
        FAIL("no exception");
    } catch (const PoleError& e) {
        CHECK(e.distance < 1e-3);
    }
}

TEST_CASE("memoized evaluation equals the checked one") {
    KernelEngine E(params(1.6 * kPi, cplx(0.3, 1)), 1.0);
    for (cplx w : random_points(5, 50, 30.0, 6.0)) {
        cplx a;
        if (!try_eval([&] { return E.v1_hat(w); }, a)) continue;
        CHECK(E.v1_fast(w) == a);
        CHECK(E.v1_fast(w) == a);
    }
    CHECK(E.cache_size() > 0);
}

TEST_CASE("a C2 offset shifts v11 by the same constant") {
    auto p = params(1.75 * kPi, cplx(0.5, 1));
    KernelOptions ko;
    ko.c2_perturbation = 0.1;
    KernelEngine A(p, 1.0), B(p, 1.0, {}, ko);
    for (cplx w : random_points(9, 30, 4.0, 6.0)) {
        cplx a, b;
        if (!try_eval([&] { return A.v11_hat(w); }, a) || !try_eval([&] { return B.v11_hat(w); }, b)) continue;
        CHECK(std::abs(b - a - 0.1) < 1e-9);
    }
}
