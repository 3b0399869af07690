#include <catch_amalgamated.hpp>

#include <cmath>

#include "wedge/core.hpp"
#include "wedge/quad.hpp"

using namespace wedge;

TEST_CASE("Gauss-Legendre is exact for degree 2n-1") {
    for (int n : {4, 10, 20, 48}) {
        const auto& R = quad::gauss_legendre(n);
        REQUIRE(R.x.size() == size_t(n));
        for (int d = 0; d <= 2 * n - 1; ++d) {
            double s = 0.0;
            for (int j = 0; j < n; ++j) s += R.w[j] * std::pow(R.x[j], d);
            double exact = d % 2 ? 0.0 : 2.0 / (d + 1);
            CHECK(std::abs(s - exact) < 1e-13);
        }
    }
}

TEST_CASE("Clenshaw-Curtis nested weights") {
    const auto& R = quad::clenshaw_curtis(16);
    REQUIRE(R.x.size() == 17);
    double sw = 0.0, sc = 0.0;
    for (size_t j = 0; j < R.x.size(); ++j) {
        sw += R.w[j];
        sc += R.coarse_w[j];
        if (j % 2) CHECK(R.coarse_w[j] == 0.0);
    }
    CHECK(sw == Catch::Approx(2.0).epsilon(1e-14));
    CHECK(sc == Catch::Approx(2.0).epsilon(1e-14));
    // exact for polynomials up to degree n (fine) and n/2 (coarse)
    for (int d = 0; d <= 16; ++d) {
        double f = 0.0, c = 0.0;
        for (size_t j = 0; j < R.x.size(); ++j) {
            f += R.w[j] * std::pow(R.x[j], d);
            c += R.coarse_w[j] * std::pow(R.x[j], d);
        }
        double exact = d % 2 ? 0.0 : 2.0 / (d + 1);
        CHECK(std::abs(f - exact) < 1e-13);
        if (d <= 8) CHECK(std::abs(c - exact) < 1e-13);
    }
    CHECK_THROWS(quad::clenshaw_curtis(7));
}

TEST_CASE("adaptive quadrature against closed forms") {
    auto v = quad::adaptive([](double x) { return std::complex<double>(std::exp(x), std::cos(3.0 * x)); }, 0.0, 2.0,
                            1e-13);
    CHECK(std::abs(v - std::complex<double>(std::exp(2.0) - 1.0, std::sin(6.0) / 3.0)) < 1e-12);
    // endpoint singularity of sqrt type
    auto s = quad::adaptive([](double x) { return std::complex<double>(std::sqrt(x), 0.0); }, 0.0, 1.0, 1e-11);
    CHECK(std::abs(s.real() - 2.0 / 3.0) < 1e-9);
}
