#pragma once

#include <complex>
#include <functional>
#include <vector>

namespace wedge::quad {

struct Rule {
    std::vector<double> x;  // nodes on [-1, 1]
    std::vector<double> w;
};

// n-point Gauss-Legendre, cached per n.
const Rule& gauss_legendre(int n);

// Clenshaw-Curtis on n+1 points (n even). coarse_w holds the n/2 rule on the
// even-indexed nodes and zero elsewhere, so both share evaluations.
struct NestedRule {
    std::vector<double> x;
    std::vector<double> w;
    std::vector<double> coarse_w;
};
const NestedRule& clenshaw_curtis(int n);

using CFun = std::function<std::complex<double>(double)>;

// Adaptive Gauss-Legendre on [a, b]; bisects until the 20-point rule agrees
// with the sum over both halves to abs_tol.
std::complex<double> adaptive(const CFun& f, double a, double b, double abs_tol, int max_depth = 40);

}  // namespace wedge::quad
