#include "wedge/core.hpp"

#include <cmath>
#include <limits>
#include <vector>

namespace wedge {

const ProblemParams& validate_params(const ProblemParams& p) {
    if (!(p.omega.imag() > 0.0)) throw DomainError("Im omega <= 0");
    if (!(p.omega.real() >= 0.0)) throw DomainError("Re omega < 0");
    if (!(p.phi > kPi && p.phi < 2.0 * kPi)) throw DomainError("phi not in (pi, 2pi)");
    if (!(p.k1 > 0.0)) throw DomainError("k1 <= 0");
    if (!(p.k2 > 0.0)) throw DomainError("k2 <= 0");
    return p;
}

void validate_tolerances(const Tolerances& t) {
    if (!(t.quad_rel > 0.0) || !(t.id_tol > 0.0) || !(t.pole_clearance > 0.0))
        throw DomainError("tolerances must be strictly positive");
    if (t.pole_clearance < 10.0 * t.id_tol)
        throw DomainError("pole_clearance < 10*id_tol");
}

double gamma0_offset(cplx omega, double w1) {
    return std::atan(omega.real() / omega.imag() * std::tanh(w1));
}

double curve_offset(cplx omega, cplx w) { return w.imag() - gamma0_offset(omega, w.real()); }

BranchPoint branch_point(const ProblemParams& p, double k) {
    validate_params(p);
    if (!(k > 0.0)) throw DomainError("k <= 0");
    const cplx zeta = kI * k / p.omega;
    const cplx root = std::sqrt(zeta * zeta + 1.0);

    // all values of asinh(zeta) with small imaginary part; keep the one on Gamma_0
    std::vector<cplx> cands;
    for (int sgn : {1, -1}) {
        cplx base = std::log(zeta + double(sgn) * root);
        for (int n = -2; n <= 2; ++n) cands.push_back(base + 2.0 * kPi * n * kI);
    }
    const double tol = 1e-9;
    int found = 0;
    cplx best;
    for (cplx c : cands) {
        if (std::abs(std::sinh(c) - zeta) > tol * (1.0 + std::abs(zeta))) continue;
        if (std::abs(c.imag()) >= 0.5 * kPi) continue;
        if (std::abs(curve_offset(p.omega, c)) > tol) continue;
        if (found && std::abs(c - best) < tol) continue;
        best = c;
        ++found;
    }
    if (found != 1) throw BranchError("no unique branch of asinh(ik/omega) on Gamma_0");

    BranchPoint bp;
    bp.p1 = best;
    const cplx ch = std::cosh(best);
    bp.r1 = -std::sinh(best + kI * p.phi) / ch;
    bp.r2 = std::sinh(best - kI * p.phi) / ch;
    return bp;
}

bool in_wedge(double theta, double phi, double slack) {
    return theta >= 2.0 * kPi - phi - slack && theta <= 2.0 * kPi + slack;
}

double theta_reflect(double theta, double phi) {
    if (!in_wedge(theta, phi)) throw DomainError("theta outside [2pi-phi, 2pi]");
    return -theta + 4.0 * kPi - phi;
}

}  // namespace wedge
