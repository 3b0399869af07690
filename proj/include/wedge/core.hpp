#pragma once

#include <complex>
#include <stdexcept>
#include <string>

namespace wedge {

using cplx = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr cplx kI{0.0, 1.0};

struct DomainError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct BranchError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct PoleError : std::runtime_error {
    PoleError(const std::string& msg, cplx nearest = {}, double dist = 0.0)
        : std::runtime_error(msg), nearest_pole(nearest), distance(dist) {}
    cplx nearest_pole;
    double distance;
};
struct ConvergenceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct GeometryError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct QuadratureError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct RayError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct NearArcError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct FitError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ProblemParams {
    cplx omega{0.0, 1.0};
    double phi = 1.5 * kPi;
    double k1 = 1.0;
    double k2 = 1.0;
};

struct PolarPoint {
    double rho = 1.0;
    double theta = 2.0 * kPi;
};

struct BranchPoint {
    cplx p1;
    cplx r1;
    cplx r2;
};

struct Tolerances {
    double quad_rel = 1e-10;
    double id_tol = 1e-6;
    double pole_clearance = 1e-3;
};

// Throws DomainError naming the first violated invariant.
const ProblemParams& validate_params(const ProblemParams& p);
void validate_tolerances(const Tolerances& t);

// Vertical offset of the curve Gamma_0 at abscissa w1.
double gamma0_offset(cplx omega, double w1);

// Offset of w relative to the Gamma family: Im w - arctan((Re om/Im om) tanh Re w).
double curve_offset(cplx omega, cplx w);

inline cplx z1_map(cplx omega, cplx w) { return -kI * omega * std::sinh(w); }

BranchPoint branch_point(const ProblemParams& p, double k);

double theta_reflect(double theta, double phi);

bool in_wedge(double theta, double phi, double slack = 1e-12);

}  // namespace wedge
