#pragma once

#include <array>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "wedge/contour.hpp"
#include "wedge/kernel.hpp"

namespace wedge {

enum class FieldMethod { FullContour, Decomposed, PrincipalValue };
enum class LoopKind { Omega, Rectilinear };

const char* to_string(FieldMethod m);

struct FieldSample {
    PolarPoint point;
    cplx value;
    FieldMethod method = FieldMethod::FullContour;
    double est_quad_error = 0.0;
    std::string error;  // non-empty when a grid point failed
};

struct SolverOptions {
    double quad_tol = 1e-12;  // absolute, in field units
    double tail_tol = 1e-16;  // truncation bound (times kernel growth) at the cut-off
    double panel_len = 0.5;
    double b = 0.0;  // loop abscissa; 0 picks default_loop_b
    // rho |omega| cosh b above this makes the loop's vertical leg cancellation-prone
    double hill_limit = 12.5;
    bool auto_route = true;
    // shift of the decomposition lines when theta is near 3 pi/2
    double eta = 0.4;
    double eta_band = 0.2;
};

// Sommerfeld integral (1/(4 pi sin Phi)) int_C exp(-om rho sinh w) v1(w + i theta) dw.
FieldSample u1_field(const KernelEngine& E, PolarPoint pt, const SolverOptions& o = {},
                     LoopKind loop = LoopKind::Omega);
// Loop integral without the routing to the decomposition (for cross-checks).
FieldSample u1_loop(const KernelEngine& E, PolarPoint pt, const SolverOptions& o = {},
                    LoopKind loop = LoopKind::Omega);

cplx u_plane(const KernelEngine& E, PolarPoint pt);

struct Decomposition {
    cplx u_d;  // integral over the unshifted lines (one-sided value off the ray)
    cplx u_p;
    cplx u1;
    FieldMethod method;
    double est_quad_error;
};

// Lines Gamma_{-5pi/2} and Gamma_{-pi/2} plus the plane wave for theta > 3 pi/2.
// On the ray theta = 3 pi/2 throws RayError unless pv is set.
Decomposition decompose(const KernelEngine& E, PolarPoint pt, const SolverOptions& o = {}, bool pv = false);
FieldSample u1_decomposed(const KernelEngine& E, PolarPoint pt, const SolverOptions& o = {}, bool pv = false);

// u2 evaluates the u1 integral of the k2 engine at theta1 = -theta + 4 pi - Phi.
FieldSample u2_field(const KernelEngine& E2, PolarPoint pt, const SolverOptions& o = {});
FieldSample U_total(const KernelEngine& E1, const KernelEngine& E2, PolarPoint pt, const SolverOptions& o = {});

struct GridSpec {
    double rho_min = 0.5, rho_max = 2.0;
    int n_rho = 10;
    bool log_rho = false;
    double theta_min = 0.0, theta_max = 0.0;  // 0,0 means the whole wedge
    int n_theta = 10;
};

std::vector<double> grid_rhos(const GridSpec& g);
std::vector<double> grid_thetas(const GridSpec& g, double phi);

// Row-major (theta outer, rho inner). E2 == nullptr evaluates u1 only.
// Threads from WEDGE_THREADS (default: hardware concurrency); output does not depend on it.
std::vector<FieldSample> grid_eval(const GridSpec& g, const KernelEngine& E1, const KernelEngine* E2,
                                   const SolverOptions& o = {}, int threads = 0);
int default_threads();

// Gradient (d/drho, (1/rho) d/dtheta) by central differences, h = 1e-2 rho and 1e-2 in angle.
std::array<cplx, 2> gradient_u1(const KernelEngine& E, PolarPoint pt, const SolverOptions& o = {});

struct OriginProbe {
    cplx C_theta;
    double grad_exponent;
    double fit_residual;
    std::vector<double> rhos;
    std::vector<cplx> values;
    std::vector<double> grad_norms;
};
OriginProbe origin_probe(const KernelEngine& E, double theta, const std::vector<double>& rho_ladder,
                         const SolverOptions& o = {});

void write_field_csv(std::ostream& os, const std::vector<FieldSample>& s, const ProblemParams& p,
                     const std::string& timestamp);

}  // namespace wedge
