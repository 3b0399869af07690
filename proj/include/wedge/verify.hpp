#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "wedge/kernel.hpp"
#include "wedge/solver.hpp"

namespace wedge {

struct CheckResult {
    std::string name;
    double measured = 0.0;
    double tolerance = 0.0;
    bool passed = false;  // measured <= tolerance
    std::vector<std::pair<std::string, cplx>> context;
    std::string note;
};

struct VerificationReport {
    ProblemParams params;
    uint64_t seed = 0;
    std::vector<CheckResult> checks;  // sorted by name
    bool overall = false;
};

CheckResult make_check(std::string name, double measured, double tolerance);

// (1/2 pi i) times the closed integral of f over |w - w0| = r, trapezoid rule on n nodes.
// Throws ConvergenceError when doubling n moves the result by more than 1e-10.
cplx residue_at(const std::function<cplx(cplx)>& f, cplx w0, double r = 0.1, int n = 256);
// r0 halved until no listed singularity (other than w0 itself) lies within 2r of w0.
double residue_radius(cplx w0, const std::vector<cplx>& singular, double r0 = 0.1);
// Pole lattice of the kernel pieces: +-p1 + pi i n + 2 i Phi m and the conformal-map poles.
std::vector<cplx> known_singularities(const KernelEngine& E);

// Seeded points in Re w in [-4, 4], Im w in [-2 Phi, 2 Phi], clear of the pole lattice.
std::vector<cplx> sample_points(const KernelEngine& E, int n, uint64_t seed);
// Seeded wedge points with rho in [rho_lo, rho_hi] and theta at least margin inside the wedge.
std::vector<PolarPoint> sample_wedge(double phi, int n, uint64_t seed, double rho_lo = 0.5, double rho_hi = 2.0,
                                     double margin = 0.15);

CheckResult check_difference_equation(const KernelEngine& E, int n, uint64_t seed);
CheckResult check_automorphy(const KernelEngine& E, int n, uint64_t seed);
CheckResult check_pole_portrait(const KernelEngine& E);

// Both sides of the wedge for u1 and (when E2 is given) for U = u1 + u2.
CheckResult check_boundary(const KernelEngine& E1, const KernelEngine* E2, const std::vector<double>& rhos,
                           double tol, const SolverOptions& o = {});

// Relative 5-point polar residual |(Lap + om^2) u1| / |om^2 u1|.
double helmholtz_residual(const KernelEngine& E, PolarPoint pt, double h, const SolverOptions& o = {});
CheckResult check_helmholtz(const KernelEngine& E, const std::vector<PolarPoint>& pts, double h,
                            const SolverOptions& o = {});
// measured = max residual(h/2) / residual(h); passes at <= 1/3.
CheckResult check_helmholtz_order(const KernelEngine& E, const std::vector<PolarPoint>& pts, double h,
                                  const SolverOptions& o = {});

// Fitted exponent of |v11(w) -+ (sin Phi/Phi)(w - pi i/2)| over |Re w| in [6, 12] against -pi/(2 Phi).
// The Elementary engine checks the linear growth coefficient instead.
CheckResult check_asymptotics(const KernelEngine& E);
// G2 -> -+ 2 i sin Phi at Re w = +-12; not applicable at Phi = 3 pi/2.
CheckResult check_g2_tails(const KernelEngine& E);
// Direct and far-field v1 agree at |Re w| = W_switch (CauchyBuilt only).
CheckResult check_switch_overlap(const KernelEngine& E);

CheckResult check_decomposition(const KernelEngine& E, const std::vector<PolarPoint>& pts, double tol,
                                const SolverOptions& o = {});
CheckResult check_continuity(const KernelEngine& E, const std::vector<double>& rhos, double delta, double tol,
                             const SolverOptions& o = {});
CheckResult check_contour_independence(const KernelEngine& E, const std::vector<PolarPoint>& pts, double tol,
                                       const SolverOptions& o = {});

// Never throws; a check that raises is recorded as failed with the message in note.
VerificationReport run_full_suite(const ProblemParams& p, uint64_t seed, const Tolerances& tol = {},
                                  const KernelOptions& kopt = {});

// JSON with the timestamp alone on its own line; everything else is a function of (params, seed).
void write_report_json(std::ostream& os, const VerificationReport& r, const std::string& timestamp);
void print_report_table(std::ostream& os, const VerificationReport& r);

}  // namespace wedge
