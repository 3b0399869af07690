#pragma once

#include <array>
#include <memory>
#include <string>
#include <vector>

#include "wedge/core.hpp"

namespace wedge {

enum class KernelKind { Elementary, CauchyBuilt };

struct KernelOptions {
    double phi_switch_eps = 1e-9;
    // beyond |Re w| > w_switch the Cauchy-built a1 is replaced by its linear asymptote
    double w_switch = 26.0;
    // base trapezoid step of the Cauchy tables
    double cauchy_h = 0.0125;
    // added to C2; nonzero only for fault-injection runs
    cplx c2_perturbation{0.0, 0.0};
    bool memoize = true;
};

enum class BoundarySide { Interior, Plus, Minus };

struct KernelPole {
    std::string label;
    cplx w;
};

// Conformal map t(w) = coth^2(pi (w - pi i/2) / (2 Phi)) and helpers.
cplx t_map(cplx w, double phi);
cplx dt_map(cplx w, double phi);
// t(w) - 1, computed without cancellation
cplx t_minus_one(cplx w, double phi);

class KernelEngine {
public:
    KernelEngine(const ProblemParams& p, double k, const Tolerances& tol = {}, const KernelOptions& opt = {});
    ~KernelEngine();
    KernelEngine(const KernelEngine&) = delete;
    KernelEngine& operator=(const KernelEngine&) = delete;

    const ProblemParams& params() const { return p_; }
    double k() const { return k_; }
    double phi() const { return p_.phi; }
    cplx omega() const { return p_.omega; }
    const BranchPoint& branch() const { return bp_; }
    KernelKind kind() const { return kind_; }
    const Tolerances& tolerances() const { return tol_; }
    const KernelOptions& options() const { return opt_; }
    double switch_width() const { return opt_.w_switch; }
    cplx const_C() const { return C_; }
    cplx const_C2() const { return C2_; }
    cplx q1() const;

    // Checked evaluators: throw PoleError within pole_clearance of a singular term.
    cplx G_hat(cplx w) const;
    cplx G2_hat(cplx w) const;
    cplx t(cplx w) const;
    cplx dt(cplx w) const;
    cplx a1_hat(cplx w) const;
    cplx T1(cplx w) const;
    cplx T2(cplx w) const;
    cplx m_func(cplx w) const;
    cplx Q_func(cplx w) const;
    cplx v11_hat(cplx w) const;
    cplx v1_hat(cplx w) const;

    // Same quantities with no switch to the asymptote (for overlap studies).
    cplx v11_direct(cplx w) const;
    cplx v1_direct(cplx w) const;

    // Far-field forms, valid for |Re w| >= w_switch.
    cplx v11_asymptotic(cplx w) const;
    cplx v1_asymptotic(cplx w) const;
    cplx dv1_asymptotic(cplx w) const;

    // Unchecked, memoized v1 for quadrature on contours that were cleared beforehand.
    cplx v1_fast(cplx w) const;

    // Cauchy integral in the t-plane; Plus/Minus return one-sided limits on the arc.
    cplx cauchy_a1_check(cplx t, BoundarySide side = BoundarySide::Interior) const;
    // Density on the arc, i.e. G2 at the preimage of t on the right half of the base curve.
    cplx G2_check(cplx t) const;
    // C estimated from a1(t) near t = 1 at delta = 1e-2, 1e-3, 1e-4 (last entry: extrapolation).
    std::array<cplx, 4> const_C_ladder() const;
    // Residue-free direct evaluation of C from the integral of (G2 - G2(inf)) t'/(t-1).
    cplx const_C_direct() const { return C_; }

    // Coefficients m_1..m_6 of the elementary branch (index 1..6).
    cplx m_coef(int j) const;

    // Points where the kernel pieces have poles or required removable singularities.
    std::vector<KernelPole> pole_list() const;

    // Cache statistics.
    size_t cache_size() const;

private:
    struct Impl;
    cplx G_raw(cplx w, double* dist) const;
    cplx G2_raw(cplx w, double* dist) const;
    cplx T_raw(cplx w, cplx r, cplx q, double* dist) const;
    cplx m_raw(cplx w, double* dist) const;
    cplx Q_raw(cplx w, double* dist) const;
    cplx a1_raw(cplx w, double* dist) const;
    cplx v11_raw(cplx w, double* dist, bool allow_switch) const;
    cplx cauchy_F(cplx anchor) const;
    void throw_if_close(const char* what, cplx w, double dist) const;
    void build_cauchy();

    ProblemParams p_;
    double k_;
    Tolerances tol_;
    KernelOptions opt_;
    BranchPoint bp_;
    KernelKind kind_;
    cplx C_{0.0, 0.0};
    cplx C2_{0.0, 0.0};
    std::unique_ptr<Impl> impl_;
};

}  // namespace wedge
