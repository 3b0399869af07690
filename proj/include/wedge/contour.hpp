#pragma once

#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "wedge/core.hpp"

namespace wedge {

// w1 + i (arctan((Re om / Im om) tanh w1) + alpha)
cplx gamma_point(cplx omega, double alpha, double w1);
// d/dw1 of gamma_point
cplx gamma_tangent(cplx omega, double w1);

// Decay constant C(omega, tau0) = Im om * sin(tau0) * Im om / |om|.
double decay_constant(cplx omega, double tau0);
// Wmax with exp(-C rho cosh Wmax) <= tol.
double truncation_cutoff(cplx omega, double tau0, double rho, double tol);

// A contour is a list of pieces; each piece is a parametrized arc.
struct ContourPiece {
    enum class Kind { Curve, Segment };
    Kind kind = Kind::Curve;
    double alpha = 0.0;  // Curve: carrier Gamma_alpha
    double s0 = 0.0, s1 = 0.0;  // Curve: w1 runs from s0 to s1
    cplx z0, z1;  // Segment: straight from z0 to z1
    bool reflect = false;  // image under w -> -w - 3 pi i (orientation carried by dw -> -dw)

    // parameter runs over [0, length()]
    double length() const;
    cplx point(cplx omega, double s) const;
    cplx tangent(cplx omega, double s) const;
};

struct Contour {
    std::string label;
    cplx omega;
    std::vector<ContourPiece> pieces;
    double b = 0.0;
    double wmax = 0.0;
    double eta = 0.0;
};

struct ContourNode {
    cplx w;
    cplx dw;  // tangent times quadrature weight
    double weight;  // quadrature weight in the piece parameter
    cplx dw_coarse;  // same node under the embedded half-order rule (zero if not a coarse node)
};

struct ContourPolyline {
    std::string label;
    std::vector<ContourNode> nodes;
};

// Paper-independent default: b >= 2|Re p1| with a margin off the pole column.
double default_loop_b(const ProblemParams& p);

// C(omega): left hairpin C2 on Gamma_{-5pi/2}, the vertical Re w = -b and Gamma_{-pi/2};
// right hairpin C1 = -C2 - 3 pi i.
Contour sommerfeld_double_loop(const ProblemParams& p, double b, double wmax);
// Same shape with horizontal lines Im w = -5pi/2, -pi/2 (the omega = i geometry).
Contour rectilinear_loop(const ProblemParams& p, double b, double wmax);
// Gamma_{-5pi/2+eta} left to right and Gamma_{-pi/2+eta} right to left, truncated at +-wmax.
Contour decomposition_contour(const ProblemParams& p, double wmax, double eta = 0.0);
// Right half of Gamma_{pi/2-Phi}.
Contour beta_hat(const ProblemParams& p, double wmax);

// Fixed panel discretization (order-n Clenshaw-Curtis per panel, n even).
ContourPolyline discretize(const Contour& c, double panel_len = 0.5, int order = 16);
// beta_hat with exactly n nodes, clustered toward both ends.
ContourPolyline beta_hat_polyline(const ProblemParams& p, double wmax, int n);

// sum f(w) dw over a polyline
cplx apply(const ContourPolyline& pl, const std::function<cplx(cplx)>& f);

struct QuadResult {
    cplx value;
    double est_err = 0.0;
    int nodes = 0;
};
// Adaptive nested Clenshaw-Curtis over every piece; panels bisect until the
// embedded rules agree to abs_tol (split in proportion to panel length).
QuadResult integrate(const Contour& c, const std::function<cplx(cplx)>& f, double abs_tol,
                     double panel_len = 0.5, int max_depth = 14);

// Minimum distance from z to a densely sampled contour.
double distance_to(const Contour& c, cplx z, double step = 0.01);

void write_csv(const ContourPolyline& pl, std::ostream& os);

}  // namespace wedge
