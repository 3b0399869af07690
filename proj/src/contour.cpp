#include "wedge/contour.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <limits>
#include <ostream>

#include "wedge/quad.hpp"

namespace wedge {

cplx gamma_point(cplx omega, double alpha, double w1) {
    return cplx(w1, gamma0_offset(omega, w1) + alpha);
}

cplx gamma_tangent(cplx omega, double w1) {
    const double r = omega.real() / omega.imag();
    const double th = std::tanh(w1);
    const double sech2 = 1.0 - th * th;
    return cplx(1.0, r * sech2 / (1.0 + r * r * th * th));
}

double decay_constant(cplx omega, double tau0) {
    return omega.imag() * std::sin(tau0) * omega.imag() / std::abs(omega);
}

double truncation_cutoff(cplx omega, double tau0, double rho, double tol) {
    if (!(tol > 0.0 && tol < 1.0)) throw DomainError("truncation_cutoff: tol must lie in (0, 1)");
    if (!(rho > 0.0)) throw DomainError("truncation_cutoff: rho must be positive");
    if (!(tau0 > 0.0 && tau0 <= 0.5 * kPi)) throw DomainError("truncation_cutoff: tau0 must lie in (0, pi/2]");
    const double c = decay_constant(omega, tau0);
    const double arg = std::log(1.0 / tol) / (c * rho);
    return arg <= 1.0 ? 0.0 : std::acosh(arg);
}

double ContourPiece::length() const {
    return kind == Kind::Curve ? std::abs(s1 - s0) : std::abs(z1 - z0);
}

cplx ContourPiece::point(cplx omega, double s) const {
    cplx w;
    if (kind == Kind::Curve) {
        double w1 = s0 + (s1 >= s0 ? s : -s);
        w = gamma_point(omega, alpha, w1);
    } else {
        w = z0 + (z1 - z0) * (s / length());
    }
    return reflect ? -w - 3.0 * kPi * kI : w;
}

cplx ContourPiece::tangent(cplx omega, double s) const {
    cplx d;
    if (kind == Kind::Curve) {
        double sg = s1 >= s0 ? 1.0 : -1.0;
        d = sg * gamma_tangent(omega, s0 + sg * s);
    } else {
        d = (z1 - z0) / length();
    }
    return reflect ? -d : d;
}

double default_loop_b(const ProblemParams& p) {
    double b = 0.0;
    for (double k : {p.k1, p.k2}) {
        double rp = std::abs(branch_point(p, k).p1.real());
        b = std::max({b, 2.0 * rp, rp + 0.3});
    }
    return b;
}

namespace {

ContourPiece curve(double alpha, double s0, double s1, bool reflect = false) {
    ContourPiece c;
    c.kind = ContourPiece::Kind::Curve;
    c.alpha = alpha;
    c.s0 = s0;
    c.s1 = s1;
    c.reflect = reflect;
    return c;
}

ContourPiece segment(cplx z0, cplx z1, bool reflect = false) {
    ContourPiece c;
    c.kind = ContourPiece::Kind::Segment;
    c.z0 = z0;
    c.z1 = z1;
    c.reflect = reflect;
    return c;
}

}  // namespace

Contour sommerfeld_double_loop(const ProblemParams& p, double b, double wmax) {
    validate_params(p);
    for (double k : {p.k1, p.k2})
        if (b < 2.0 * std::abs(branch_point(p, k).p1.real()) - 1e-12)
            throw GeometryError("sommerfeld_double_loop: b < 2|Re p1|");
    if (!(wmax > b)) throw GeometryError("sommerfeld_double_loop: wmax must exceed b");
    Contour c;
    c.label = "C(omega)";
    c.omega = p.omega;
    c.b = b;
    c.wmax = wmax;
    const double lo = -2.5 * kPi, hi = -0.5 * kPi;
    for (bool refl : {false, true}) {
        c.pieces.push_back(curve(lo, -wmax, -b, refl));
        c.pieces.push_back(segment(gamma_point(p.omega, lo, -b), gamma_point(p.omega, hi, -b), refl));
        c.pieces.push_back(curve(hi, -b, -wmax, refl));
    }
    return c;
}

Contour rectilinear_loop(const ProblemParams& p, double b, double wmax) {
    validate_params(p);
    if (!(wmax > b)) throw GeometryError("rectilinear_loop: wmax must exceed b");
    Contour c;
    c.label = "C(i)";
    c.omega = p.omega;
    c.b = b;
    c.wmax = wmax;
    const cplx lo = -2.5 * kPi * kI, hi = -0.5 * kPi * kI;
    for (bool refl : {false, true}) {
        c.pieces.push_back(segment(-wmax + lo, -b + lo, refl));
        c.pieces.push_back(segment(-b + lo, -b + hi, refl));
        c.pieces.push_back(segment(-b + hi, -wmax + hi, refl));
    }
    return c;
}

Contour decomposition_contour(const ProblemParams& p, double wmax, double eta) {
    validate_params(p);
    if (!(wmax > 0.0)) throw GeometryError("decomposition_contour: wmax must be positive");
    Contour c;
    c.label = "Gamma(-5pi/2) + Gamma(-pi/2)";
    c.omega = p.omega;
    c.wmax = wmax;
    c.eta = eta;
    c.pieces.push_back(curve(-2.5 * kPi + eta, -wmax, wmax));
    c.pieces.push_back(curve(-0.5 * kPi + eta, wmax, -wmax));
    return c;
}

Contour beta_hat(const ProblemParams& p, double wmax) {
    validate_params(p);
    Contour c;
    c.label = "beta";
    c.omega = p.omega;
    c.wmax = wmax;
    c.pieces.push_back(curve(0.5 * kPi - p.phi, 0.0, wmax));
    return c;
}

ContourPolyline discretize(const Contour& c, double panel_len, int order) {
    const auto& R = quad::clenshaw_curtis(order);
    ContourPolyline pl;
    pl.label = c.label;
    for (const auto& pc : c.pieces) {
        const double L = pc.length();
        const int np = std::max(1, int(std::ceil(L / panel_len)));
        const double h = L / np;
        for (int k = 0; k < np; ++k) {
            const double a = k * h;
            for (size_t j = 0; j < R.x.size(); ++j) {
                // shared panel endpoints are kept twice; weights stay exact
                double s = a + 0.5 * h * (R.x[j] + 1.0);
                cplx tg = pc.tangent(c.omega, s);
                double wt = 0.5 * h * R.w[j];
                pl.nodes.push_back({pc.point(c.omega, s), tg * wt, wt, tg * (0.5 * h * R.coarse_w[j])});
            }
        }
    }
    return pl;
}

ContourPolyline beta_hat_polyline(const ProblemParams& p, double wmax, int n) {
    if (n < 2) throw DomainError("beta_hat_polyline: need n >= 2");
    Contour c = beta_hat(p, wmax);
    const auto& pc = c.pieces[0];
    ContourPolyline pl;
    pl.label = c.label;
    std::vector<double> s(n);
    for (int j = 0; j < n; ++j) s[j] = 0.5 * wmax * (1.0 - std::cos(kPi * j / (n - 1)));
    for (int j = 0; j < n; ++j) {
        double left = j > 0 ? s[j] - s[j - 1] : 0.0;
        double right = j + 1 < n ? s[j + 1] - s[j] : 0.0;
        double wt = 0.5 * (left + right);
        cplx tg = pc.tangent(c.omega, s[j]);
        pl.nodes.push_back({pc.point(c.omega, s[j]), tg * wt, wt, cplx(0.0, 0.0)});
    }
    return pl;
}

cplx apply(const ContourPolyline& pl, const std::function<cplx(cplx)>& f) {
    cplx s = 0.0;
    for (const auto& nd : pl.nodes) s += f(nd.w) * nd.dw;
    return s;
}

namespace {

struct PanelOut {
    cplx fine, coarse;
    double mass;  // integral of |f dw|, sets the roundoff floor
};

PanelOut panel(const ContourPiece& pc, cplx omega, const std::function<cplx(cplx)>& f, double a, double b,
               const quad::NestedRule& R, int& count) {
    PanelOut o{0.0, 0.0, 0.0};
    const double h = 0.5 * (b - a);
    for (size_t j = 0; j < R.x.size(); ++j) {
        double s = a + h * (R.x[j] + 1.0);
        cplx v = f(pc.point(omega, s)) * pc.tangent(omega, s);
        o.fine += R.w[j] * v;
        o.coarse += R.coarse_w[j] * v;
        o.mass += R.w[j] * std::abs(v);
    }
    count += int(R.x.size());
    o.fine *= h;
    o.coarse *= h;
    o.mass *= h;
    return o;
}

void refine(const ContourPiece& pc, cplx omega, const std::function<cplx(cplx)>& f, double a, double b,
            PanelOut whole, double tol, int depth, const quad::NestedRule& R, QuadResult& out) {
    double diff = std::abs(whole.fine - whole.coarse);
    if (diff <= std::max(tol, 1e-14 * whole.mass) || depth <= 0) {
        out.value += whole.fine;
        out.est_err += diff;
        return;
    }
    double m = 0.5 * (a + b);
    PanelOut l = panel(pc, omega, f, a, m, R, out.nodes);
    PanelOut r = panel(pc, omega, f, m, b, R, out.nodes);
    refine(pc, omega, f, a, m, l, 0.5 * tol, depth - 1, R, out);
    refine(pc, omega, f, m, b, r, 0.5 * tol, depth - 1, R, out);
}

}  // namespace

QuadResult integrate(const Contour& c, const std::function<cplx(cplx)>& f, double abs_tol, double panel_len,
                     int max_depth) {
    const auto& R = quad::clenshaw_curtis(16);
    QuadResult out;
    out.value = 0.0;
    double total = 0.0;
    for (const auto& pc : c.pieces) total += pc.length();
    for (const auto& pc : c.pieces) {
        const double L = pc.length();
        const int np = std::max(1, int(std::ceil(L / panel_len)));
        const double h = L / np;
        for (int k = 0; k < np; ++k) {
            double a = k * h, b = (k + 1) * h;
            PanelOut w = panel(pc, c.omega, f, a, b, R, out.nodes);
            refine(pc, c.omega, f, a, b, w, abs_tol * h / total, max_depth, R, out);
        }
    }
    return out;
}

double distance_to(const Contour& c, cplx z, double step) {
    double d = std::numeric_limits<double>::infinity();
    for (const auto& pc : c.pieces) {
        const double L = pc.length();
        const int n = std::max(2, int(std::ceil(L / step)) + 1);
        for (int j = 0; j < n; ++j) d = std::min(d, std::abs(pc.point(c.omega, L * j / (n - 1)) - z));
    }
    return d;
}

void write_csv(const ContourPolyline& pl, std::ostream& os) {
    os << "re_w,im_w,re_dw,im_dw,weight\n";
    os << std::setprecision(17);
    for (const auto& nd : pl.nodes)
        os << nd.w.real() << ',' << nd.w.imag() << ',' << nd.dw.real() << ',' << nd.dw.imag() << ',' << nd.weight
           << '\n';
}

}  // namespace wedge
