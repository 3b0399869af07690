#include "wedge/solver.hpp"

#include <atomic>
#include <cmath>
#include <cstdlib>
#include <iomanip>
#include <limits>
#include <ostream>
#include <thread>

#include "json.hpp"
#include "wedge/quad.hpp"

namespace wedge {

const char* to_string(FieldMethod m) {
    switch (m) {
        case FieldMethod::FullContour: return "full_contour";
        case FieldMethod::Decomposed: return "decomposed";
        case FieldMethod::PrincipalValue: return "principal_value";
    }
    return "?";
}

namespace {

cplx prefactor(const KernelEngine& E) { return 1.0 / (4.0 * kPi * std::sin(E.phi())); }

// Cut-off with the kernel's linear growth folded into the bound.
double cutoff(const KernelEngine& E, double rho, double tau0, const SolverOptions& o) {
    const cplx om = E.omega();
    const double c = decay_constant(om, tau0);
    const double g = std::abs(std::sin(E.phi()) / E.phi()) + 2.0;
    double W = truncation_cutoff(om, tau0, rho, o.tail_tol);
    for (int it = 0; it < 4; ++it) {
        double arg = std::log(g * (2.0 + W) / o.tail_tol) / (c * rho);
        W = arg <= 1.0 ? 0.0 : std::acosh(arg);
    }
    return W;
}

// Checks the decay bound at every tail end of the contour.
void certify_tails(const Contour& C, const KernelEngine& E, double rho, const SolverOptions& o) {
    const double g = std::abs(std::sin(E.phi()) / E.phi()) + 2.0;
    for (const auto& pc : C.pieces) {
        for (double s : {0.0, pc.length()}) {
            cplx w = pc.point(C.omega, s);
            if (std::abs(std::abs(w.real()) - C.wmax) > 1e-9) continue;
            double bound = std::exp((-E.omega() * rho * std::sinh(w)).real()) * g * (2.0 + std::abs(w));
            if (bound > 10.0 * o.tail_tol)
                throw GeometryError("contour tail outside the decay region (bound " + std::to_string(bound) + ")");
        }
    }
}

cplx pole_of(const KernelEngine& E, double theta) { return -E.branch().p1 + kPi * kI - kI * theta; }

void check_pole_clearance(const Contour& C, const KernelEngine& E, double theta) {
    cplx z = pole_of(E, theta);
    double d = distance_to(C, z, 0.02);
    if (d < E.tolerances().pole_clearance)
        throw PoleError("kernel pole -p1+pi i-i theta within pole_clearance of the contour", z, d);
}

QuadResult run(const Contour& C, const KernelEngine& E, PolarPoint pt, const SolverOptions& o) {
    const cplx om = E.omega();
    const cplx it = kI * pt.theta;
    auto f = [&](cplx w) { return std::exp(-om * pt.rho * std::sinh(w)) * E.v1_fast(w + it); };
    return integrate(C, f, o.quad_tol / std::abs(prefactor(E)), o.panel_len);
}

}  // namespace

cplx u_plane(const KernelEngine& E, PolarPoint pt) {
    return std::exp(-E.omega() * pt.rho * std::sinh(E.branch().p1 + kI * pt.theta));
}

FieldSample u1_loop(const KernelEngine& E, PolarPoint pt, const SolverOptions& o, LoopKind loop) {
    if (!(pt.rho > 0.0)) throw DomainError("rho must be positive");
    if (!in_wedge(pt.theta, E.phi(), 1e-9)) throw DomainError("theta outside the wedge");
    const ProblemParams& p = E.params();
    ProblemParams pk = p;
    pk.k1 = pk.k2 = E.k();
    const double b = o.b > 0.0 ? o.b : default_loop_b(pk);
    const double W = std::max(cutoff(E, pt.rho, 0.5 * kPi, o), b + 1.0);
    Contour C = loop == LoopKind::Omega ? sommerfeld_double_loop(pk, b, W) : rectilinear_loop(pk, b, W);
    certify_tails(C, E, pt.rho, o);
    check_pole_clearance(C, E, pt.theta);
    QuadResult q = run(C, E, pt, o);
    FieldSample s;
    s.point = pt;
    s.value = prefactor(E) * q.value;
    s.method = FieldMethod::FullContour;
    s.est_quad_error = std::abs(prefactor(E)) * q.est_err;
    if (!std::isfinite(s.value.real()) || !std::isfinite(s.value.imag()))
        throw QuadratureError("non-finite loop integral");
    if (s.est_quad_error > 1e3 * o.quad_tol)
        throw QuadratureError("loop quadrature did not converge (est " + std::to_string(s.est_quad_error) + ")");
    return s;
}

FieldSample u1_field(const KernelEngine& E, PolarPoint pt, const SolverOptions& o, LoopKind loop) {
    if (o.auto_route && loop == LoopKind::Omega) {
        ProblemParams pk = E.params();
        pk.k1 = pk.k2 = E.k();
        const double b = o.b > 0.0 ? o.b : default_loop_b(pk);
        if (pt.rho * std::abs(E.omega()) * std::cosh(b) > o.hill_limit) {
            bool on_ray = std::abs(pt.theta - 1.5 * kPi) < 1e-12;
            return u1_decomposed(E, pt, o, on_ray);
        }
    }
    return u1_loop(E, pt, o, loop);
}

Decomposition decompose(const KernelEngine& E, PolarPoint pt, const SolverOptions& o, bool pv) {
    if (!(pt.rho > 0.0)) throw DomainError("rho must be positive");
    if (!in_wedge(pt.theta, E.phi(), 1e-9)) throw DomainError("theta outside the wedge");
    const double th = pt.theta, d = th - 1.5 * kPi;
    const cplx pref = prefactor(E);
    Decomposition out;
    out.u_p = u_plane(E, pt);

    if (std::abs(d) < 1e-12) {
        if (!pv) throw RayError("theta = 3pi/2: the decomposition needs the principal-value mode");
        const double W = cutoff(E, pt.rho, 0.5 * kPi, o);
        const cplx om = E.omega();
        const cplx ith = kI * th;
        auto f = [&](cplx w) { return std::exp(-om * pt.rho * std::sinh(w)) * E.v1_fast(w + ith); };
        const double ss = pole_of(E, th).real();
        const double dd = 0.5;
        Contour lower = decomposition_contour(E.params(), W, 0.0);
        lower.pieces.resize(1);
        Contour upper = lower;
        upper.pieces.clear();
        ContourPiece a = decomposition_contour(E.params(), W, 0.0).pieces[1];
        ContourPiece right = a, left = a;
        right.s0 = W;
        right.s1 = ss + dd;
        left.s0 = ss - dd;
        left.s1 = -W;
        upper.pieces = {right, left};
        certify_tails(lower, E, pt.rho, o);
        QuadResult q1 = integrate(lower, f, o.quad_tol / std::abs(pref), o.panel_len);
        QuadResult q2 = integrate(upper, f, o.quad_tol / std::abs(pref), o.panel_len);
        // symmetric pairs around the pole cancel its odd part (leftward orientation)
        const auto& R = quad::gauss_legendre(48);
        cplx mid = 0.0;
        for (size_t j = 0; j < R.x.size(); ++j) {
            double tau = 0.5 * dd * (R.x[j] + 1.0);
            double wt = 0.5 * dd * R.w[j];
            for (double sg : {1.0, -1.0}) {
                double s = ss + sg * tau;
                mid += wt * f(gamma_point(om, -0.5 * kPi, s)) * gamma_tangent(om, s);
            }
        }
        out.u_d = pref * (q1.value + q2.value - mid);
        out.u1 = out.u_d + 0.5 * out.u_p;
        out.method = FieldMethod::PrincipalValue;
        out.est_quad_error = std::abs(pref) * (q1.est_err + q2.est_err);
        return out;
    }

    const double eta = std::abs(d) < o.eta_band ? (d > 0 ? o.eta : -o.eta) : 0.0;
    const double W = cutoff(E, pt.rho, 0.5 * kPi - std::abs(eta), o);
    Contour C = decomposition_contour(E.params(), W, eta);
    certify_tails(C, E, pt.rho, o);
    check_pole_clearance(C, E, th);
    QuadResult q = run(C, E, pt, o);
    cplx ud_eta = pref * q.value;
    bool inside_eta = th > 1.5 * kPi - eta;
    bool inside = th > 1.5 * kPi;
    out.u1 = ud_eta + (inside_eta ? out.u_p : 0.0);
    out.u_d = out.u1 - (inside ? out.u_p : 0.0);
    out.method = FieldMethod::Decomposed;
    out.est_quad_error = std::abs(pref) * q.est_err;
    if (out.est_quad_error > 1e3 * o.quad_tol)
        throw QuadratureError("decomposition quadrature did not converge");
    return out;
}

FieldSample u1_decomposed(const KernelEngine& E, PolarPoint pt, const SolverOptions& o, bool pv) {
    Decomposition d = decompose(E, pt, o, pv);
    FieldSample s;
    s.point = pt;
    s.value = d.u1;
    s.method = d.method;
    s.est_quad_error = d.est_quad_error;
    return s;
}

FieldSample u2_field(const KernelEngine& E2, PolarPoint pt, const SolverOptions& o) {
    double th1 = theta_reflect(pt.theta, E2.phi());
    FieldSample s = u1_field(E2, {pt.rho, th1}, o);
    s.point = pt;
    return s;
}

FieldSample U_total(const KernelEngine& E1, const KernelEngine& E2, PolarPoint pt, const SolverOptions& o) {
    FieldSample a = u1_field(E1, pt, o);
    FieldSample b = u2_field(E2, pt, o);
    a.value += b.value;
    a.est_quad_error += b.est_quad_error;
    if (b.method != FieldMethod::FullContour) a.method = b.method;
    return a;
}

std::vector<double> grid_rhos(const GridSpec& g) {
    if (!(g.rho_min > 0.0) || !(g.rho_max >= g.rho_min) || g.n_rho < 1) throw DomainError("bad rho range");
    std::vector<double> r(g.n_rho);
    for (int j = 0; j < g.n_rho; ++j) {
        double f = g.n_rho == 1 ? 0.0 : double(j) / (g.n_rho - 1);
        r[j] = g.log_rho ? g.rho_min * std::pow(g.rho_max / g.rho_min, f) : g.rho_min + f * (g.rho_max - g.rho_min);
    }
    return r;
}

std::vector<double> grid_thetas(const GridSpec& g, double phi) {
    double lo = g.theta_min, hi = g.theta_max;
    if (lo == 0.0 && hi == 0.0) {
        lo = 2.0 * kPi - phi;
        hi = 2.0 * kPi;
    }
    if (!in_wedge(lo, phi, 1e-9) || !in_wedge(hi, phi, 1e-9) || hi < lo || g.n_theta < 1)
        throw DomainError("theta range must lie in [2pi-phi, 2pi]");
    std::vector<double> t(g.n_theta);
    for (int j = 0; j < g.n_theta; ++j) t[j] = g.n_theta == 1 ? lo : lo + (hi - lo) * j / (g.n_theta - 1);
    return t;
}

int default_threads() {
    if (const char* s = std::getenv("WEDGE_THREADS")) {
        int n = std::atoi(s);
        if (n > 0) return n;
    }
    unsigned h = std::thread::hardware_concurrency();
    return h ? int(h) : 1;
}

std::vector<FieldSample> grid_eval(const GridSpec& g, const KernelEngine& E1, const KernelEngine* E2,
                                   const SolverOptions& o, int threads) {
    const auto rhos = grid_rhos(g);
    const auto ths = grid_thetas(g, E1.phi());
    const int nr = int(rhos.size()), nt = int(ths.size());
    std::vector<FieldSample> out(size_t(nr) * nt);
    std::atomic<int> next{0};
    auto worker = [&]() {
        for (int row; (row = next.fetch_add(1)) < nt;) {
            for (int j = 0; j < nr; ++j) {
                PolarPoint pt{rhos[j], ths[row]};
                FieldSample& s = out[size_t(row) * nr + j];
                try {
                    s = E2 ? U_total(E1, *E2, pt, o) : u1_field(E1, pt, o);
                } catch (const std::exception& e) {
                    s.point = pt;
                    s.value = cplx(std::numeric_limits<double>::quiet_NaN(), std::numeric_limits<double>::quiet_NaN());
                    s.error = e.what();
                }
            }
        }
    };
    if (threads <= 0) threads = default_threads();
    threads = std::max(1, std::min(threads, nt));
    std::vector<std::thread> pool;
    for (int i = 1; i < threads; ++i) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();
    return out;
}

std::array<cplx, 2> gradient_u1(const KernelEngine& E, PolarPoint pt, const SolverOptions& o) {
    const double hr = 1e-2 * pt.rho, ht = 1e-2;
    auto u = [&](double r, double t) { return u1_field(E, {r, t}, o).value; };
    cplx dr = (u(pt.rho + hr, pt.theta) - u(pt.rho - hr, pt.theta)) / (2.0 * hr);
    const double phi = E.phi();
    cplx dt;
    if (in_wedge(pt.theta - ht, phi) && in_wedge(pt.theta + ht, phi)) {
        dt = (u(pt.rho, pt.theta + ht) - u(pt.rho, pt.theta - ht)) / (2.0 * ht);
    } else {
        double sg = in_wedge(pt.theta + 2.0 * ht, phi) ? 1.0 : -1.0;
        dt = sg * (-3.0 * u(pt.rho, pt.theta) + 4.0 * u(pt.rho, pt.theta + sg * ht) - u(pt.rho, pt.theta + 2.0 * sg * ht)) /
             (2.0 * ht);
    }
    return {dr, dt / pt.rho};
}

OriginProbe origin_probe(const KernelEngine& E, double theta, const std::vector<double>& ladder, const SolverOptions& o) {
    if (ladder.size() < 2) throw DomainError("origin_probe needs at least two radii");
    for (size_t j = 1; j < ladder.size(); ++j)
        if (!(ladder[j] < ladder[j - 1] && ladder[j] > 0.0)) throw DomainError("rho ladder must decrease");
    OriginProbe P;
    P.rhos = ladder;
    for (double r : ladder) {
        P.values.push_back(u1_field(E, {r, theta}, o).value);
        auto g = gradient_u1(E, {r, theta}, o);
        P.grad_norms.push_back(std::sqrt(std::norm(g[0]) + std::norm(g[1])));
    }
    // least-squares slope of log|grad u| against log rho
    const size_t n = ladder.size();
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (size_t j = 0; j < n; ++j) {
        double x = std::log(ladder[j]), y = std::log(P.grad_norms[j]);
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    double slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
    double icpt = (sy - slope * sx) / n;
    double res = 0.0;
    for (size_t j = 0; j < n; ++j)
        res = std::max(res, std::abs(std::log(P.grad_norms[j]) - (icpt + slope * std::log(ladder[j]))));
    P.grad_exponent = slope;
    P.fit_residual = res;
    // limit of u: geometric-tail (Aitken) extrapolation on the last three values
    P.C_theta = P.values.back();
    if (n >= 3) {
        cplx d0 = P.values[n - 2] - P.values[n - 3], d1 = P.values[n - 1] - P.values[n - 2];
        if (std::abs(d0) > 0.0) {
            cplx r = d1 / d0;
            if (std::abs(r) < 0.9) P.C_theta = P.values[n - 1] + d1 * r / (1.0 - r);
        }
    }
    if (res > 0.2) throw FitError("origin_probe: log-log fit residual " + std::to_string(res) + " exceeds 0.2");
    return P;
}

void write_field_csv(std::ostream& os, const std::vector<FieldSample>& s, const ProblemParams& p,
                     const std::string& timestamp) {
    nlohmann::ordered_json meta;
    meta["omega_re"] = p.omega.real();
    meta["omega_im"] = p.omega.imag();
    meta["phi"] = p.phi;
    meta["k1"] = p.k1;
    meta["k2"] = p.k2;
    meta["rows"] = s.size();
    os << "# " << meta.dump() << '\n';
    os << "# timestamp: " << timestamp << '\n';
    os << "rho,theta,re_u,im_u,abs_u,method,est_err\n";
    os << std::setprecision(17);
    for (const auto& x : s) {
        os << x.point.rho << ',' << x.point.theta << ',' << x.value.real() << ',' << x.value.imag() << ','
           << std::abs(x.value) << ',' << (x.error.empty() ? to_string(x.method) : "error") << ',' << x.est_quad_error
           << '\n';
    }
}

}  // namespace wedge
