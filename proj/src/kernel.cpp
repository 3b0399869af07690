#include "wedge/kernel.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstring>
#include <limits>
#include <mutex>
#include <shared_mutex>
#include <unordered_map>

#include "wedge/quad.hpp"

namespace wedge {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

inline void upd(double* dist, double d) {
    if (dist && d < *dist) *dist = d;
}

inline cplx coth(cplx z) { return 1.0 / std::tanh(z); }

struct KeyHash {
    size_t operator()(const std::pair<uint64_t, uint64_t>& k) const {
        return std::hash<uint64_t>()(k.first * 0x9E3779B97F4A7C15ULL ^ k.second);
    }
};

std::pair<uint64_t, uint64_t> key_of(cplx w) {
    double a = w.real(), b = w.imag();
    uint64_t x, y;
    std::memcpy(&x, &a, 8);
    std::memcpy(&y, &b, 8);
    return {x, y};
}

}  // namespace

cplx t_minus_one(cplx w, double phi) {
    cplx x = kPi * (w - 0.5 * kPi * kI) / (2.0 * phi);
    cplx s = std::sinh(x);
    return 1.0 / (s * s);
}

cplx t_map(cplx w, double phi) {
    cplx x = kPi * (w - 0.5 * kPi * kI) / (2.0 * phi);
    if (std::abs(x) < 1e-300) throw PoleError("t(w) has a pole at w = pi i/2", 0.5 * kPi * kI, std::abs(w - 0.5 * kPi * kI));
    cplx c = coth(x);
    return c * c;
}

cplx dt_map(cplx w, double phi) {
    cplx x = kPi * (w - 0.5 * kPi * kI) / (2.0 * phi);
    if (std::abs(x) < 1e-300) throw PoleError("t'(w) has a pole at w = pi i/2", 0.5 * kPi * kI, std::abs(w - 0.5 * kPi * kI));
    cplx s = std::sinh(x);
    return -(kPi / phi) * coth(x) / (s * s);
}

// One horizontal integration line Im w' = lambda for the Cauchy integral, sampled at
// x_j = j h, j = -M..M. c holds h G2 t' / (4 pi i); u holds t - 1.
struct CauchyLine {
    double lambda;
    std::vector<cplx> c;
    std::vector<cplx> u;
};

struct G2Pole {
    cplx z;
    cplx res;
    double offset;
};

struct KernelEngine::Impl {
    double base = 0.0;  // offset of the base curve
    double h0 = 0.0;
    int M = 0;
    double wc = 0.0;
    std::vector<CauchyLine> lines;
    std::vector<G2Pole> poles;
    std::vector<double> tpole_im;

    mutable std::shared_mutex mu;
    mutable std::unordered_map<std::pair<uint64_t, uint64_t>, cplx, KeyHash> cache;
};

KernelEngine::KernelEngine(const ProblemParams& p, double k, const Tolerances& tol, const KernelOptions& opt)
    : p_(validate_params(p)), k_(k), tol_(tol), opt_(opt), impl_(std::make_unique<Impl>()) {
    validate_tolerances(tol_);
    if (!(opt_.w_switch > 2.0)) throw DomainError("w_switch must exceed 2");
    if (!(opt_.cauchy_h > 0.0 && opt_.cauchy_h < 0.2)) throw DomainError("cauchy_h out of range");
    bp_ = branch_point(p_, k_);
    kind_ = std::abs(p_.phi - 1.5 * kPi) < opt_.phi_switch_eps ? KernelKind::Elementary : KernelKind::CauchyBuilt;
    if (kind_ == KernelKind::CauchyBuilt) build_cauchy();
}

KernelEngine::~KernelEngine() = default;

cplx KernelEngine::q1() const { return -bp_.p1 - kPi * kI + 2.0 * kI * p_.phi; }

void KernelEngine::throw_if_close(const char* what, cplx w, double dist) const {
    if (dist < tol_.pole_clearance)
        throw PoleError(std::string(what) + ": evaluation point within pole_clearance of a pole", w, dist);
}

// ---------------------------------------------------------------- elementary pieces

cplx KernelEngine::G_raw(cplx w, double* dist) const {
    const cplx iw = kI * p_.omega;
    const double phi = p_.phi;
    if (std::abs(w.real()) > 1.0) {
        // divided through by sinh w to stay finite far out
        cplx s = std::sinh(w);
        cplx num = iw * (std::cos(phi) - kI * std::sin(phi) * coth(w));
        cplx den = iw + k_ / s;
        if (dist && std::abs(w.real()) < 40.0) upd(dist, std::abs(den * s) / std::abs(iw * std::cosh(w)));
        return num / den;
    }
    cplx s = std::sinh(w);
    cplx den = iw * s + k_;
    upd(dist, std::abs(den) / std::abs(iw * std::cosh(w)));
    return iw * std::sinh(w - kI * phi) / den;
}

cplx KernelEngine::G2_raw(cplx w, double* dist) const {
    cplx h2 = -w + kPi * kI - 2.0 * kI * p_.phi;
    return G_raw(w, dist) - G_raw(h2, dist);
}

cplx KernelEngine::T_raw(cplx w, cplx r, cplx q, double* dist) const {
    const double a = kPi / (2.0 * p_.phi);
    cplx t1 = std::tanh(a * (w - q));
    cplx t2 = std::tanh(a * (-w + kPi * kI - q));
    upd(dist, std::abs(t1) / a);
    upd(dist, std::abs(t2) / a);
    return a * r * (1.0 / t1 + 1.0 / t2);
}

cplx KernelEngine::m_raw(cplx w, double* dist) const {
    const cplx om2 = p_.omega * p_.omega;
    const double k2 = k_ * k_;
    cplx g2;
    if (std::abs(w.real()) > 1.0) {
        cplx s = std::sinh(w);
        cplx den = om2 + k2 / (s * s);
        g2 = 2.0 * kI * om2 * coth(w) / den;
        if (dist && std::abs(w.real()) < 40.0) upd(dist, std::abs(den * s * s) / std::abs(om2 * std::sinh(2.0 * w)));
    } else {
        cplx s = std::sinh(w);
        cplx den = om2 * s * s + k2;
        upd(dist, std::abs(den) / std::abs(om2 * std::sinh(2.0 * w)));
        g2 = kI * om2 * std::sinh(2.0 * w) / den;
    }
    return (kPi + 2.0 * kI * w) / (6.0 * kPi) * g2;
}

cplx KernelEngine::m_coef(int j) const {
    const cplx a = -bp_.p1 / (3.0 * kPi);
    switch (j) {
        case 1: return a + kI / 6.0;
        case 2: return a - kI / 6.0;
        case 3: return a + kI / 2.0;
        case 4: return a - kI / 2.0;
        case 5: return a + 5.0 * kI / 6.0;
        case 6: return -a + 5.0 * kI / 6.0;
        default: throw DomainError("m_coef index must be 1..6");
    }
}

cplx KernelEngine::Q_raw(cplx w, double* dist) const {
    const cplx p1 = bp_.p1, pi_i = kPi * kI;
    const cplx m1 = m_coef(1), m2 = m_coef(2), m3 = m_coef(3);
    auto ct = [&](cplx c) {
        cplx th = std::tanh((w - c) / 3.0);
        upd(dist, 3.0 * std::abs(th));
        return 1.0 / th;
    };
    // Each bracket pairs a pole with its h1-image (mod 3 pi i).
    cplx q1 = (kI - m1) / 3.0 * (ct(p1) - ct(-p1 + pi_i));
    cplx q2 = -m2 / 3.0 * (ct(p1 + pi_i) - ct(-p1));
    cplx q3 = -m3 / 3.0 * (ct(p1 - pi_i) - ct(-p1 - pi_i));
    return q1 + q2 + q3;
}

// ---------------------------------------------------------------- Cauchy-built branch

void KernelEngine::build_cauchy() {
    Impl& I = *impl_;
    const double phi = p_.phi;
    const cplx om = p_.omega;
    const double ainf = std::atan(om.real() / om.imag());
    I.base = 0.5 * kPi - phi;
    I.h0 = opt_.cauchy_h;
    I.wc = phi / kPi * 36.0 + opt_.w_switch + 2.0;
    I.M = int(std::ceil(I.wc / I.h0));

    // poles of G2 near the base curve: P = {p1 + 2 pi i n} (res r2), {-p1 - pi i + 2 pi i n} (res r1),
    // and their h2-images, which carry the same residue
    const double span = phi + kPi + 1.0;
    for (int n = -4; n <= 4; ++n) {
        cplx a = bp_.p1 + 2.0 * kPi * n * kI;
        cplx b = -bp_.p1 - kPi * kI + 2.0 * kPi * n * kI;
        for (auto [z, r] : {std::pair{a, bp_.r2}, std::pair{b, bp_.r1}}) {
            for (cplx zz : {z, -z + kPi * kI - 2.0 * kI * phi}) {
                double off = curve_offset(om, zz);
                if (std::abs(off - I.base) < span) I.poles.push_back({zz, r, off});
            }
        }
    }
    for (int n = -2; n <= 2; ++n) I.tpole_im.push_back(0.5 * kPi + 2.0 * phi * n);

    const double half = 0.5 * phi + ainf;
    const double dl = phi / 24.0;
    const int K = int(std::ceil(half / dl));
    for (int kk = -K; kk <= K; ++kk) {
        CauchyLine L;
        L.lambda = I.base + kk * dl;
        L.c.resize(2 * I.M + 1);
        L.u.resize(2 * I.M + 1);
        for (int j = -I.M; j <= I.M; ++j) {
            cplx w(j * I.h0, L.lambda);
            cplx x = kPi * (w - 0.5 * kPi * kI) / (2.0 * phi);
            cplx s = std::sinh(x);
            cplx u = 1.0 / (s * s);
            cplx tp = -(kPi / phi) * coth(x) * u;
            L.u[j + I.M] = u;
            L.c[j + I.M] = I.h0 * G2_raw(w, nullptr) * tp / (4.0 * kPi * kI);
        }
        I.lines.push_back(std::move(L));
    }

    // C from the regularized integral along the base curve, deformed to a
    // vertical piece plus a horizontal ray Im w = lamJ.
    const cplx ginf = -2.0 * kI * std::sin(phi);
    auto integrand = [&](cplx w) {
        cplx x = kPi * (w - 0.5 * kPi * kI) / (2.0 * phi);
        return (G2_raw(w, nullptr) - ginf) * (-(kPi / phi) * coth(x));
    };
    double lamJ = I.base, bestd = -1.0;
    for (int j = -12; j <= 12; ++j) {
        double lam = I.base + 0.05 * j;
        double d = std::abs(lam - 0.5 * kPi);
        for (auto& P : I.poles)
            if (P.z.real() > -0.5) d = std::min(d, std::abs(P.z.imag() - lam));
        for (auto& P : I.poles)
            if (std::abs(P.z.imag() - lam) < 0.5) d = std::min(d, std::abs(P.z.real()) + std::abs(P.z.imag() - lam));
        if (d > bestd + 1e-12) {
            bestd = d;
            lamJ = lam;
        }
    }
    const double atol = 1e-15;
    cplx J = 0.0;
    if (lamJ != I.base) {
        J += quad::adaptive([&](double s) { return integrand(cplx(0.0, s)) * kI; }, I.base, lamJ, atol);
    }
    const double edges[] = {0.0, 0.5, 1.5, 3.0, 6.0, 10.0, 16.0, 24.0, 34.0, 48.0, 64.0};
    for (int e = 0; e + 1 < int(std::size(edges)); ++e)
        J += quad::adaptive([&](double x) { return integrand(cplx(x, lamJ)); }, edges[e], edges[e + 1], atol);
    // base curve minus path = +/- 2 pi i (residues in between)
    for (auto& P : I.poles) {
        if (!(P.z.real() > 0.0)) continue;
        cplx x = kPi * (P.z - 0.5 * kPi * kI) / (2.0 * phi);
        cplx res = P.res * (-(kPi / phi) * coth(x));
        const double y = P.z.imag(), c = y - P.offset + I.base;  // curve height at Re z
        if (c < y && y < lamJ) J += 2.0 * kPi * kI * res;
        if (lamJ < y && y < c) J -= 2.0 * kPi * kI * res;
    }
    C_ = J / (2.0 * kPi * kI);
    // a1 = (sin Phi / Phi)(w - pi i/2) + o(1) fixes the additive constant
    C2_ = std::sin(phi) / kPi * std::log(4.0) - C_ + opt_.c2_perturbation;
}

// Cauchy integral (1/2 pi i) int_beta G2 t'/(t - t(w)) dw', for an anchor whose
// curve offset lies in [base, base + 2 Phi). The anchor decides the side of the
// arc for points on it: preimages w + 2i Phi n and h1 w + 2i Phi n count as
// above the base curve iff n >= 0.
cplx KernelEngine::cauchy_F(cplx w) const {
    const Impl& I = *impl_;
    const double phi = p_.phi;
    const cplx u0 = t_minus_one(w, phi);
    // t = infinity at the fixed point of h1: the Cauchy sum and pole terms vanish there
    const bool at_inf = !std::isfinite(u0.real()) || !std::isfinite(u0.imag());

    struct Pre {
        cplx z;
        bool above;
    };
    Pre pre[10];
    int np = 0;
    const cplx h1w = -w + kPi * kI;
    for (int n = -2; n <= 2; ++n) {
        pre[np++] = {w + 2.0 * kI * phi * double(n), n >= 0};
        pre[np++] = {h1w + 2.0 * kI * phi * double(n), n >= 0};
    }

    // line maximizing the distance to every singularity of the integrand
    int best = 0;
    double bestd = -1.0;
    for (int l = 0; l < int(I.lines.size()); ++l) {
        double lam = I.lines[l].lambda, d = kInf;
        for (int i = 0; i < np; ++i) d = std::min(d, std::abs(pre[i].z.imag() - lam));
        for (auto& P : I.poles) d = std::min(d, std::abs(P.z.imag() - lam));
        for (double y : I.tpole_im) d = std::min(d, std::abs(y - lam));
        if (d > bestd) {
            bestd = d;
            best = l;
        }
    }
    const CauchyLine& L = I.lines[best];
    const double lam = L.lambda;

    int stride = int(std::floor(2.0 * kPi * bestd / (38.0 * I.h0)));
    stride = std::clamp(stride, 1, 16);
    double X = phi / kPi * (37.0 + std::max(0.0, std::log(2.0 / std::abs(u0))));
    X = std::min(X, I.wc);
    int J = int(std::ceil(X / I.h0));
    J -= J % stride;
    J = std::min(J, I.M - I.M % stride);

    double sr = 0.0, si = 0.0;
    const double ur = u0.real(), ui = u0.imag();
    for (int j = -J; j <= J && !at_inf; j += stride) {
        const cplx& c = L.c[j + I.M];
        const cplx& u = L.u[j + I.M];
        double dr = u.real() - ur, di = u.imag() - ui;
        double inv = 1.0 / (dr * dr + di * di);
        double cr = c.real(), ci = c.imag();
        sr += (cr * dr + ci * di) * inv;
        si += (ci * dr - cr * di) * inv;
    }
    cplx F = double(stride) * cplx(sr, si);

    // half residues of everything between the base curve and the line
    for (int i = 0; i < np; ++i) {
        const cplx z = pre[i].z;
        if (pre[i].above && z.imag() < lam) F += 0.5 * G2_raw(z, nullptr);
        if (!pre[i].above && z.imag() > lam) F -= 0.5 * G2_raw(z, nullptr);
    }
    for (auto& P : I.poles) {
        bool above = P.offset > I.base;
        int sg = (above && P.z.imag() < lam) ? 1 : (!above && P.z.imag() > lam) ? -1 : 0;
        if (!sg || at_inf) continue;
        F += 0.5 * sg * P.res * dt_map(P.z, phi) / (t_minus_one(P.z, phi) - u0);
    }
    return F;
}

cplx KernelEngine::a1_raw(cplx w, double* dist) const {
    if (kind_ != KernelKind::CauchyBuilt) throw BranchError("a1_hat requires the Cauchy-built branch");
    const double phi = p_.phi, base = impl_->base;
    const cplx step = 2.0 * kI * phi;
    cplx acc = 0.0;
    int guard = 0;
    while (curve_offset(p_.omega, w) >= base + 2.0 * phi) {
        w -= step;
        acc -= G2_raw(w, dist);
        if (++guard > 64) throw DomainError("a1_hat: point too far from the base strip");
    }
    while (curve_offset(p_.omega, w) < base) {
        acc += G2_raw(w, dist);
        w += step;
        if (++guard > 64) throw DomainError("a1_hat: point too far from the base strip");
    }
    return cauchy_F(w) + C2_ + acc;
}

cplx KernelEngine::v11_raw(cplx w, double* dist, bool allow_switch) const {
    if (kind_ == KernelKind::Elementary) return m_raw(w, dist) + Q_raw(w, dist);
    if (allow_switch && std::abs(w.real()) >= opt_.w_switch) return v11_asymptotic(w);
    cplx v = a1_raw(w, dist) + T_raw(w, bp_.r2, bp_.p1, dist);
    if (p_.phi > 1.5 * kPi) v += T_raw(w, bp_.r1, q1(), dist);
    return v;
}

// ---------------------------------------------------------------- public API

cplx KernelEngine::G_hat(cplx w) const {
    double d = kInf;
    cplx v = G_raw(w, &d);
    throw_if_close("G_hat", w, d);
    return v;
}

cplx KernelEngine::G2_hat(cplx w) const {
    double d = kInf;
    cplx v = G2_raw(w, &d);
    throw_if_close("G2_hat", w, d);
    return v;
}

cplx KernelEngine::t(cplx w) const {
    if (std::abs(w - 0.5 * kPi * kI) < tol_.pole_clearance)
        throw PoleError("t_map: w at the pole pi i/2", 0.5 * kPi * kI, std::abs(w - 0.5 * kPi * kI));
    return t_map(w, p_.phi);
}

cplx KernelEngine::dt(cplx w) const {
    if (std::abs(w - 0.5 * kPi * kI) < tol_.pole_clearance)
        throw PoleError("dt_map: w at the pole pi i/2", 0.5 * kPi * kI, std::abs(w - 0.5 * kPi * kI));
    return dt_map(w, p_.phi);
}

cplx KernelEngine::a1_hat(cplx w) const {
    if (std::abs(w.real()) >= opt_.w_switch) {
        if (kind_ != KernelKind::CauchyBuilt) throw BranchError("a1_hat requires the Cauchy-built branch");
        double sg = w.real() > 0 ? 1.0 : -1.0;
        return sg * std::sin(p_.phi) / p_.phi * (w - 0.5 * kPi * kI);
    }
    double d = kInf;
    cplx v = a1_raw(w, &d);
    throw_if_close("a1_hat", w, d);
    return v;
}

cplx KernelEngine::T1(cplx w) const {
    double d = kInf;
    cplx v = T_raw(w, bp_.r1, q1(), &d);
    throw_if_close("T1", w, d);
    return v;
}

cplx KernelEngine::T2(cplx w) const {
    double d = kInf;
    cplx v = T_raw(w, bp_.r2, bp_.p1, &d);
    throw_if_close("T2", w, d);
    return v;
}

cplx KernelEngine::m_func(cplx w) const {
    double d = kInf;
    cplx v = m_raw(w, &d);
    throw_if_close("m_func", w, d);
    return v;
}

cplx KernelEngine::Q_func(cplx w) const {
    double d = kInf;
    cplx v = Q_raw(w, &d);
    throw_if_close("Q_func", w, d);
    return v;
}

cplx KernelEngine::v11_hat(cplx w) const {
    double d = kInf;
    cplx v = v11_raw(w, &d, true);
    throw_if_close("v11_hat", w, d);
    return v;
}

cplx KernelEngine::v1_hat(cplx w) const {
    double d = kInf;
    cplx v = v11_raw(w, &d, true);
    if (kind_ == KernelKind::CauchyBuilt && std::abs(w.real()) >= opt_.w_switch)
        v -= std::exp(-(w.real() > 0 ? 1.0 : -1.0) * kI * p_.phi);
    else
        v -= G_raw(w, &d);
    throw_if_close("v1_hat", w, d);
    return v;
}

cplx KernelEngine::v11_direct(cplx w) const {
    double d = kInf;
    cplx v = v11_raw(w, &d, false);
    throw_if_close("v11_direct", w, d);
    return v;
}

cplx KernelEngine::v1_direct(cplx w) const {
    double d = kInf;
    cplx v = v11_raw(w, &d, false) - G_raw(w, &d);
    throw_if_close("v1_direct", w, d);
    return v;
}

cplx KernelEngine::v11_asymptotic(cplx w) const {
    double sg = w.real() > 0 ? 1.0 : -1.0;
    return sg * std::sin(p_.phi) / p_.phi * (w - 0.5 * kPi * kI);
}

cplx KernelEngine::v1_asymptotic(cplx w) const {
    if (std::abs(w.real()) < opt_.w_switch) throw DomainError("v1_asymptotic: |Re w| below w_switch");
    double sg = w.real() > 0 ? 1.0 : -1.0;
    // G tends to exp(-i Phi) on the right and exp(+i Phi) on the left
    return v11_asymptotic(w) - std::exp(-sg * kI * p_.phi);
}

cplx KernelEngine::dv1_asymptotic(cplx w) const {
    if (std::abs(w.real()) < opt_.w_switch) throw DomainError("dv1_asymptotic: |Re w| below w_switch");
    double sg = w.real() > 0 ? 1.0 : -1.0;
    return sg * std::sin(p_.phi) / p_.phi;
}

cplx KernelEngine::v1_fast(cplx w) const {
    if (!opt_.memoize) {
        cplx v = v11_raw(w, nullptr, true);
        if (kind_ == KernelKind::CauchyBuilt && std::abs(w.real()) >= opt_.w_switch)
            return v - std::exp(-(w.real() > 0 ? 1.0 : -1.0) * kI * p_.phi);
        return v - G_raw(w, nullptr);
    }
    auto key = key_of(w);
    {
        std::shared_lock lk(impl_->mu);
        auto it = impl_->cache.find(key);
        if (it != impl_->cache.end()) return it->second;
    }
    cplx v = v11_raw(w, nullptr, true);
    if (kind_ == KernelKind::CauchyBuilt && std::abs(w.real()) >= opt_.w_switch)
        v -= std::exp(-(w.real() > 0 ? 1.0 : -1.0) * kI * p_.phi);
    else
        v -= G_raw(w, nullptr);
    std::unique_lock lk(impl_->mu);
    if (impl_->cache.size() < (size_t(1) << 22)) impl_->cache.emplace(key, v);
    return v;
}

size_t KernelEngine::cache_size() const {
    std::shared_lock lk(impl_->mu);
    return impl_->cache.size();
}

// ---------------------------------------------------------------- t-plane access

namespace {

// all w with t(w) = t in a window of strips, first the principal inverse
cplx principal_preimage(cplx t, double phi) {
    cplx r = std::sqrt(t);
    cplx x = std::atanh(1.0 / r);
    return 0.5 * kPi * kI + 2.0 * phi * x / kPi;
}

}  // namespace

cplx KernelEngine::cauchy_a1_check(cplx t, BoundarySide side) const {
    if (kind_ != KernelKind::CauchyBuilt) throw BranchError("cauchy_a1_check requires the Cauchy-built branch");
    const double phi = p_.phi, base = impl_->base;
    const cplx w0 = principal_preimage(t, phi);
    // candidates: the h1-orbit shifted by 2i Phi
    std::vector<cplx> cands;
    for (int n = -3; n <= 3; ++n) {
        cands.push_back(w0 + 2.0 * kI * phi * double(n));
        cands.push_back(-w0 + kPi * kI + 2.0 * kI * phi * double(n));
    }
    if (side == BoundarySide::Interior) {
        double near = kInf;
        cplx anchor;
        bool have = false;
        for (cplx z : cands) {
            double off = curve_offset(p_.omega, z);
            near = std::min(near, std::abs(off - base));
            if (!have && off >= base && off < base + 2.0 * phi) {
                anchor = z;
                have = true;
            }
        }
        if (near < tol_.pole_clearance) throw NearArcError("cauchy_a1_check: t is within pole_clearance of the arc");
        if (!have) throw GeometryError("cauchy_a1_check: no preimage in the base strip");
        return cauchy_F(anchor);
    }
    // on the arc: locate the preimage on the right half of the base curve
    cplx wb;
    double bestd = kInf;
    for (cplx z : cands) {
        if (z.real() < -1e-12) continue;
        double d = std::abs(curve_offset(p_.omega, z) - base);
        if (d < bestd) {
            bestd = d;
            wb = z;
        }
    }
    if (bestd > 1e-6) throw GeometryError("cauchy_a1_check: t is not on the arc");
    wb = cplx(wb.real(), base + gamma0_offset(p_.omega, wb.real()));
    if (side == BoundarySide::Plus) return cauchy_F(wb);
    return cauchy_F(-wb + kPi * kI - 2.0 * kI * phi);
}

cplx KernelEngine::G2_check(cplx t) const {
    if (kind_ != KernelKind::CauchyBuilt) throw BranchError("G2_check requires the Cauchy-built branch");
    const double phi = p_.phi, base = impl_->base;
    if (std::abs(t - 1.0) < 1e-14) return -2.0 * kI * std::sin(phi);
    const cplx w0 = principal_preimage(t, phi);
    cplx wb;
    double bestd = kInf;
    for (int n = -3; n <= 3; ++n) {
        for (cplx z : {w0 + 2.0 * kI * phi * double(n), -w0 + kPi * kI + 2.0 * kI * phi * double(n)}) {
            if (z.real() < -1e-12) continue;
            double d = std::abs(curve_offset(p_.omega, z) - base);
            if (d < bestd) {
                bestd = d;
                wb = z;
            }
        }
    }
    return G2_raw(wb, nullptr);
}

std::array<cplx, 4> KernelEngine::const_C_ladder() const {
    if (kind_ != KernelKind::CauchyBuilt) throw BranchError("const_C_ladder requires the Cauchy-built branch");
    const double phi = p_.phi;
    const double ainf = std::atan(p_.omega.real() / p_.omega.imag());
    // the arc reaches t = 1 from direction -exp(-i pi ainf / Phi); step the other way
    const cplx dir = std::exp(-kI * kPi * ainf / phi);
    const double slope = std::sin(phi) / kPi;
    std::array<cplx, 4> out;
    const double ds[3] = {1e-2, 1e-3, 1e-4};
    for (int i = 0; i < 3; ++i) {
        cplx tt = 1.0 + ds[i] * dir;
        out[i] = cauchy_a1_check(tt) - slope * std::log(1.0 / (ds[i] * dir));
    }
    // linear-in-delta extrapolation from the two smallest steps
    out[3] = out[2] + (out[2] - out[1]) * (ds[2] / (ds[1] - ds[2]));
    return out;
}

std::vector<KernelPole> KernelEngine::pole_list() const {
    const cplx p1 = bp_.p1, pi_i = kPi * kI;
    std::vector<KernelPole> v = {
        {"p1", p1},
        {"-p1-pi*i", -p1 - pi_i},
        {"-p1+pi*i", -p1 + pi_i},
        {"p1-2pi*i", p1 - 2.0 * pi_i},
        {"-p1", -p1},
        {"p1+pi*i", p1 + pi_i},
        {"p1-pi*i", p1 - pi_i},
    };
    if (kind_ == KernelKind::CauchyBuilt) {
        v.push_back({"q1", q1()});
        v.push_back({"-q1+pi*i", -q1() + pi_i});
        v.push_back({"p1+2pi*i", p1 + 2.0 * pi_i});
    } else {
        v.push_back({"-p1+2pi*i", -p1 + 2.0 * pi_i});
        v.push_back({"-p1-2pi*i", -p1 - 2.0 * pi_i});
    }
    return v;
}

}  // namespace wedge
