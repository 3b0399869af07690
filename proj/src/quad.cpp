#include "wedge/quad.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>

namespace wedge::quad {

namespace {

constexpr double kPi = 3.14159265358979323846;

Rule make_gl(int n) {
    Rule r;
    r.x.resize(n);
    r.w.resize(n);
    for (int i = 0; i < (n + 1) / 2; ++i) {
        double z = std::cos(kPi * (i + 0.75) / (n + 0.5));
        double dp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = z;
            for (int k = 2; k <= n; ++k) {
                double p2 = ((2.0 * k - 1.0) * z * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            if (n == 1) p0 = 1.0, p1 = z;
            dp = n * (z * p1 - p0) / (z * z - 1.0);
            double dz = p1 / dp;
            z -= dz;
            if (std::abs(dz) < 1e-16) break;
        }
        double p0 = 1.0, p1 = z;
        for (int k = 2; k <= n; ++k) {
            double p2 = ((2.0 * k - 1.0) * z * p1 - (k - 1.0) * p0) / k;
            p0 = p1;
            p1 = p2;
        }
        dp = n * (z * p1 - p0) / (z * z - 1.0);
        r.x[i] = -z;
        r.x[n - 1 - i] = z;
        r.w[i] = r.w[n - 1 - i] = 2.0 / ((1.0 - z * z) * dp * dp);
    }
    return r;
}

std::vector<double> cc_weights(int n) {
    // classical Clenshaw-Curtis weights for nodes cos(k pi / n), k = 0..n
    std::vector<double> w(n + 1, 0.0);
    for (int k = 0; k <= n; ++k) {
        double s = 0.0;
        for (int j = 1; j <= n / 2; ++j) {
            double b = (j == n / 2) ? 1.0 : 2.0;
            s += b / (4.0 * j * j - 1.0) * std::cos(2.0 * j * k * kPi / n);
        }
        double c = (k == 0 || k == n) ? 1.0 : 2.0;
        w[k] = c / n * (1.0 - s);
    }
    return w;
}

NestedRule make_cc(int n) {
    if (n < 2 || n % 2) throw std::invalid_argument("clenshaw_curtis needs even n >= 2");
    NestedRule r;
    r.x.resize(n + 1);
    for (int k = 0; k <= n; ++k) r.x[k] = -std::cos(k * kPi / n);
    r.w = cc_weights(n);
    r.coarse_w.assign(n + 1, 0.0);
    auto wc = cc_weights(n / 2);
    for (int k = 0; k <= n / 2; ++k) r.coarse_w[2 * k] = wc[k];
    return r;
}

std::mutex g_mu;

}  // namespace

const Rule& gauss_legendre(int n) {
    static std::map<int, Rule> cache;
    std::lock_guard<std::mutex> lk(g_mu);
    auto it = cache.find(n);
    if (it == cache.end()) it = cache.emplace(n, make_gl(n)).first;
    return it->second;
}

const NestedRule& clenshaw_curtis(int n) {
    static std::map<int, NestedRule> cache;
    std::lock_guard<std::mutex> lk(g_mu);
    auto it = cache.find(n);
    if (it == cache.end()) it = cache.emplace(n, make_cc(n)).first;
    return it->second;
}

namespace {

std::complex<double> gl_panel(const CFun& f, double a, double b, const Rule& r) {
    double c = 0.5 * (a + b), h = 0.5 * (b - a);
    std::complex<double> s = 0.0;
    for (size_t i = 0; i < r.x.size(); ++i) s += r.w[i] * f(c + h * r.x[i]);
    return s * h;
}

std::complex<double> adapt_rec(const CFun& f, double a, double b, std::complex<double> whole,
                               double tol, int depth, const Rule& r) {
    double m = 0.5 * (a + b);
    auto left = gl_panel(f, a, m, r);
    auto right = gl_panel(f, m, b, r);
    if (std::abs(left + right - whole) <= tol || depth <= 0) return left + right;
    return adapt_rec(f, a, m, left, 0.5 * tol, depth - 1, r) +
           adapt_rec(f, m, b, right, 0.5 * tol, depth - 1, r);
}

}  // namespace

std::complex<double> adaptive(const CFun& f, double a, double b, double abs_tol, int max_depth) {
    const Rule& r = gauss_legendre(20);
    return adapt_rec(f, a, b, gl_panel(f, a, b, r), abs_tol, max_depth, r);
}

}  // namespace wedge::quad
