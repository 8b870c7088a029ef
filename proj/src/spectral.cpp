#include "ww/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace ww {

HoloField project_neg(const Field& u) {
    Field r(u);
    for (int i = 0; i < r.size(); ++i)
        if (r.index_of_slot(i) >= 0) r.raw()[i] = 0.0;
    return HoloField::assume(std::move(r));
}

Field project_pos(const Field& u) {
    Field r(u);
    for (int i = 0; i < r.size(); ++i)
        if (r.index_of_slot(i) <= 0) r.raw()[i] = 0.0;
    return r;
}

Field frac_derivative(const Field& u, double s) {
    if (s < 0.0 && std::abs(u.mean()) > 1e-14 * std::max(1.0, u.max_abs_coef()))
        throw Error(ErrorCode::NegativePowerOnMean, "|D|^s with s < 0 on a field with nonzero mean");
    return u.multiplier([s](double k) { return k == 0.0 ? 0.0 : std::pow(std::abs(k), s); });
}

Field bracket_derivative(const Field& u, double s) {
    return u.multiplier([s](double k) { return std::pow(1.0 + k * k, 0.5 * s); });
}

namespace lp {

double symbol(int k, double xi) {
    const double a = std::abs(xi);
    if (a == 0.0) return 0.0;
    const double x = std::log2(a) - k;
    if (x <= -1.0 || x >= 1.0) return 0.0;
    const double c = std::cos(0.5 * std::numbers::pi * x);
    return c * c;
}

double low_symbol(int k, double xi) {
    const double a = std::abs(xi);
    if (a == 0.0) return 1.0;
    const double x = std::log2(a) - k;
    if (x <= 0.0) return 1.0;
    if (x >= 1.0) return 0.0;
    const double c = std::cos(0.5 * std::numbers::pi * x);
    return c * c;
}

std::pair<int, int> band(const GridSpec& g) {
    const int lo = static_cast<int>(std::floor(std::log2(g.dk())));
    const int hi = static_cast<int>(std::ceil(std::log2(g.k_nyquist())));
    return {lo, hi};
}

}  // namespace lp

Field lp_project(const Field& u, int k) {
    const auto [lo, hi] = lp::band(u.grid());
    if (k < lo || k > hi) throw Error(ErrorCode::OutOfBand, "dyadic block outside the resolvable band");
    return u.multiplier([k](double xi) { return lp::symbol(k, xi); });
}

Field lp_low(const Field& u, int k) {
    return u.multiplier([k](double xi) { return lp::low_symbol(k, xi); });
}

double besov_norm(const Field& u, double s) {
    const auto [lo, hi] = lp::band(u.grid());
    double sum = 0.0;
    for (int k = lo; k <= hi; ++k) {
        const Field b = lp_project(u, k);
        if (b.max_abs_coef() == 0.0) continue;
        const double m = std::pow(2.0, k * s) * b.linf();
        sum += m * m;
    }
    return std::sqrt(sum);
}

double sobolev_norm(const Field& w, const Field& r, double s, bool homogeneous) {
    w.check_same_grid(r);
    const GridSpec& g = w.grid();
    if (s < 0.0 && homogeneous && (std::abs(w.mean()) > 0.0))
        throw Error(ErrorCode::NegativePowerOnMean, "homogeneous norm with s < 0 on nonzero mean");
    double sum = 0.0;
    for (int i = 0; i < g.N; ++i) {
        const double k = std::abs(g.wavenumber(w.index_of_slot(i)));
        const double cw = std::norm(w.raw()[i]);
        const double cr = std::norm(r.raw()[i]);
        if (k == 0.0) {
            if (!homogeneous) sum += cw;
            continue;
        }
        const double base = homogeneous ? std::pow(k, 2.0 * s) : std::pow(1.0 + k * k, s);
        sum += base * (cw + k * cr);
    }
    return std::sqrt(g.L * sum);
}

double lp_norm(const Field& u, double p) {
    const auto v = u.physical();
    double s = 0.0;
    for (const auto& x : v) s += std::pow(std::abs(x), p);
    return std::pow(s * u.grid().dx(), 1.0 / p);
}

}  // namespace ww
