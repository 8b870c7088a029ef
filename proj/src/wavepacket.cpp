#include "ww/wavepacket.hpp"

#include <cmath>
#include <iomanip>
#include <limits>
#include <ostream>

#include "ww/initial_data.hpp"
#include "ww/spectral.hpp"

namespace ww {

namespace packet_bump {

double normalization() {
    static const double z = [] {
        // The raw bump is C^infinity with compact support, so the trapezoid rule converges very fast.
        const int n = 20000;
        const double h = 2.0 / n;
        double s = 0.0;
        for (int i = 1; i < n; ++i) s += bump(-1.0 + i * h);
        return s * h;
    }();
    return z;
}

double value(double y) { return bump(y) / normalization(); }

double d1(double y) {
    if (std::abs(y) >= 1.0) return 0.0;
    const double s = 1.0 - y * y;
    return value(y) * (-2.0 * y / (s * s));
}

double d2(double y) {
    if (std::abs(y) >= 1.0) return 0.0;
    const double s = 1.0 - y * y;
    const double y2 = y * y;
    return value(y) * (4.0 * y2 / (s * s * s * s) - 2.0 / (s * s) - 8.0 * y2 / (s * s * s));
}

}  // namespace packet_bump

std::pair<double, double> velocity_band(double t) { return {std::pow(t, -0.01), std::pow(t, 0.01)}; }

std::vector<double> velocity_grid(double t, int count) {
    const auto [lo, hi] = velocity_band(t);
    std::vector<double> v(count);
    for (int i = 0; i < count; ++i) {
        const double f = count == 1 ? 0.5 : static_cast<double>(i) / (count - 1);
        v[i] = std::exp(std::log(lo) + f * (std::log(hi) - std::log(lo)));
    }
    return v;
}

PacketFrame build_packet(double t, double v, const GridSpec& g, const PacketOptions& opt) {
    if (t < 4.0) throw Error(ErrorCode::OutOfDomain, "packets need t >= 4");
    if (!(v > 0.0)) throw Error(ErrorCode::OutOfDomain, "packets use v > 0");
    if (opt.require_velocity_band) {
        const auto [lo, hi] = velocity_band(t);
        if (v < lo * (1 - 1e-12) || v > hi * (1 + 1e-12))
            throw Error(ErrorCode::OutOfDomain, "velocity outside the central band");
    }
    PacketFrame f;
    f.t = t;
    f.v = v;
    f.width = std::sqrt(t) * std::pow(v, 1.5);
    const double center = v * t;
    const double a_min = center - f.width;
    if (!(a_min > 0.0)) throw Error(ErrorCode::OutOfDomain, "packet reaches alpha <= 0");
    if (center + (1.0 + opt.margin_widths) * f.width > 0.5 * g.L)
        throw Error(ErrorCode::WrapAround, "packet support too close to the periodic seam");
    const double k_edge = t * t / (4.0 * a_min * a_min) + 4.0 / f.width;
    if (k_edge > 0.9 * g.dk() * g.keep_index()) throw Error(ErrorCode::OutOfDomain, "packet frequency not resolved");

    const double amp = std::pow(v, -1.5);
    const double wd = f.width;
    const double sv = std::sqrt(v), st = std::sqrt(t);
    auto y_of = [&](double a) { return (a - center) / wd; };
    auto inside = [&](double a) { return std::abs(a - center) < wd; };

    f.u = Field::from_function(g, [&](double a) -> cplx {
        if (!inside(a)) return 0.0;
        return amp * packet_bump::value(y_of(a)) * std::exp(I * (t * t / (4.0 * a)));
    });
    f.u_t = Field::from_function(g, [&](double a) -> cplx {
        if (!inside(a)) return 0.0;
        const double y = y_of(a);
        const double yt = -1.0 / (sv * st) - y / (2.0 * t);
        const double pt = t / (2.0 * a);
        return amp * std::exp(I * (t * t / (4.0 * a))) * (packet_bump::d1(y) * yt + I * pt * packet_bump::value(y));
    });
    f.u_tt = Field::from_function(g, [&](double a) -> cplx {
        if (!inside(a)) return 0.0;
        const double y = y_of(a);
        const double yt = -1.0 / (sv * st) - y / (2.0 * t);
        const double ytt = 0.5 / (sv * t * st) - yt / (2.0 * t) + y / (2.0 * t * t);
        const double pt = t / (2.0 * a), ptt = 1.0 / (2.0 * a);
        const double c = packet_bump::value(y), c1 = packet_bump::d1(y), c2 = packet_bump::d2(y);
        const cplx br = c2 * yt * yt + c1 * ytt + 2.0 * I * pt * c1 * yt + I * ptt * c - pt * pt * c;
        return amp * std::exp(I * (t * t / (4.0 * a))) * br;
    });
    f.u_a = Field::from_function(g, [&](double a) -> cplx {
        if (!inside(a)) return 0.0;
        const double y = y_of(a);
        const double pa = -t * t / (4.0 * a * a);
        return amp * std::exp(I * (t * t / (4.0 * a))) * (packet_bump::d1(y) / wd + I * pa * packet_bump::value(y));
    });
    f.w = (-I * v) * f.u_t;
    f.q = v * f.u;
    f.w_closed = Field::from_function(g, [&](double a) -> cplx {
        if (!inside(a)) return 0.0;
        const double y = y_of(a);
        const cplx e = std::exp(I * (t * t / (4.0 * a)));
        const double c = packet_bump::value(y), c1 = packet_bump::d1(y);
        const cplx corr = (center - a) / (2.0 * a) * c + I * (center + a) / (2.0 * t * st * sv) * c1;
        return 0.5 * amp * c * e + corr * amp * e;
    });
    return f;
}

PacketDefect packet_defect(const PacketFrame& f) {
    const GridSpec& g = f.u.grid();
    const double t = f.t, v = f.v, wd = f.width, center = v * t;
    const double amp = std::pow(v, -1.5);
    const double k = 1.0 / (4.0 * std::pow(v, 1.5) * std::pow(t, 2.5));
    auto inside = [&](double a) { return std::abs(a - center) < wd; };
    PacketDefect d;
    d.leading = Field::from_function(g, [&](double a) -> cplx {
        if (!inside(a)) return 0.0;
        const double y = (a - center) / wd;
        const double c = packet_bump::value(y), c1 = packet_bump::d1(y), c2 = packet_bump::d2(y);
        const cplx da = center / (2.0 * a * a) * c + (a - center) / (2.0 * a) * c1 / wd -
                        I * k * (2.0 * (a + center) * c1 + (a + center) * (a + center) * c2 / wd);
        return v * amp * std::exp(I * (t * t / (4.0 * a))) * da;
    });
    d.subleading = Field::from_function(g, [&](double a) -> cplx {
        if (!inside(a)) return 0.0;
        const double y = (a - center) / wd;
        const double c = packet_bump::value(y), c1 = packet_bump::d1(y);
        const cplx br = (a - center) / (2.0 * a * a) * c - I * k * (a - center) * c1;
        return v * amp * std::exp(I * (t * t / (4.0 * a))) * br;
    });
    d.g_closed = d.leading + d.subleading;
    // The bump is too steep near its edges for spectral differentiation on desk grids.
    d.g_direct = (-I * v) * f.u_tt + v * f.u_a;
    d.rel_size = d.g_direct.l2() / f.w.l2();
    d.agreement = (d.g_closed - d.g_direct).l2() / d.g_direct.l2();
    return d;
}

namespace {

// int chi(y) exp(i (y^2/4 - z y)) dy by the midpoint rule; chi is smooth and
// vanishes to all orders at the ends.
cplx chirped_bump_transform(double z) {
    constexpr int n = 2000;
    constexpr double h = 2.0 / n;
    cplx s = 0.0;
    for (int i = 0; i < n; ++i) {
        const double y = -1.0 + (i + 0.5) * h;
        s += packet_bump::value(y) * std::exp(I * (0.25 * y * y - z * y));
    }
    return s * h;
}

}  // namespace

cplx packet_spectrum_model(double t, double v, double xi) {
    const double wd = std::sqrt(t) * std::pow(v, 1.5);
    const double z = (xi + 1.0 / (4.0 * v * v)) * wd;
    // Tangent of t sqrt|xi| at xi_v. For xi < 0 this equals chi1(z) e^{i t sqrt|xi|}
    // with chi1 absorbing the curvature; the tail reaching xi >= 0 keeps the same form.
    const double tangent = t / (2.0 * v) - z * std::sqrt(t / v);
    return std::sqrt(t) * chirped_bump_transform(z) * std::exp(I * tangent);
}

double packet_spectrum_mismatch(const PacketFrame& f) {
    const GridSpec& g = f.u.grid();
    double num = 0.0, den = 0.0;
    for (int j = -g.N / 2; j < g.N / 2; ++j) {
        const double xi = g.wavenumber(j);
        const cplx hat = g.L * f.u.coef(j);
        const cplx model = packet_spectrum_model(f.t, f.v, xi);
        num += std::norm(hat - model);
        den += std::norm(model);
    }
    return std::sqrt(num / den);
}

namespace {

cplx pair_h0(const Field& W, const Field& Q, const Field& w, const Field& q) {
    return inner(W, w) + inner(frac_derivative(Q, 0.5), frac_derivative(q, 0.5));
}

}  // namespace

cplx gamma(const HoloField& W, const HoloField& Q, const PacketFrame& f) { return pair_h0(W, Q, f.w, f.q); }

cplx gamma(const NormalFormState& nf, const PacketFrame& f) { return gamma(nf.W, nf.Q, f); }

cplx gamma_reduced(const HoloField& W, const HoloField& Q, const PacketFrame& f) {
    const Field r = frac_derivative(Q, 0.5);
    return 0.5 * inner(W + r, f.u);
}

cplx gamma_dt(const HoloField& W, const HoloField& Q, const Field& dW, const Field& dQ, const PacketFrame& f) {
    const Field w_t = (-I * f.v) * f.u_tt;
    const Field q_t = f.v * f.u_t;
    return pair_h0(dW, dQ, f.w, f.q) + pair_h0(W, Q, w_t, q_t);
}

double ode_coefficient(double t, double v) { return 1.0 / (2.0 * t * std::pow(2.0 * v, 5)); }

void sample_profile(GammaProfile& p, const WaveState& s, const ParaConfig& cfg, const PacketOptions& opt) {
    if (p.v.empty()) p.v = velocity_grid(s.t);
    const auto nf = para_nf(s, cfg);
    const auto nd = para_nf_dt(s, rhs_full(s), cfg);
    std::vector<cplx> gm, dg;
    for (double v : p.v) {
        const PacketFrame f = build_packet(s.t, v, s.grid(), opt);
        gm.push_back(gamma(nf.W, nf.Q, f));
        dg.push_back(gamma_dt(nf.W, nf.Q, nd.first, nd.second, f));
    }
    p.times.push_back(s.t);
    p.gamma.push_back(std::move(gm));
    p.dgamma.push_back(std::move(dg));
}

AsymptoticResidual asymptotic_residual(const GammaProfile& p) {
    const std::size_t nt = p.times.size();
    if (nt < 3) throw Error(ErrorCode::InsufficientSamples, "asymptotic residual needs at least 3 times");
    AsymptoticResidual r;
    r.times = p.times;
    const double nan = std::numeric_limits<double>::quiet_NaN();
    for (std::size_t k = 0; k < nt; ++k) {
        const double t = p.times[k];
        std::vector<cplx> ea, ec;
        std::vector<double> cu;
        for (std::size_t i = 0; i < p.v.size(); ++i) {
            const cplx g = p.gamma[k][i];
            const double c = ode_coefficient(t, p.v[i]);
            const cplx cubic = I * c * g * std::norm(g);
            ea.push_back(p.dgamma[k][i] - cubic);
            cu.push_back(c * std::pow(std::abs(g), 3));
            if (k == 0 || k + 1 == nt) {
                ec.emplace_back(nan, nan);
            } else {
                const cplx dg = (p.gamma[k + 1][i] - p.gamma[k - 1][i]) / (p.times[k + 1] - p.times[k - 1]);
                ec.push_back(dg - cubic);
            }
        }
        r.e_analytic.push_back(std::move(ea));
        r.e_centered.push_back(std::move(ec));
        r.cubic.push_back(std::move(cu));
    }
    return r;
}

void write_profile_csv(std::ostream& os, const GammaProfile& p, const AsymptoticResidual* res) {
    os << "t,v,re_gamma,im_gamma,abs_e,cubic\n" << std::setprecision(17);
    for (std::size_t k = 0; k < p.times.size(); ++k)
        for (std::size_t i = 0; i < p.v.size(); ++i) {
            const cplx g = p.gamma[k][i];
            const double e = res ? std::abs(res->e_analytic[k][i]) : std::abs(p.dgamma[k][i] - I * ode_coefficient(p.times[k], p.v[i]) * g * std::norm(g));
            os << p.times[k] << ',' << p.v[i] << ',' << g.real() << ',' << g.imag() << ',' << e << ','
               << ode_coefficient(p.times[k], p.v[i]) * std::pow(std::abs(g), 3) << '\n';
        }
}

std::vector<cplx> theta_functional(const Field& f, double t, const std::vector<double>& v, const GridSpec& g,
                                   const PacketOptions& opt) {
    std::vector<cplx> out;
    out.reserve(v.size());
    for (double vi : v) {
        const PacketFrame fr = build_packet(t, vi, g, opt);
        out.push_back(inner(f, fr.u.conj()));
    }
    return out;
}

double l2_velocity(const std::vector<double>& v, const std::vector<double>& values) {
    double s = 0.0;
    for (std::size_t i = 1; i < v.size(); ++i)
        s += 0.5 * (v[i] - v[i - 1]) * (values[i] * values[i] + values[i - 1] * values[i - 1]);
    return std::sqrt(s);
}

Field hyp_part(const Field& f, double t) { return ell_hyp_split(f, Field(f.grid()), t).w_hyp; }

ReconstructionError packet_reconstruction_error(const HoloField& W, const HoloField& Q, double t, double s,
                                                const std::vector<double>& v, const PacketOptions& opt) {
    const GridSpec& g = W.grid();
    const Field hw = hyp_part(frac_derivative(W, s), t);
    const Field hq = hyp_part(frac_derivative(Q, s + 0.5), t);
    ReconstructionError r;
    r.v = v;
    std::vector<double> l2w;
    for (double vi : v) {
        const PacketFrame f = build_packet(t, vi, g, opt);
        const cplx gm = gamma(W, Q, f);
        const cplx model = std::pow(std::abs(f.xi_v()), s) / std::sqrt(t) * std::exp(I * f.phase_at_ray()) * gm;
        const double a = vi * t;
        const cplx ew = hw.value_at(a) - model;
        const cplx eq = hq.value_at(a) - model;  // sgn v = +1
        r.err_w.push_back(ew);
        r.err_q.push_back(eq);
        const double mag = std::sqrt(std::norm(ew) + std::norm(eq));
        l2w.push_back(std::pow(vi, 2.0 * s - 1.0) * mag);
        r.linf_weighted = std::max(r.linf_weighted, std::pow(vi, 2.0 * s - 0.25) * mag);
        r.peak = std::max(r.peak, std::abs(model));
    }
    r.l2_weighted = l2_velocity(v, l2w);
    return r;
}

}  // namespace ww
