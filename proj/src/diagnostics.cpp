#include "ww/diagnostics.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <istream>
#include <numbers>
#include <ostream>
#include <sstream>
#include <tuple>

#include "ww/spectral.hpp"

namespace ww {

double pair_norm(const Field& w, const Field& q, double s) { return sobolev_norm(w, q, s, true); }

double x_norm(const Field& Wa, const Field& R) {
    const Field W0 = Wa.without_mean();
    return frac_derivative(W0, -0.5).linf() + R.linf() + besov_norm(Wa, 0.25) + besov_norm(R, 0.75);
}

double x0_norm(const Field& w, const Field& q) { return besov_norm(w.dx(), 0.25) + besov_norm(q.dx(), 0.75); }

NormRecord control_norms(const WaveState& s, const NormOptions& o) {
    NormRecord r;
    r.t = s.t;
    const Field& Wa = s.aux.Wa;
    const Field& R = s.aux.R;
    const Field halfR = frac_derivative(R, 0.5);
    // BMO seminorms are replaced by L^inf throughout.
    r.A0 = Wa.linf() + s.aux.Y.linf() + halfR.linf() + besov_norm(halfR, 0.0);
    r.A_half = frac_derivative(Wa, 0.5).linf() + R.dx().linf();
    r.A_quarter = besov_norm(Wa, 0.25) + besov_norm(R, 0.75);
    r.A_sharp = lp_norm(frac_derivative(Wa, 0.25), 4.0) + lp_norm(frac_derivative(R, 0.75), 4.0);
    r.X = x_norm(Wa, R);
    r.energy = hamiltonian(s.W, s.Q);
    for (double sv : o.hs) r.Hs.emplace_back(sv, pair_norm(Wa, R, sv));
    if (o.weighted) r.WH_sharp = weighted_energy(s, scaling_fields(s, o.para), o.sigma).total();
    if (o.sharp && s.t >= 1.0) {
        const XSharp xs = xsharp_norm(ell_hyp_split(s.W, s.Q, s.t), o.sigma);
        r.X_sharp = xs.total;
        r.X_sharp_ell = xs.ell_total;
    }
    return r;
}

std::vector<std::string> norm_ids() {
    return {"A0", "A_quarter", "A_half", "A_sharp", "X", "WH_sharp", "X_sharp", "X_sharp_ell", "energy"};
}

double norm_value(const NormRecord& r, const std::string& id) {
    if (id == "A0") return r.A0;
    if (id == "A_quarter") return r.A_quarter;
    if (id == "A_half") return r.A_half;
    if (id == "A_sharp") return r.A_sharp;
    if (id == "X") return r.X;
    if (id == "WH_sharp") return r.WH_sharp;
    if (id == "X_sharp") return r.X_sharp;
    if (id == "X_sharp_ell") return r.X_sharp_ell;
    if (id == "energy") return r.energy;
    for (const auto& [sv, val] : r.Hs) {
        std::ostringstream n;
        n << "H_" << sv;
        if (n.str() == id) return val;
    }
    throw Error(ErrorCode::UsageError, "unknown norm id: " + id);
}

WeightedEnergy weighted_energy(const WaveState& s, const ScalingDerivatives& sd, double sigma) {
    WeightedEnergy e;
    e.base = pair_norm(s.W, s.Q, 0.25);
    e.high = pair_norm(s.aux.Wa, s.aux.R, sigma - 1.0);
    e.scaling = pair_norm(sd.frak_w, sd.frak_r, 0.25);
    return e;
}

double weighted_energy_t0_reference(const WaveState& s) {
    return pair_norm(times_alpha(s.aux.Wa), times_alpha(s.aux.R), 0.25);
}

// ---------------------------------------------------------------- localization

DyadicCover DyadicCover::make(double t, const GridSpec& g) {
    if (t < 1.0) throw Error(ErrorCode::TimeTooSmall, "spatial cover needs t >= 1");
    DyadicCover c;
    c.t = t;
    c.alpha_lo = std::pow(t, 0.75);
    c.alpha_hi = t * t;
    c.j_lo = static_cast<int>(std::ceil(std::log2(c.alpha_lo)));
    // Keep the top block inside the torus so the high piece is flat at the seam.
    const int j_max = static_cast<int>(std::floor(std::log2(0.5 * g.L))) - 1;
    c.j_hi = std::min(static_cast<int>(std::floor(std::log2(c.alpha_hi))), j_max);
    if (c.j_hi < c.j_lo) c.j_hi = c.j_lo - 1;
    return c;
}

double DyadicCover::low(double alpha) const { return lp::low_symbol(j_lo - 1, std::abs(alpha)); }
double DyadicCover::block(int j, double alpha) const { return lp::symbol(j, std::abs(alpha)); }
double DyadicCover::high(double alpha) const { return 1.0 - lp::low_symbol(j_hi, std::abs(alpha)); }

double Localizer::operator()(double alpha) const {
    switch (kind) {
        case Kind::low: return cover->low(alpha);
        case Kind::high: return cover->high(alpha);
        case Kind::block: break;
    }
    return cover->block(j, alpha);
}

std::pair<Field, Field> Localizer::apply(const Field& w, const Field& q) const {
    const GridSpec& g = w.grid();
    Phys pw = w.phys();
    Phys pq = q.dx().phys();
    for (int n = 0; n < g.N; ++n) {
        const double c = (*this)(g.alpha(n));
        pw[n] *= c;
        pq[n] *= c;
    }
    return {pw.field_raw(), pq.field_raw().antiderivative()};
}

namespace band {

// The block bump reaches one octave either side of alpha0, i.e. two octaves of
// local frequency either side of xi0; the band stays flat over all of it.
double hyp(double xi, double xi0) {
    const double a = std::abs(xi);
    if (a == 0.0) return 0.0;
    const double y = std::abs(std::log2(a / xi0));
    if (y <= 2.0) return 1.0;
    if (y >= 3.0) return 0.0;
    const double c = std::cos(0.5 * std::numbers::pi * (y - 2.0));
    return c * c;
}

double below(double xi, double xi0) { return std::abs(xi) < xi0 ? 1.0 - hyp(xi, xi0) : 0.0; }
double above(double xi, double xi0) { return std::abs(xi) >= xi0 ? 1.0 - hyp(xi, xi0) : 0.0; }

}  // namespace band

namespace {

double pair_mass(const Field& w, const Field& q, const std::function<bool(double)>& keep) {
    const GridSpec& g = w.grid();
    double m = 0.0;
    for (int j = -g.N / 2; j < g.N / 2; ++j) {
        const double k = g.wavenumber(j);
        if (!keep(k)) continue;
        m += std::norm(w.coef(j)) + std::abs(k) * std::norm(q.coef(j));
    }
    return m;
}

}  // namespace

EllHypSplit ell_hyp_split(const Field& w, const Field& q, double t) {
    w.check_same_grid(q);
    const GridSpec& g = w.grid();
    EllHypSplit sp;
    sp.t = t;
    sp.cover = DyadicCover::make(t, g);
    const DyadicCover& c = sp.cover;

    std::tie(sp.w_lo, sp.q_lo) = Localizer{Localizer::Kind::low, 0, 0.0, &c}.apply(w, q);
    std::tie(sp.w_hi, sp.q_hi) = Localizer{Localizer::Kind::high, 0, 0.0, &c}.apply(w, q);
    sp.w_hyp = sp.q_hyp = Field(g);
    sp.w_ell = sp.w_lo + sp.w_hi;
    sp.q_ell = sp.q_lo + sp.q_hi;

    for (int j = c.j_lo; j <= c.j_hi; ++j) {
        HypBlock b;
        b.j = j;
        b.alpha0 = std::exp2(j);
        b.xi0 = t * t / (4.0 * b.alpha0 * b.alpha0);
        std::tie(b.w_loc, b.q_loc) = Localizer{Localizer::Kind::block, j, b.alpha0, &c}.apply(w, q);
        const double x0 = b.xi0;
        auto mult = [x0](double (*m)(double, double)) { return [x0, m](double k) { return m(k, x0); }; };
        b.w_hyp = b.w_loc.multiplier(mult(band::hyp));
        b.q_hyp = b.q_loc.multiplier(mult(band::hyp));
        b.w_below = b.w_loc.multiplier(mult(band::below));
        b.q_below = b.q_loc.multiplier(mult(band::below));
        b.w_above = b.w_loc.multiplier(mult(band::above));
        b.q_above = b.q_loc.multiplier(mult(band::above));
        const double hyp_mass = pair_mass(b.w_hyp, b.q_hyp, [](double) { return true; });
        const double in_octave =
            pair_mass(b.w_hyp, b.q_hyp, [x0](double k) { return k != 0.0 && std::abs(std::log2(std::abs(k) / x0)) <= 1.0; });
        const double loc_mass = pair_mass(b.w_loc, b.q_loc, [](double) { return true; });
        b.concentration = hyp_mass > 0.0 ? in_octave / hyp_mass : 1.0;
        b.capture = loc_mass > 0.0 ? hyp_mass / loc_mass : 0.0;
        sp.w_hyp += b.w_hyp;
        sp.q_hyp += b.q_hyp;
        sp.w_ell += b.w_below + b.w_above;
        sp.q_ell += b.q_below + b.q_above;
        sp.blocks.push_back(std::move(b));
    }
    return sp;
}

double xsharp_exponent_b(double sigma) { return 0.25 * (sigma - 11.0 / 4.0); }

XSharp xsharp_norm(const EllHypSplit& sp, double sigma) {
    XSharp x;
    x.b = xsharp_exponent_b(sigma);
    const double t = sp.t;
    const double rt = std::sqrt(t);
    x.lo = rt * pair_norm(sp.w_lo, sp.q_lo, 0.75);
    x.hi = t * rt * pair_norm(sp.w_hi.dx(), sp.q_hi.dx(), 0.25);
    for (const auto& b : sp.blocks) {
        const double above = rt / std::sqrt(b.xi0) * pair_norm(b.w_above.dx(), b.q_above.dx(), 0.25);
        const double below = rt * pair_norm(b.w_below.dx(), b.q_below.dx(), -0.25);
        const double weight = b.xi0 < 1.0 ? std::pow(b.xi0, -x.a) : std::pow(b.xi0, x.b);
        const double v = above + below + weight * x0_norm(b.w_hyp, b.q_hyp);
        x.per_block.emplace_back(b.alpha0, v);
        x.sup_block = std::max(x.sup_block, v);
        const Field we = b.w_below + b.w_above, qe = b.q_below + b.q_above;
        const double e = rt / std::sqrt(b.xi0) * pair_norm(we.dx(), qe.dx(), 0.25) + rt * pair_norm(we.dx(), qe.dx(), -0.25);
        x.ell_sup = std::max(x.ell_sup, e);
    }
    x.total = x.lo + x.hi + x.sup_block;
    x.ell_total = x.lo + x.hi + x.ell_sup;
    return x;
}

double masked_hyp_x_norm(const EllHypSplit& sp, double delta) {
    const GridSpec& g = sp.w_hyp.grid();
    Field w(g), q(g);
    const double vlo = std::pow(sp.t, -delta), vhi = std::pow(sp.t, delta);
    for (const auto& b : sp.blocks) {
        const double v = b.alpha0 / sp.t;
        if (v >= vlo && v <= vhi) continue;
        w += b.w_hyp;
        q += b.q_hyp;
    }
    return x_norm(w.dx(), q.dx());
}

// ---------------------------------------------------------------- fits and CSV

FitResult decay_fit(const std::vector<double>& t, const std::vector<double>& y, double t_lo, double t_hi) {
    std::vector<double> xs, ys;
    for (std::size_t i = 0; i < t.size() && i < y.size(); ++i) {
        if (t[i] < t_lo || t[i] > t_hi || !(t[i] > 0.0) || !(y[i] > 0.0)) continue;
        xs.push_back(std::log(t[i]));
        ys.push_back(std::log(y[i]));
    }
    if (xs.size() < 8) throw Error(ErrorCode::InsufficientSamples, "decay fit needs at least 8 positive samples");
    const auto [mn, mx] = std::minmax_element(xs.begin(), xs.end());
    if (*mx - *mn < std::log(10.0) - 1e-12)
        throw Error(ErrorCode::InsufficientSamples, "decay fit needs samples spanning a decade in t");
    const double n = static_cast<double>(xs.size());
    double sx = 0, sy = 0;
    for (std::size_t i = 0; i < xs.size(); ++i) sx += xs[i], sy += ys[i];
    const double mxv = sx / n, myv = sy / n;
    double sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        sxx += (xs[i] - mxv) * (xs[i] - mxv);
        sxy += (xs[i] - mxv) * (ys[i] - myv);
    }
    FitResult f;
    f.slope = sxy / sxx;
    f.intercept = myv - f.slope * mxv;
    double ssr = 0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        const double r = ys[i] - f.intercept - f.slope * xs[i];
        ssr += r * r;
    }
    f.stderr_slope = std::sqrt(ssr / (n - 2.0) / sxx);
    f.samples = static_cast<int>(xs.size());
    return f;
}

FitResult decay_fit(const std::vector<NormRecord>& recs, const std::string& norm_id, double t_lo, double t_hi) {
    std::vector<double> t, y;
    for (const auto& r : recs) {
        t.push_back(r.t);
        y.push_back(norm_value(r, norm_id));
    }
    if (recs.empty()) norm_value(NormRecord{}, norm_id);  // still validates the id
    return decay_fit(t, y, t_lo, t_hi);
}

void write_norms_csv(std::ostream& os, const std::vector<NormRecord>& recs) {
    os << "t";
    for (const auto& id : norm_ids()) os << ',' << id;
    if (!recs.empty())
        for (const auto& [sv, v] : recs.front().Hs) os << ",H_" << sv;
    os << '\n' << std::setprecision(17);
    for (const auto& r : recs) {
        os << r.t;
        for (const auto& id : norm_ids()) os << ',' << norm_value(r, id);
        for (const auto& [sv, v] : r.Hs) os << ',' << v;
        os << '\n';
    }
}

std::vector<NormRecord> read_norms_csv(std::istream& is) {
    std::string line;
    if (!std::getline(is, line)) throw Error(ErrorCode::IoError, "empty norms file");
    std::vector<std::string> cols;
    {
        std::istringstream h(line);
        std::string c;
        while (std::getline(h, c, ',')) cols.push_back(c);
    }
    std::vector<NormRecord> out;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        std::istringstream row(line);
        std::string cell;
        NormRecord r;
        for (std::size_t i = 0; i < cols.size() && std::getline(row, cell, ','); ++i) {
            const double v = std::stod(cell);
            const std::string& c = cols[i];
            if (c == "t") r.t = v;
            else if (c == "A0") r.A0 = v;
            else if (c == "A_quarter") r.A_quarter = v;
            else if (c == "A_half") r.A_half = v;
            else if (c == "A_sharp") r.A_sharp = v;
            else if (c == "X") r.X = v;
            else if (c == "WH_sharp") r.WH_sharp = v;
            else if (c == "X_sharp") r.X_sharp = v;
            else if (c == "X_sharp_ell") r.X_sharp_ell = v;
            else if (c == "energy") r.energy = v;
            else if (c.rfind("H_", 0) == 0) r.Hs.emplace_back(std::stod(c.substr(2)), v);
        }
        out.push_back(std::move(r));
    }
    return out;
}

}  // namespace ww
