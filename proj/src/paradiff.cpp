#include "ww/paradiff.hpp"

#include <random>

#include "ww/spectral.hpp"

namespace ww {

void ParaConfig::validate() const {
    if (separation < 2) throw Error(ErrorCode::ConfigError, "paraproduct separation must be >= 2");
}

namespace {

bool block_empty(const Field& u, int k) {
    const GridSpec& g = u.grid();
    for (int i = 0; i < g.N; ++i) {
        if (u.raw()[i] == cplx{}) continue;
        if (lp::symbol(k, g.wavenumber(u.index_of_slot(i))) != 0.0) return false;
    }
    return true;
}

Field finish(Field f, const ParaConfig& cfg) {
    if (cfg.implicit_P) return project_neg(f);
    return f;
}

// sum_j (S_{j-m} a)(P_j b), no projection.
Field plain_para(const Field& a, const Field& b, int m) {
    a.check_same_grid(b);
    const GridSpec& g = a.grid();
    const auto [lo, hi] = lp::band(g);
    Phys acc = Phys::constant(g, 0.0);
    bool any = false;
    for (int j = lo; j <= hi; ++j) {
        if (block_empty(b, j)) continue;
        const Field low = lp_low(a, j - m);
        if (low.max_abs_coef() == 0.0) continue;
        acc += low.phys() * lp_project(b, j).phys();
        any = true;
    }
    return any ? acc.field() : Field(g);
}

// sum_j P_j (conj(S_{j-m} a) v), no projection.
Field plain_adjoint(const Field& a, const Field& v, int m) {
    a.check_same_grid(v);
    const GridSpec& g = a.grid();
    const auto [lo, hi] = lp::band(g);
    const Phys pv = v.phys();
    Field acc(g);
    for (int j = lo; j <= hi; ++j) {
        const Field low = lp_low(a, j - m);
        if (low.max_abs_coef() == 0.0) continue;
        const Field prod = (low.phys().conj() * pv).field();
        acc += lp_project(prod, j);
    }
    return acc;
}

Field sym_para(const Field& a, const Field& b, int m) {
    // (T_{conj a})^* b = sum_j P_j((S_{j-m} a) b)
    Field r = plain_para(a, b, m);
    r += plain_adjoint(a.conj(), b, m);
    r *= 0.5;
    return r;
}

Field raw_para(const Field& a, const Field& b, const ParaConfig& cfg) {
    return cfg.quant == Quantization::plain ? plain_para(a, b, cfg.separation) : sym_para(a, b, cfg.separation);
}

}  // namespace

Field para(const Field& a, const Field& b, const ParaConfig& cfg) { return finish(raw_para(a, b, cfg), cfg); }

Field para_adjoint(const Field& a, const Field& v, const ParaConfig& cfg) {
    if (cfg.quant == Quantization::plain) return finish(plain_adjoint(a, v, cfg.separation), cfg);
    // The symmetric operator's adjoint is the symmetric operator with conjugate symbol.
    return finish(sym_para(a.conj(), v, cfg.separation), cfg);
}

Field balanced(const Field& a, const Field& b, const ParaConfig& cfg) {
    Field r = mul(a, b);
    r -= raw_para(a, b, cfg);
    r -= raw_para(b, a, cfg);
    return finish(std::move(r), cfg);
}

double trichotomy_residual(const Field& a, const Field& b, const ParaConfig& cfg, bool dealias) {
    ParaConfig c = cfg;
    c.implicit_P = false;
    const Field ab = dealias ? mul(a, b) : mul_raw(a, b);
    Field r = ab;
    r -= para(a, b, c);
    r -= para(b, a, c);
    r -= balanced(a, b, c);
    const double n = ab.l2();
    return n > 0.0 ? r.l2() / n : r.l2();
}

double commutator_norm(const Field& a, const Field& chi, int k, const ParaConfig& cfg, int probes, unsigned seed) {
    const GridSpec& g = a.grid();
    ParaConfig c0 = cfg;
    c0.implicit_P = false;  // P does not commute with chi; measure the bare paraproduct
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> nd(0.0, 1.0);
    double worst = 0.0;
    for (int p = 0; p < probes; ++p) {
        Field u(g);
        for (int j = -g.N / 2; j < g.N / 2; ++j) {
            const double re = nd(rng), im = nd(rng);
            const double w = lp::symbol(k, g.wavenumber(j));
            if (w > 0.0 && j != 0) u.coef(j) = w * cplx(re, im);
        }
        u = u.dealiased();
        const double nu = u.l2();
        if (nu == 0.0) continue;
        const Field ua = u.dx();
        const Field c = mul(chi, para(a, ua, c0)) - para(a, mul(chi, ua), c0);
        worst = std::max(worst, c.l2() / nu);
    }
    return worst;
}

}  // namespace ww
