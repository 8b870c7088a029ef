#include "ww/normal_form.hpp"

#include <cmath>

#include "ww/cubic_terms.hpp"
#include "ww/spectral.hpp"

namespace ww {

namespace {

Field re2(const Field& f) { return f + f.conj(); }

HoloField P(const Field& f) { return project_neg(f); }

}  // namespace

FieldPair classical_nf(const WaveState& s) {
    const Field reW = re2(s.W);
    return {P(s.W - mul(reW, s.aux.Wa)), P(s.Q - mul(reW, s.aux.R))};
}

FieldPair classical_nf_dt(const WaveState& s, const FieldPair& d) {
    const Field reW = re2(s.W);
    const Field reWt = re2(d.first);
    const HoloField Rt = R_time_derivative(s, d);
    const Field dW = d.first - mul(reWt, s.aux.Wa) - mul(reW, d.first.dx());
    const Field dQ = d.second - mul(reWt, s.aux.R) - mul(reW, Rt);
    return {P(dW), P(dQ)};
}

FieldPair classical_sources(const WaveState& s) {
    const auto d = rhs_full(s);
    const auto nf = classical_nf(s);
    const auto nd = classical_nf_dt(s, d);
    return {P(nd.first + nf.second.dx()), P(nd.second - I * nf.first)};
}

FieldPair raw_sources(const WaveState& s) {
    const auto d = rhs_full(s);
    return {P(d.first + s.Q.dx()), P(d.second - I * s.W)};
}

NormalFormState para_nf(const WaveState& s, const ParaConfig& cfg) {
    NormalFormState nf;
    nf.t = s.t;
    const Field reW = re2(s.W);
    const Field& Wa = s.aux.Wa;
    nf.W = P(s.W - para(Wa, s.W, cfg) - balanced(Wa, reW, cfg));
    nf.Q = P(s.Q - para(s.aux.R, s.W, cfg) - balanced(s.aux.R, reW, cfg));
    const Field nWa = nf.W.dx(), nQa = nf.Q.dx();
    nf.F2 = P(mul(nQa.conj(), nWa) - mul(nQa, nWa.conj()));
    const GridSpec& g = s.grid();
    nf.G3 = nf.K3 = nf.resid_G = nf.resid_K = HoloField(g);
    return nf;
}

FieldPair para_nf_dt(const WaveState& s, const FieldPair& d, const ParaConfig& cfg) {
    const Field reW = re2(s.W);
    const Field reWt = re2(d.first);
    const Field& Wa = s.aux.Wa;
    const Field Wat = d.first.dx();
    const HoloField Rt = R_time_derivative(s, d);
    Field dW = d.first;
    dW -= para(Wat, s.W, cfg);
    dW -= para(Wa, d.first, cfg);
    dW -= balanced(Wat, reW, cfg);
    dW -= balanced(Wa, reWt, cfg);
    Field dQ = d.second;
    dQ -= para(Rt, s.W, cfg);
    dQ -= para(s.aux.R, d.first, cfg);
    dQ -= balanced(Rt, reW, cfg);
    dQ -= balanced(s.aux.R, reWt, cfg);
    return {P(dW), P(dQ)};
}

FieldPair paradiff_terms(const HoloField& Wn, const HoloField& Qn, const ParaConfig& cfg) {
    const Field Wa = Wn.dx(), Qa = Qn.dx();
    const Field reWa = re2(Wa), reQa = re2(Qa);
    const Field tq = para(reQa, Qa, cfg);
    return {P(para(reQa, Wa, cfg) - para(reWa, Qa, cfg)), P(tq)};
}

FieldPair paradiff_lhs(const HoloField& Wn, const HoloField& Qn, const Field& dWn, const Field& dQn,
                       const ParaConfig& cfg) {
    const auto pt = paradiff_terms(Wn, Qn, cfg);
    return {P(dWn + Qn.dx() + pt.first), P(dQn - I * Wn + pt.second)};
}

FieldPair flow_residual_analytic(const WaveState& s, const ParaConfig& cfg, bool nonlinear) {
    const auto d = rhs_full(s.W, s.Q, nonlinear);
    const auto nf = para_nf(s, cfg);
    const auto nd = para_nf_dt(s, d, cfg);
    return paradiff_lhs(nf.W, nf.Q, nd.first, nd.second, cfg);
}

FlowResidual flow_residual(const std::array<WaveState, 3>& traj, const ParaConfig& cfg, bool nonlinear) {
    const double h1 = traj[1].t - traj[0].t, h2 = traj[2].t - traj[1].t;
    if (!(h1 > 0.0) || std::abs(h1 - h2) > 1e-9 * std::max(1.0, std::abs(h1)))
        throw Error(ErrorCode::InconsistentTimes, "snapshots must be equally spaced and increasing");
    FlowResidual out;
    out.dt = h1;
    out.analytic = flow_residual_analytic(traj[1], cfg, nonlinear);
    const auto n0 = para_nf(traj[0], cfg);
    const auto n1 = para_nf(traj[1], cfg);
    const auto n2 = para_nf(traj[2], cfg);
    const double c = 1.0 / (2.0 * h1);
    out.centered = paradiff_lhs(n1.W, n1.Q, c * (n2.W - n0.W), c * (n2.Q - n0.Q), cfg);
    return out;
}

void fill_cubic_sources(NormalFormState& nf, const ParaConfig& cfg) {
    const auto g = cubic::evaluate_sources(nf.W, nf.Q, cfg);
    nf.G3 = g.first;
    nf.K3 = g.second;
}

Field times_alpha(const Field& u) {
    const GridSpec& g = u.grid();
    Phys p = u.phys();
    for (int n = 0; n < g.N; ++n) p[n] *= g.alpha(n);
    return p.field();
}

ScalingDerivatives scaling_fields(const WaveState& s, const ParaConfig& cfg, bool nonlinear) {
    const double t = s.t;
    const auto d = rhs_full(s.W, s.Q, nonlinear);
    ScalingDerivatives sd;
    sd.SW = P(t * d.first + 2.0 * times_alpha(s.W.dx()));
    sd.SQ = P(t * d.second + 2.0 * times_alpha(s.Q.dx()));
    const HoloField fw = P(sd.SW - 2.0 * s.W);
    const HoloField fq = P(sd.SQ - 3.0 * s.Q);
    sd.frak_w = fw;
    sd.frak_r = P(fq - mul(s.aux.R, fw));

    const auto nf = para_nf(s, cfg);
    const auto nd = para_nf_dt(s, d, cfg);
    const Field nWa = nf.W.dx(), nQa = nf.Q.dx();
    sd.SWn = P(t * nd.first + 2.0 * times_alpha(nWa));
    sd.SQn = P(t * nd.second + 2.0 * times_alpha(nQa));
    const auto pt = paradiff_terms(nf.W, nf.Q, cfg);
    // tilde S = (2 alpha W~_a - t Q~_a + t(T W - T Q terms), 2 alpha Q~_a + i t W~ - t T Q)
    sd.tilde_S_W = P(2.0 * times_alpha(nWa) - t * nQa - t * pt.first);
    sd.tilde_S_Q = P(2.0 * times_alpha(nQa) + I * t * nf.W - t * pt.second);
    const auto lhs = paradiff_lhs(nf.W, nf.Q, nd.first, nd.second, cfg);
    const Field rW = sd.tilde_S_W - (sd.SWn - t * lhs.first);
    const Field rQ = sd.tilde_S_Q - (sd.SQn - t * lhs.second);
    const double scale = std::hypot(sd.tilde_S_W.l2(), sd.tilde_S_Q.l2());
    sd.relation_residual = std::hypot(rW.l2(), rQ.l2()) / (scale > 0.0 ? scale : 1.0);
    return sd;
}

}  // namespace ww
