#pragma once
// Classical and paradifferential normal forms, flow residuals and scaling fields.

#include <array>
#include <vector>

#include "ww/dynamics.hpp"
#include "ww/paradiff.hpp"

namespace ww {

struct NormalFormState {
    double t = 0.0;
    HoloField W;   // normal form variables
    HoloField Q;
    HoloField F2;  // P[conj(Q_a) W_a - Q_a conj(W_a)] in normal form variables
    HoloField G3, K3;
    HoloField resid_G, resid_K;
};

FieldPair classical_nf(const WaveState& s);
// Time derivative of the classical normal form variables (chain rule through rhs_full).
FieldPair classical_nf_dt(const WaveState& s, const FieldPair& dt);
// Sources W~_t + Q~_a and Q~_t - i W~ of the classical normal form.
FieldPair classical_sources(const WaveState& s);
// Raw sources W_t + Q_a and Q_t - i W.
FieldPair raw_sources(const WaveState& s);

NormalFormState para_nf(const WaveState& s, const ParaConfig& cfg = {});
FieldPair para_nf_dt(const WaveState& s, const FieldPair& dt, const ParaConfig& cfg = {});

// Left sides of the paradifferential system given the time derivatives.
FieldPair paradiff_lhs(const HoloField& Wn, const HoloField& Qn, const Field& dWn, const Field& dQn,
                       const ParaConfig& cfg = {});
// Paradifferential terms only: (-T_{2Re W_a} Q_a + T_{2Re Q_a} W_a, T_{2Re Q_a} Q_a).
FieldPair paradiff_terms(const HoloField& Wn, const HoloField& Qn, const ParaConfig& cfg = {});

// Measured residual at the middle snapshot with the analytic time derivative.
FieldPair flow_residual_analytic(const WaveState& s, const ParaConfig& cfg = {}, bool nonlinear = true);

struct FlowResidual {
    FieldPair analytic;
    FieldPair centered;
    double dt = 0.0;
};
// Three equally spaced snapshots; throws InconsistentTimes otherwise.
FlowResidual flow_residual(const std::array<WaveState, 3>& traj, const ParaConfig& cfg = {}, bool nonlinear = true);

// Cubic sources from the term table, stored into nf.G3 / nf.K3.
void fill_cubic_sources(NormalFormState& nf, const ParaConfig& cfg = {});

struct ScalingDerivatives {
    HoloField SW, SQ;            // (t d_t + 2 alpha d_alpha) applied to (W, Q)
    HoloField frak_w, frak_r;    // A S(W, Q)
    HoloField SWn, SQn;          // S applied to the normal form variables
    HoloField tilde_S_W, tilde_S_Q;  // paradifferential scaling operator on (W~, Q~)
    double relation_residual = 0.0;  // ||tilde S - (S W~ - t G~)|| over ||tilde S||
};

// Multiplication by the periodic coordinate alpha in [-L/2, L/2).
Field times_alpha(const Field& u);

ScalingDerivatives scaling_fields(const WaveState& s, const ParaConfig& cfg = {}, bool nonlinear = true);

}  // namespace ww
