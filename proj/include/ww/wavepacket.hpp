#pragma once
// Wave packets along rays alpha = v t, the profile gamma(t, v) and its asymptotic equation.

#include <iosfwd>
#include <vector>

#include "ww/diagnostics.hpp"
#include "ww/normal_form.hpp"

namespace ww {

// Unit-integral C^infinity bump on (-1, 1) and its first two derivatives.
namespace packet_bump {
double value(double y);
double d1(double y);
double d2(double y);
double normalization();  // integral of the raw bump exp(1 - 1/(1 - y^2))
}  // namespace packet_bump

struct PacketFrame {
    double t = 0.0, v = 0.0;
    double width = 0.0;  // t^{1/2} v^{3/2}
    Field u, u_t, u_tt, u_a;  // closed forms on the grid
    Field w, q;          // (-i v u_t, v u)
    Field w_closed;      // the explicit expansion of w in terms of the bump
    double xi_v() const { return -1.0 / (4.0 * v * v); }
    double phase_at_ray() const { return t / (4.0 * v); }
};

struct PacketOptions {
    bool require_velocity_band = true;  // v inside the central band
    double margin_widths = 5.0;
};

// Central velocity band t^{-1/100} <= v <= t^{1/100}.
std::pair<double, double> velocity_band(double t);
std::vector<double> velocity_grid(double t, int count = 33);

// Throws OutOfDomain (t < 4, v out of band, unresolved) or WrapAround.
PacketFrame build_packet(double t, double v, const GridSpec& g, const PacketOptions& opt = {});

struct PacketDefect {
    Field g_closed;     // v (d_a - i d_t^2) u from the closed form
    Field g_direct;     // d_t w + d_a q assembled from the analytic derivatives
    Field leading, subleading;
    double rel_size = 0.0;  // ||g|| / ||w||, expected to decay like 1/t
    double agreement = 0.0;  // ||closed - direct|| / ||direct||
};
PacketDefect packet_defect(const PacketFrame& f);

// Leading-order Fourier transform of u (transform int u e^{-i xi alpha}):
// t^{1/2} chi1(z) e^{i t sqrt|xi|}, z = (xi - xi_v) t^{1/2} v^{3/2}, where chi1 is
// the chirped bump transform times the curvature of t sqrt|xi| about xi_v.
// Evaluated through the tangent phase, which also covers the tail at xi >= 0.
cplx packet_spectrum_model(double t, double v, double xi);
// Relative L^2 mismatch between the grid spectrum of f.u and the model.
double packet_spectrum_mismatch(const PacketFrame& f);

// Complex pairing <(W, Q), (w, q)> in L^2 x H^{1/2}.
cplx gamma(const HoloField& W, const HoloField& Q, const PacketFrame& f);
cplx gamma(const NormalFormState& nf, const PacketFrame& f);
// One half of the integral of (W + sgn(v)|D|^{1/2} Q) conj(u).
cplx gamma_reduced(const HoloField& W, const HoloField& Q, const PacketFrame& f);
// d/dt gamma with the analytic derivative of both the state and the packet.
cplx gamma_dt(const HoloField& W, const HoloField& Q, const Field& dW, const Field& dQ, const PacketFrame& f);

double ode_coefficient(double t, double v);  // 1 / (2 t (2 v)^5)

struct GammaProfile {
    std::vector<double> v;
    std::vector<double> times;
    std::vector<std::vector<cplx>> gamma;   // [time][velocity]
    std::vector<std::vector<cplx>> dgamma;  // analytic estimator
};

// Sample gamma and its analytic derivative at time s.t for the profile's velocity grid.
void sample_profile(GammaProfile& p, const WaveState& s, const ParaConfig& cfg = {}, const PacketOptions& opt = {});

struct AsymptoticResidual {
    std::vector<double> times;
    std::vector<std::vector<cplx>> e_analytic;
    std::vector<std::vector<cplx>> e_centered;  // NaN at the first and last time
    std::vector<std::vector<double>> cubic;      // |gamma|^3 / (2 t (2 v)^5)
};
// Throws InsufficientSamples with fewer than 3 times.
AsymptoticResidual asymptotic_residual(const GammaProfile& p);

void write_profile_csv(std::ostream& os, const GammaProfile& p, const AsymptoticResidual* res = nullptr);

// theta(v) = int f u_v dalpha on the given velocity grid at time t.
std::vector<cplx> theta_functional(const Field& f, double t, const std::vector<double>& v, const GridSpec& g,
                                   const PacketOptions& opt = {});
// Trapezoid L^2 norm over a velocity grid.
double l2_velocity(const std::vector<double>& v, const std::vector<double>& values);

struct ReconstructionError {
    std::vector<double> v;
    std::vector<cplx> err_w, err_q;  // both components of err_s on the ray grid
    double l2_weighted = 0.0;        // || v^{2s-1} err ||_{L^2_v}
    double linf_weighted = 0.0;      // || v^{2s-1/4} err ||_{L^inf}
    double peak = 0.0;               // max of the model amplitude
};
// Hyperbolic part of a field, localized as a w-type component.
Field hyp_part(const Field& f, double t);
ReconstructionError packet_reconstruction_error(const HoloField& W, const HoloField& Q, double t, double s,
                                                const std::vector<double>& v, const PacketOptions& opt = {});

}  // namespace ww
