#pragma once
// Holomorphic water-wave system: auxiliaries, right-hand sides, linearization,
// energy and time stepping.

#include <iosfwd>
#include <string>
#include <utility>

#include "ww/field.hpp"

namespace ww {

struct Aux {
    Field Wa;     // W_alpha
    HoloField R;  // Q_alpha / (1 + W_alpha)
    HoloField Y;  // W_alpha / (1 + W_alpha)
    Field J;      // |1 + W_alpha|^2 (real)
    HoloField F;  // rational form
    HoloField F_alt;  // R + P[conj(R) Y - R conj(Y)]
    Field b;      // transport velocity
    Field a;      // pressure coefficient (real)
    Field M;      // R_a/(1+conj W_a) + conj(R_a)/(1+W_a) - b_a
    Field M_alt;  // projected form
    double min_J = 1.0;
};

Aux compute_aux(const HoloField& W, const HoloField& Q);

struct WaveState {
    double t = 0.0;
    HoloField W;
    HoloField Q;
    Aux aux;

    static WaveState make(double t, HoloField W, HoloField Q);
    const GridSpec& grid() const { return W.grid(); }
};

struct LinState {
    double t = 0.0;
    HoloField w;
    HoloField r;  // good variable r = q - R w
};

struct FieldPair {
    HoloField first;
    HoloField second;
};

enum class Scheme { rk4, rk4_integrating_factor };

std::string to_string(Scheme s);
Scheme scheme_from_string(const std::string& s);

struct StepperConfig {
    double dt = 0.05;
    Scheme scheme = Scheme::rk4_integrating_factor;
    bool dealias = true;
    bool nonlinear = true;
};

// Full nonlinear right-hand side (W_t, Q_t), projected by P.
FieldPair rhs_full(const HoloField& W, const HoloField& Q, bool nonlinear = true);
FieldPair rhs_full(const WaveState& s);
// Linear part (-Q_alpha, i W).
FieldPair rhs_linear(const HoloField& W, const HoloField& Q);

// Differentiated system: (d/dt W_alpha, d/dt R), transport moved to the right.
struct DiffRhs {
    HoloField dWa;
    HoloField dR;
    double positive_residual = 0.0;  // L2 size of what P removed
};
DiffRhs rhs_diff(const WaveState& s);

// Time derivative of R by the chain rule through rhs_full.
HoloField R_time_derivative(const WaveState& s, const FieldPair& dt);

struct LinearizeResult {
    HoloField dw;
    HoloField dr;
};
// Directional derivative of rhs_full (two-sided difference), mapped to good variables.
LinearizeResult linearize(const WaveState& s, const LinState& dir, int order = 2);

double hamiltonian(const HoloField& W, const HoloField& Q);
cplx hamiltonian_complex(const HoloField& W, const HoloField& Q);

double max_frequency(const GridSpec& g);
void check_stability(const GridSpec& g, const StepperConfig& cfg);
WaveState step(const WaveState& s, const StepperConfig& cfg);
// Exact linear propagator over time h, applied mode by mode.
FieldPair linear_propagate(const HoloField& W, const HoloField& Q, double h);

// Text serialization: header with L, N, rho; one row per mode "j, Re, Im".
void write_field(std::ostream& os, const Field& f);
Field read_field(std::istream& is);

struct Checkpoint {
    double t = 0.0;
    double eps = 0.0;
    Scheme scheme = Scheme::rk4_integrating_factor;
    HoloField W;
    HoloField Q;
};
void write_checkpoint(const std::string& path, const Checkpoint& c);
Checkpoint read_checkpoint(const std::string& path);

}  // namespace ww
