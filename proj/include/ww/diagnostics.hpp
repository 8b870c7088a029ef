#pragma once
// Control norms, weighted energy, spatial/frequency localization and decay fits.

#include <functional>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "ww/dynamics.hpp"
#include "ww/normal_form.hpp"

namespace ww {

struct NormRecord {
    double t = 0.0;
    double A0 = 0.0, A_quarter = 0.0, A_half = 0.0, A_sharp = 0.0;
    double X = 0.0;
    double WH_sharp = 0.0;
    double X_sharp = 0.0, X_sharp_ell = 0.0;  // zero when t < 1
    double energy = 0.0;                       // Hamiltonian
    std::vector<std::pair<double, double>> Hs;  // (s, ||(W_a, R)||_{H^s})
};

struct NormOptions {
    double sigma = 3.0;
    std::vector<double> hs{0.0, 0.25, 0.5, 1.0};
    bool weighted = true;  // WH_sharp needs the scaling fields
    bool sharp = true;     // X_sharp needs the split
    ParaConfig para{};
};

// Homogeneous pair norm: ||w||_{H^s} + ||q||_{H^{s+1/2}} in the quadratic-sum form.
double pair_norm(const Field& w, const Field& q, double s);
// Pointwise norm of the differentiated pair.
double x_norm(const Field& Wa, const Field& R);
// Reference norm on (w, q): Besov norms of w_a and q_a.
double x0_norm(const Field& w, const Field& q);

NormRecord control_norms(const WaveState& s, const NormOptions& o = {});
std::vector<std::string> norm_ids();
// Throws UsageError on an unknown id.
double norm_value(const NormRecord& r, const std::string& id);

struct WeightedEnergy {
    double base = 0.0;     // ||(W, Q)||_{H^{1/4}}
    double high = 0.0;     // ||(W_a, R)||_{H^{sigma-1}}
    double scaling = 0.0;  // ||(frak w, frak r)||_{H^{1/4}}
    double total() const { return base + high + scaling; }
};
WeightedEnergy weighted_energy(const WaveState& s, const ScalingDerivatives& sd, double sigma);
// ||alpha (W_a, R)||_{H^{1/4}}, the form the scaling term takes at t = 0.
double weighted_energy_t0_reference(const WaveState& s);

// Dyadic spatial cover in |alpha| with raised-cosine bumps (50% overlap).
struct DyadicCover {
    double t = 1.0;
    double alpha_lo = 1.0, alpha_hi = 1.0;
    int j_lo = 0, j_hi = -1;  // block indices carrying their own localizer

    static DyadicCover make(double t, const GridSpec& g);
    double low(double alpha) const;   // everything below block j_lo
    double block(int j, double alpha) const;
    double high(double alpha) const;  // everything above block j_hi
};

struct Localizer {
    enum class Kind { low, block, high };
    Kind kind = Kind::block;
    int j = 0;
    double alpha0 = 1.0;
    const DyadicCover* cover = nullptr;

    double operator()(double alpha) const;
    // w1 = chi w, d_a q1 = chi q_a (q1 has zero mean).
    std::pair<Field, Field> apply(const Field& w, const Field& q) const;
};

// Frequency multipliers of the hyperbolic band around xi0 (acting on |xi|).
namespace band {
double hyp(double xi, double xi0);
double below(double xi, double xi0);
double above(double xi, double xi0);
}  // namespace band

struct HypBlock {
    int j = 0;
    double alpha0 = 0.0, xi0 = 0.0;
    Field w_loc, q_loc;
    Field w_hyp, q_hyp;
    Field w_below, q_below, w_above, q_above;
    double concentration = 0.0;  // fraction of hyp mass within one octave of xi0
    double capture = 0.0;        // fraction of localized mass in the hyp band
};

struct EllHypSplit {
    double t = 0.0;
    DyadicCover cover;
    Field w_lo, q_lo, w_hi, q_hi;  // spatial low / high pieces
    std::vector<HypBlock> blocks;
    Field w_hyp, q_hyp, w_ell, q_ell;
};

// Throws TimeTooSmall for t < 1.
EllHypSplit ell_hyp_split(const Field& w, const Field& q, double t);

struct XSharp {
    double lo = 0.0, hi = 0.0, sup_block = 0.0, total = 0.0;
    double ell_sup = 0.0, ell_total = 0.0;
    double a = 1.25, b = 0.0;
    std::vector<std::pair<double, double>> per_block;  // (alpha0, block norm)
};
XSharp xsharp_norm(const EllHypSplit& split, double sigma);
double xsharp_exponent_b(double sigma);

// X norm of the hyperbolic blocks whose centre velocity lies outside [t^-delta, t^delta].
double masked_hyp_x_norm(const EllHypSplit& split, double delta);

struct FitResult {
    double slope = 0.0;
    double stderr_slope = 0.0;
    double intercept = 0.0;
    int samples = 0;
};
// Least-squares slope of log y against log t on [t_lo, t_hi]; needs >= 8 samples over a decade.
FitResult decay_fit(const std::vector<double>& t, const std::vector<double>& y, double t_lo, double t_hi);
FitResult decay_fit(const std::vector<NormRecord>& recs, const std::string& norm_id, double t_lo, double t_hi);

void write_norms_csv(std::ostream& os, const std::vector<NormRecord>& recs);
std::vector<NormRecord> read_norms_csv(std::istream& is);

}  // namespace ww
