#pragma once
// Projectors, Fourier multipliers, Littlewood-Paley blocks and norms.

#include <utility>

#include "ww/field.hpp"

namespace ww {

// Keeps k < 0; the zero mode is dropped.
HoloField project_neg(const Field& u);
// Keeps k > 0 (conjugate projector); the zero mode is dropped.
Field project_pos(const Field& u);

// |D|^s; s < 0 requires a vanishing mean.
Field frac_derivative(const Field& u, double s);
// <D>^s = (1 + |D|^2)^{s/2}
Field bracket_derivative(const Field& u, double s);

namespace lp {

// Raised-cosine block centred at 2^k, support (2^{k-1}, 2^{k+1}).
double symbol(int k, double xi);
// sum_{k' <= k} symbol(k', xi), equal to 1 at xi = 0.
double low_symbol(int k, double xi);
// Dyadic indices whose block support meets [dk, k_nyquist].
std::pair<int, int> band(const GridSpec& g);

}  // namespace lp

Field lp_project(const Field& u, int k);
// Low-pass: all blocks up to and including k, plus the mean.
Field lp_low(const Field& u, int k);

double besov_norm(const Field& u, double s);  // homogeneous B^s_{inf,2}

// Pair norm: first slot weighted |k|^s (or <k>^s), second |k|^{s+1/2} (or <k>^s |k|^{1/2}).
double sobolev_norm(const Field& w, const Field& r, double s, bool homogeneous = true);
double lp_norm(const Field& u, double p);  // grid L^p norm with dx weights

}  // namespace ww
