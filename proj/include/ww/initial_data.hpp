#pragma once
// Initial data and seeded random probe fields.

#include <cstdint>
#include <random>

#include "ww/dynamics.hpp"

namespace ww {

using Rng = std::mt19937_64;

// Random holomorphic field with smooth random spectrum on |k| in [k_lo, k_hi],
// scaled so that its sup norm equals amplitude.
HoloField random_holo(const GridSpec& g, Rng& rng, double k_lo, double k_hi, double amplitude);
// Random general (two-sided) field, zero mean.
Field random_field(const GridSpec& g, Rng& rng, double k_lo, double k_hi, double amplitude);

struct PacketData {
    double eps = 1e-3;      // sup norm of W_alpha
    double xi_lo = 0.05;    // spectral support of W in |xi|
    double xi_hi = 1.5;
    double center = 0.0;    // spatial centre
    bool right_moving = true;
};

// Localized data with compactly supported smooth spectrum away from xi = 0.
// Q = |D|^{-1/2} W makes it a one-branch (right-moving) linear wave.
std::pair<HoloField, HoloField> packet_data(const GridSpec& g, const PacketData& p);

// Single mode W = A e^{i k_j alpha} (j < 0), Q = |k|^{-1/2} W.
std::pair<HoloField, HoloField> single_mode(const GridSpec& g, int j, double amplitude);

// Smooth compactly supported bump exp(1 - 1/(1-y^2)) on |y| < 1 (unnormalized).
double bump(double y);

}  // namespace ww
