#pragma once
// Paraproducts T_a b, balanced products Pi(a, b) and related checks.

#include "ww/field.hpp"

namespace ww {

enum class Quantization { plain, symmetric_average };

struct ParaConfig {
    int separation = 4;  // "low" means |eta| <= 2^{-m} |xi|
    Quantization quant = Quantization::symmetric_average;
    bool implicit_P = true;

    void validate() const;
};

// Low-high paraproduct. For symmetric_average this is (T_a + (T_{conj a})^*) / 2,
// which is self-adjoint for real a and keeps the Leibniz rule.
Field para(const Field& a, const Field& b, const ParaConfig& cfg = {});
// Adjoint of the plain paraproduct: sum_j P_j(conj(S_{j-m} a) v).
Field para_adjoint(const Field& a, const Field& v, const ParaConfig& cfg = {});
// Pi(a, b) = ab - T_a b - T_b a, then the implicit projection.
Field balanced(const Field& a, const Field& b, const ParaConfig& cfg = {});

// ||ab - T_a b - T_b a - Pi(a,b)|| / ||ab|| with the projection disabled.
double trichotomy_residual(const Field& a, const Field& b, const ParaConfig& cfg = {}, bool dealias = true);

// max over probes u in block k of ||[chi, T_a] d_alpha u|| / ||u||.
double commutator_norm(const Field& a, const Field& chi, int k, const ParaConfig& cfg = {}, int probes = 4,
                       unsigned seed = 7);

}  // namespace ww
