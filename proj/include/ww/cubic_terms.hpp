#pragma once
// Cubic source terms of the paradifferential system, as a data-driven table.

#include <functional>
#include <string>
#include <vector>

#include "ww/paradiff.hpp"

namespace ww::cubic {

enum class TermClass { resonant, nonresonant, null, unclassified };
std::string to_string(TermClass c);

// Shared inputs, evaluated once per state.
struct Inputs {
    HoloField W, Q;      // normal form variables
    Field Wa, Qa;        // their derivatives
    Field F2;            // P[conj(Q_a) W_a - Q_a conj(W_a)]
    Field QaWa;
    Field reW, reWa, reQa;  // 2 Re of W, W_a, Q_a
    Field Wa2, cWa2;        // W_a^2 and its conjugate
    Field AW, AQ;           // T_{W_a} W + Pi(W_a, 2Re W) and the same with Q_a
    ParaConfig cfg;

    static Inputs make(const HoloField& W, const HoloField& Q, const ParaConfig& cfg);
    Field T(const Field& a, const Field& b) const { return para(a, b, cfg); }
    Field Pi(const Field& a, const Field& b) const { return balanced(a, b, cfg); }
};

struct Term {
    std::string id;
    std::string group;  // G1..G3, K1..K3 for the source table; Gr, Gnr, ... for the classified table
    std::string expr;   // human-readable form
    int ref_line = 0;   // line of the reference derivation this was transcribed from
    TermClass cls = TermClass::unclassified;
    bool in_G = true;   // false for K terms
    std::function<Field(const Inputs&)> eval;
};

// Terms of (G3, K3) grouped G1..G3 and K1..K3.
const std::vector<Term>& source_table();
// Same cubic sources regrouped into resonant / nonresonant / null classes.
const std::vector<Term>& classified_table();

// Throws UnknownTerm if id is not in the classified table.
TermClass classify_cubic(const std::string& id);
const Term& find_term(const std::string& id);

// Sum of the source table: (G3, K3), projected.
std::pair<HoloField, HoloField> evaluate_sources(const HoloField& W, const HoloField& Q, const ParaConfig& cfg = {});
std::pair<HoloField, HoloField> evaluate_table(const std::vector<Term>& table, const Inputs& in,
                                               const std::function<bool(const Term&)>& keep = {});

// Tab-separated dump: id, group, class, ref_line, expression.
std::string dump_table(const std::vector<Term>& table);

}  // namespace ww::cubic
