#include "ww/cubic_terms.hpp"

#include <sstream>

#include "ww/spectral.hpp"

namespace ww::cubic {

std::string to_string(TermClass c) {
    switch (c) {
        case TermClass::resonant: return "resonant";
        case TermClass::nonresonant: return "nonresonant";
        case TermClass::null: return "null";
        case TermClass::unclassified: break;
    }
    return "unclassified";
}

namespace {

Field re2(const Field& f) { return f + f.conj(); }
Field d(const Field& f) { return f.dx(); }

}  // namespace

Inputs Inputs::make(const HoloField& W, const HoloField& Q, const ParaConfig& cfg) {
    Inputs in;
    in.cfg = cfg;
    in.W = W;
    in.Q = Q;
    in.Wa = W.dx();
    in.Qa = Q.dx();
    in.F2 = project_neg(mul(in.Qa.conj(), in.Wa) - mul(in.Qa, in.Wa.conj()));
    in.QaWa = mul(in.Qa, in.Wa);
    in.reW = re2(W);
    in.reWa = re2(in.Wa);
    in.reQa = re2(in.Qa);
    in.Wa2 = mul(in.Wa, in.Wa);
    in.cWa2 = in.Wa2.conj();
    in.AW = in.T(in.Wa, W) + in.Pi(in.Wa, in.reW);
    in.AQ = in.T(in.Qa, W) + in.Pi(in.Qa, in.reW);
    return in;
}

namespace {

using C = TermClass;

Term g(std::string id, std::string group, std::string expr, int line, C cls, std::function<Field(const Inputs&)> f) {
    return Term{std::move(id), std::move(group), std::move(expr), line, cls, true, std::move(f)};
}
Term k(std::string id, std::string group, std::string expr, int line, C cls, std::function<Field(const Inputs&)> f) {
    return Term{std::move(id), std::move(group), std::move(expr), line, cls, false, std::move(f)};
}

// T_{Q_a} W + Pi(Q_a, W), the variant without the conjugate half.
Field AQ_half(const Inputs& x) { return x.T(x.Qa, x.W) + x.Pi(x.Qa, x.W); }
Field AW_half(const Inputs& x) { return x.T(x.Wa, x.W) + x.Pi(x.Wa, x.W); }
Field PabsQa2(const Inputs& x) { return project_neg(mul(x.Qa, x.Qa.conj())); }

std::vector<Term> build_sources() {
    constexpr C U = C::unclassified;
    std::vector<Term> t;
    // G1
    t.push_back(g("G1.a", "G1", "T_{W_a}(Q_a W_a)", 1089, U, [](const Inputs& x) { return x.T(x.Wa, x.QaWa); }));
    t.push_back(g("G1.b", "G1", "T_{(Q_a W_a)_a} W", 1089, U, [](const Inputs& x) { return x.T(d(x.QaWa), x.W); }));
    t.push_back(g("G1.c", "G1", "Pi(W_a, 2Re[Q_a W_a])", 1089, U,
                  [](const Inputs& x) { return x.Pi(x.Wa, re2(x.QaWa)); }));
    t.push_back(g("G1.d", "G1", "Pi((Q_a W_a)_a, 2Re W)", 1089, U,
                  [](const Inputs& x) { return x.Pi(d(x.QaWa), x.reW); }));
    // G2
    t.push_back(g("G2.a", "G2", "-W_a F2", 1090, U, [](const Inputs& x) { return -mul(x.Wa, x.F2); }));
    t.push_back(g("G2.b", "G2", "T_{F2_a} W", 1090, U, [](const Inputs& x) { return x.T(d(x.F2), x.W); }));
    t.push_back(g("G2.c", "G2", "Pi(d_a F2, 2Re W)", 1091, U, [](const Inputs& x) { return x.Pi(d(x.F2), x.reW); }));
    t.push_back(g("G2.d", "G2", "Pi(F2, W_a)", 1091, U, [](const Inputs& x) { return x.Pi(x.F2, x.Wa); }));
    t.push_back(g("G2.e", "G2", "Pi(W_a, conj F2)", 1091, U, [](const Inputs& x) { return x.Pi(x.Wa, x.F2.conj()); }));
    t.push_back(g("G2.f", "G2", "-Pi(conj W_a^2, Q_a)", 1092, U, [](const Inputs& x) { return -x.Pi(x.cWa2, x.Qa); }));
    t.push_back(g("G2.g", "G2", "Pi(conj Q_a, W_a^2)", 1092, U,
                  [](const Inputs& x) { return x.Pi(x.Qa.conj(), x.Wa2); }));
    t.push_back(g("G2.h", "G2", "-T_{conj W_a^2} Q_a", 1093, U, [](const Inputs& x) { return -x.T(x.cWa2, x.Qa); }));
    t.push_back(g("G2.i", "G2", "-T_{conj W_a} F2", 1093, U, [](const Inputs& x) { return -x.T(x.Wa.conj(), x.F2); }));
    t.push_back(g("G2.j", "G2", "T_{conj Q_a} W_a^2", 1093, U, [](const Inputs& x) { return x.T(x.Qa.conj(), x.Wa2); }));
    // G3
    t.push_back(g("G3.a", "G3", "T_{2Re(A_W)_a} Q_a", 1094, U, [](const Inputs& x) { return x.T(re2(d(x.AW)), x.Qa); }));
    t.push_back(g("G3.b", "G3", "T_{2Re W_a}(-Q_a W_a + F2)", 1095, U,
                  [](const Inputs& x) { return x.T(x.reWa, x.F2 - x.QaWa); }));
    t.push_back(g("G3.c", "G3", "T_{2Re W_a}(A_Q)_a", 1095, U, [](const Inputs& x) { return x.T(x.reWa, d(x.AQ)); }));
    t.push_back(g("G3.d", "G3", "T_{2Re(Q_a W_a - (A_Q)_a)} W_a", 1096, U,
                  [](const Inputs& x) { return x.T(re2(x.QaWa - d(x.AQ)), x.Wa); }));
    t.push_back(g("G3.e", "G3", "-T_{2Re Q_a}(A_W)_a", 1096, U, [](const Inputs& x) { return -x.T(x.reQa, d(x.AW)); }));
    // K1
    t.push_back(k("K1.a", "K1", "T_{(Q_a^2/2 + P|Q_a|^2)_a} W", 1098, U, [](const Inputs& x) {
        return x.T(d(0.5 * mul(x.Qa, x.Qa) + PabsQa2(x)), x.W);
    }));
    t.push_back(k("K1.b", "K1", "T_{Q_a}(T_{W_a} Q_a + Pi(W_a, Q_a))", 1098, U,
                  [](const Inputs& x) { return x.T(x.Qa, x.T(x.Wa, x.Qa) + x.Pi(x.Wa, x.Qa)); }));
    t.push_back(k("K1.c", "K1", "Pi((Q_a^2/2 + P|Q_a|^2)_a, 2Re W)", 1099, U, [](const Inputs& x) {
        return x.Pi(d(0.5 * mul(x.Qa, x.Qa) + PabsQa2(x)), x.reW);
    }));
    t.push_back(k("K1.d", "K1", "Pi(Q_a, 2Re[Q_a W_a])", 1099, U,
                  [](const Inputs& x) { return x.Pi(x.Qa, re2(x.QaWa)); }));
    t.push_back(k("K1.e", "K1", "-Pi(W_a Q_a, Q_a)", 1100, U, [](const Inputs& x) { return -x.Pi(x.QaWa, x.Qa); }));
    t.push_back(k("K1.f", "K1", "Pi(Q_a, conj F2)", 1100, U, [](const Inputs& x) { return x.Pi(x.Qa, x.F2.conj()); }));
    t.push_back(k("K1.g", "K1", "-T_{Q_a W_a} Q_a", 1100, U, [](const Inputs& x) { return -x.T(x.QaWa, x.Qa); }));
    // K2
    t.push_back(k("K2.a", "K2", "i T_{W_a^2} W", 1101, U, [](const Inputs& x) { return I * x.T(x.Wa2, x.W); }));
    t.push_back(k("K2.b", "K2", "i Pi(W_a^2, 2Re W)", 1101, U, [](const Inputs& x) { return I * x.Pi(x.Wa2, x.reW); }));
    t.push_back(k("K2.c", "K2", "-T_{F2} Q_a", 1101, U, [](const Inputs& x) { return -x.T(x.F2, x.Qa); }));
    // K3
    t.push_back(k("K3.a", "K3", "-T_{2Re(A_Q)_a} Q_a", 1102, U,
                  [](const Inputs& x) { return -x.T(re2(d(x.AQ)), x.Qa); }));
    t.push_back(k("K3.b", "K3", "-T_{2Re Q_a}(A_Q)_a", 1102, U, [](const Inputs& x) { return -x.T(x.reQa, d(x.AQ)); }));
    t.push_back(k("K3.c", "K3", "T_{2Re(Q_a W_a)} Q_a", 1103, U,
                  [](const Inputs& x) { return x.T(re2(x.QaWa), x.Qa); }));
    t.push_back(k("K3.d", "K3", "T_{conj Q_a}(Q_a W_a)", 1103, U,
                  [](const Inputs& x) { return x.T(x.Qa.conj(), x.QaWa); }));
    t.push_back(k("K3.e", "K3", "T_{Q_a} T_{Q_a} W_a", 1103, U,
                  [](const Inputs& x) { return x.T(x.Qa, x.T(x.Qa, x.Wa)); }));
    return t;
}

std::vector<Term> build_classified() {
    constexpr C R = C::resonant, N = C::nonresonant, Z = C::null;
    std::vector<Term> t;
    // G resonant
    t.push_back(g("Gr.1", "Gr", "Pi((Q_a W_a)_a, conj W)", 3787, R,
                  [](const Inputs& x) { return x.Pi(d(x.QaWa), x.W.conj()); }));
    t.push_back(g("Gr.2", "Gr", "Pi(conj Q_a, W_a^2)", 3787, R,
                  [](const Inputs& x) { return x.Pi(x.Qa.conj(), x.Wa2); }));
    // G nonresonant
    t.push_back(g("Gnr.1", "Gnr", "T_{W_a}(Q_a W_a)", 3788, N, [](const Inputs& x) { return x.T(x.Wa, x.QaWa); }));
    t.push_back(g("Gnr.2", "Gnr", "T_{(Q_a W_a)_a} W", 3788, N, [](const Inputs& x) { return x.T(d(x.QaWa), x.W); }));
    t.push_back(g("Gnr.3", "Gnr", "Pi(W_a, 2Re[Q_a W_a])", 3788, N,
                  [](const Inputs& x) { return x.Pi(x.Wa, re2(x.QaWa)); }));
    t.push_back(g("Gnr.4", "Gnr", "Pi((Q_a W_a)_a, W)", 3788, N, [](const Inputs& x) { return x.Pi(d(x.QaWa), x.W); }));
    t.push_back(g("Gnr.5", "Gnr", "T_{2Re(T_{W_a} W + Pi(W_a, W))_a} Q_a", 3789, N,
                  [](const Inputs& x) { return x.T(re2(d(AW_half(x))), x.Qa); }));
    t.push_back(g("Gnr.6", "Gnr", "-T_{2Re W_a}(Q_a W_a)", 3789, N, [](const Inputs& x) { return -x.T(x.reWa, x.QaWa); }));
    t.push_back(g("Gnr.7", "Gnr", "T_{2Re W_a}(A_Q)_a", 3790, N, [](const Inputs& x) { return x.T(x.reWa, d(x.AQ)); }));
    t.push_back(g("Gnr.8", "Gnr", "T_{2Re(Q_a W_a - (T_{Q_a} W + Pi(Q_a, W))_a)} W_a", 3790, N,
                  [](const Inputs& x) { return x.T(re2(x.QaWa - d(AQ_half(x))), x.Wa); }));
    t.push_back(g("Gnr.9", "Gnr", "-T_{2Re Q_a}(A_W)_a", 3791, N, [](const Inputs& x) { return -x.T(x.reQa, d(x.AW)); }));
    t.push_back(g("Gnr.10", "Gnr", "-Pi(conj W_a^2, Q_a)", 3791, N, [](const Inputs& x) { return -x.Pi(x.cWa2, x.Qa); }));
    t.push_back(g("Gnr.11", "Gnr", "-T_{conj W_a^2} Q_a", 3792, N, [](const Inputs& x) { return -x.T(x.cWa2, x.Qa); }));
    t.push_back(g("Gnr.12", "Gnr", "-T_{conj W_a} F2", 3792, N, [](const Inputs& x) { return -x.T(x.Wa.conj(), x.F2); }));
    t.push_back(g("Gnr.13", "Gnr", "T_{conj Q_a} W_a^2", 3792, N,
                  [](const Inputs& x) { return x.T(x.Qa.conj(), x.Wa2); }));
    // G null
    t.push_back(g("Gnull.1", "Gnull", "T_{F2_a} W", 3793, Z, [](const Inputs& x) { return x.T(d(x.F2), x.W); }));
    t.push_back(g("Gnull.2", "Gnull", "-W_a F2", 3793, Z, [](const Inputs& x) { return -mul(x.Wa, x.F2); }));
    t.push_back(g("Gnull.3", "Gnull", "Pi(F2_a, 2Re W)", 3793, Z, [](const Inputs& x) { return x.Pi(d(x.F2), x.reW); }));
    t.push_back(g("Gnull.4", "Gnull", "Pi(F2, W_a)", 3793, Z, [](const Inputs& x) { return x.Pi(x.F2, x.Wa); }));
    t.push_back(g("Gnull.5", "Gnull", "T_{2Re W_a} F2", 3793, Z, [](const Inputs& x) { return x.T(x.reWa, x.F2); }));
    t.push_back(g("Gnull.6", "Gnull", "T_{2Re(Pi(W_a, conj W))_a} Q_a", 3794, Z,
                  [](const Inputs& x) { return x.T(re2(d(x.Pi(x.Wa, x.W.conj()))), x.Qa); }));
    t.push_back(g("Gnull.7", "Gnull", "T_{2Re(Pi(Q_a, conj W)_a)} W_a", 3794, Z,
                  [](const Inputs& x) { return x.T(re2(d(x.Pi(x.Qa, x.W.conj()))), x.Wa); }));
    t.push_back(g("Gnull.8", "Gnull", "Pi(W_a, conj F2)", 3794, Z, [](const Inputs& x) { return x.Pi(x.Wa, x.F2.conj()); }));
    // K nonresonant
    t.push_back(k("Knr.1", "Knr", "i T_{W_a^2} W", 3805, N, [](const Inputs& x) { return I * x.T(x.Wa2, x.W); }));
    t.push_back(k("Knr.2", "Knr", "-T_{2Re(T_{Q_a} W + Pi(Q_a, W))_a} Q_a", 3805, N,
                  [](const Inputs& x) { return -x.T(re2(d(AQ_half(x))), x.Qa); }));
    t.push_back(k("Knr.3", "Knr", "-T_{2Re Q_a}(A_Q)_a", 3806, N, [](const Inputs& x) { return -x.T(x.reQa, d(x.AQ)); }));
    t.push_back(k("Knr.4", "Knr", "T_{2Re(Q_a W_a)} Q_a", 3806, N,
                  [](const Inputs& x) { return x.T(re2(x.QaWa), x.Qa); }));
    t.push_back(k("Knr.5", "Knr", "T_{conj Q_a}(Q_a W_a)", 3806, N,
                  [](const Inputs& x) { return x.T(x.Qa.conj(), x.QaWa); }));
    t.push_back(k("Knr.6", "Knr", "T_{Q_a} T_{Q_a} W_a", 3808, N,
                  [](const Inputs& x) { return x.T(x.Qa, x.T(x.Qa, x.Wa)); }));
    t.push_back(k("Knr.7", "Knr", "T_{Q_a Q_aa} W", 3808, N,
                  [](const Inputs& x) { return x.T(mul(x.Qa, d(x.Qa)), x.W); }));
    t.push_back(k("Knr.8", "Knr", "T_{Q_a}(T_{W_a} Q_a + Pi(W_a, Q_a))", 3808, N,
                  [](const Inputs& x) { return x.T(x.Qa, x.T(x.Wa, x.Qa) + x.Pi(x.Wa, x.Qa)); }));
    t.push_back(k("Knr.9", "Knr", "Pi(Q_a, 2Re[Q_a W_a])", 3810, N,
                  [](const Inputs& x) { return x.Pi(x.Qa, re2(x.QaWa)); }));
    t.push_back(k("Knr.10", "Knr", "-Pi(W_a Q_a, Q_a)", 3810, N, [](const Inputs& x) { return -x.Pi(x.QaWa, x.Qa); }));
    t.push_back(k("Knr.11", "Knr", "-T_{Q_a W_a} Q_a", 3810, N, [](const Inputs& x) { return -x.T(x.QaWa, x.Qa); }));
    // K null
    t.push_back(k("Knull.1", "Knull", "-T_{2Re(Pi(Q_a, conj W))_a} Q_a", 3811, Z,
                  [](const Inputs& x) { return -x.T(re2(d(x.Pi(x.Qa, x.W.conj()))), x.Qa); }));
    t.push_back(k("Knull.2", "Knull", "-T_{F2} Q_a", 3811, Z, [](const Inputs& x) { return -x.T(x.F2, x.Qa); }));
    t.push_back(k("Knull.3", "Knull", "Pi(Q_a, conj F2)", 3811, Z, [](const Inputs& x) { return x.Pi(x.Qa, x.F2.conj()); }));
    t.push_back(k("Knull.4", "Knull", "T_{P[|Q_a|^2]_a} W", 3811, Z, [](const Inputs& x) { return x.T(d(PabsQa2(x)), x.W); }));
    t.push_back(k("Knull.5", "Knull", "2Pi(Re W, Q_a Q_aa + i W_a^2)", 3812, Z,
                  [](const Inputs& x) { return x.Pi(x.reW, mul(x.Qa, d(x.Qa)) + I * x.Wa2); }));
    t.push_back(k("Knull.6", "Knull", "2Pi(Re W, d_a P[|Q_a|^2])", 3812, Z,
                  [](const Inputs& x) { return x.Pi(x.reW, d(PabsQa2(x))); }));
    return t;
}

}  // namespace

const std::vector<Term>& source_table() {
    static const std::vector<Term> t = build_sources();
    return t;
}

const std::vector<Term>& classified_table() {
    static const std::vector<Term> t = build_classified();
    return t;
}

const Term& find_term(const std::string& id) {
    for (const auto* tab : {&classified_table(), &source_table()})
        for (const auto& t : *tab)
            if (t.id == id) return t;
    throw Error(ErrorCode::UnknownTerm, "unknown cubic term: " + id);
}

TermClass classify_cubic(const std::string& id) {
    for (const auto& t : classified_table())
        if (t.id == id) return t.cls;
    throw Error(ErrorCode::UnknownTerm, "term has no class: " + id);
}

std::pair<HoloField, HoloField> evaluate_table(const std::vector<Term>& table, const Inputs& in,
                                               const std::function<bool(const Term&)>& keep) {
    const GridSpec& g = in.W.grid();
    Field G(g), K(g);
    for (const auto& t : table) {
        if (keep && !keep(t)) continue;
        (t.in_G ? G : K) += t.eval(in);
    }
    return {project_neg(G), project_neg(K)};
}

std::pair<HoloField, HoloField> evaluate_sources(const HoloField& W, const HoloField& Q, const ParaConfig& cfg) {
    return evaluate_table(source_table(), Inputs::make(W, Q, cfg));
}

std::string dump_table(const std::vector<Term>& table) {
    std::ostringstream os;
    os << "id\tgroup\tclass\tref_line\texpr\n";
    for (const auto& t : table)
        os << t.id << '\t' << t.group << '\t' << to_string(t.cls) << '\t' << t.ref_line << '\t' << t.expr << '\n';
    return os.str();
}

}  // namespace ww::cubic
