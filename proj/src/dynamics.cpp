#include "ww/dynamics.hpp"

#include <cmath>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "ww/spectral.hpp"

namespace ww {

namespace {

// Conjugate projector applied to conj(f): conj(P[f]).
Field conj_proj(const Field& f) { return project_neg(f).conj(); }

}  // namespace

Aux compute_aux(const HoloField& W, const HoloField& Q) {
    W.check_same_grid(Q);
    const GridSpec& g = W.grid();
    Aux x;
    x.Wa = W.dx();
    const Field Qa = Q.dx();
    const Phys pWa = x.Wa.phys();
    const Phys one = 1.0 + pWa;
    const Phys J = one * one.conj();
    x.min_J = J.min_real();
    if (x.min_J < 0.25) throw Error(ErrorCode::DegenerateJacobian, "min J below 1/4");
    x.J = J.field();

    const Phys pQa = Qa.phys();
    x.R = project_neg((pQa / one).field());
    x.Y = project_neg((pWa / one).field());
    x.F = project_neg(((pQa - pQa.conj()) / J).field());

    const Phys pR = x.R.phys();
    const Phys pY = x.Y.phys();
    x.F_alt = HoloField::assume(x.R + project_neg((pR.conj() * pY - pR * pY.conj()).field()));

    // b = P[x] + conj P[x] + mean(conj x), x = R / (1 + conj W_a). The constant keeps
    // b - F = conj(R)/(1 + W_a) exact on the torus.
    const Field xr = (pR / one.conj()).field();
    x.b = project_neg(xr) + conj_proj(xr);
    x.b.coef(0) = std::conj(xr.mean());

    const Field Ra = x.R.dx();
    const Phys pRa = Ra.phys();
    const Field RbarRa = (pR.conj() * pRa).field();
    // a = i(conj P[R conj(R_a)] - P[R conj(R_a)]) minus Im mean(conj(R) R_a)
    const Field z = project_neg(RbarRa.conj());
    x.a = I * (z.conj() - z);
    x.a.coef(0) = -RbarRa.mean().imag();

    x.M = (pRa / one.conj() + pRa.conj() / one).field() - x.b.dx();
    const Field Ya = x.Y.dx();
    const Phys pYa = Ya.phys();
    const Field u1 = (pR.conj() * pYa - pRa * pY.conj()).field();
    const Field u2 = (pR * pYa.conj() - pRa.conj() * pY).field();
    const Field u3 = (pRa * pY.conj() + pRa.conj() * pY).field();
    x.M_alt = project_pos(u1) + project_neg(u2);
    x.M_alt.coef(0) = -u3.mean();
    (void)g;
    return x;
}

WaveState WaveState::make(double t, HoloField W, HoloField Q) {
    WaveState s;
    s.t = t;
    s.aux = compute_aux(W, Q);
    s.W = std::move(W);
    s.Q = std::move(Q);
    return s;
}

std::string to_string(Scheme s) { return s == Scheme::rk4 ? "rk4" : "rk4_integrating_factor"; }

Scheme scheme_from_string(const std::string& s) {
    if (s == "rk4") return Scheme::rk4;
    if (s == "rk4_integrating_factor" || s == "if_rk4") return Scheme::rk4_integrating_factor;
    throw Error(ErrorCode::ConfigError, "unknown scheme '" + s + "'");
}

FieldPair rhs_linear(const HoloField& W, const HoloField& Q) {
    return {HoloField::assume(-Q.dx()), HoloField::assume(I * W)};
}

FieldPair rhs_full(const HoloField& W, const HoloField& Q, bool nonlinear) {
    if (!nonlinear) return rhs_linear(W, Q);
    const Field Wa = W.dx();
    const Field Qa = Q.dx();
    const Phys pWa = Wa.phys();
    const Phys pQa = Qa.phys();
    const Phys one = 1.0 + pWa;
    const Phys J = one * one.conj();
    if (J.min_real() < 0.25) throw Error(ErrorCode::DegenerateJacobian, "min J below 1/4");
    const Phys pR = project_neg((pQa / one).field()).phys();
    const Phys pF = project_neg(((pQa - pQa.conj()) / J).field()).phys();
    const Phys pW = W.phys();
    HoloField Wt = project_neg((-1.0 * (pF * one)).field());
    HoloField Qt = project_neg((-1.0 * (pF * pQa) + I * pW - pR.conj() * pR).field());
    return {std::move(Wt), std::move(Qt)};
}

FieldPair rhs_full(const WaveState& s) { return rhs_full(s.W, s.Q, true); }

DiffRhs rhs_diff(const WaveState& s) {
    const Aux& x = s.aux;
    const Phys one = 1.0 + x.Wa.phys();
    const Phys pb = x.b.phys();
    const Phys pRa = x.R.dx().phys();
    const Phys pM = x.M.phys();
    const Field dWa =
        (-1.0 * (pb * x.Wa.dx().phys()) - one * pRa / one.conj() + one * pM).field();
    const Field dR =
        (-1.0 * (pb * pRa) + I * (x.Wa.phys() - x.a.phys()) / one).field();
    DiffRhs out;
    out.dWa = project_neg(dWa);
    out.dR = project_neg(dR);
    out.positive_residual =
        std::hypot((dWa - out.dWa).l2(), (dR - out.dR).l2());
    return out;
}

HoloField R_time_derivative(const WaveState& s, const FieldPair& d) {
    const Phys one = 1.0 + s.aux.Wa.phys();
    const Phys num = d.second.dx().phys() - s.aux.R.phys() * d.first.dx().phys();
    return project_neg((num / one).field());
}

namespace {

double direction_scale(const HoloField& w, const HoloField& q) {
    const double m = std::max({w.linf(), q.linf(), w.dx().linf(), q.dx().linf()});
    return m > 0.0 ? m : 1.0;
}

}  // namespace

LinearizeResult linearize(const WaveState& s, const LinState& dir, int order) {
    const GridSpec& g = s.grid();
    const HoloField q = HoloField::assume(dir.r + project_neg(mul(s.aux.R, dir.w)));
    // Step chosen so that the perturbation has pointwise size ~1e-5 regardless of |dir|.
    const double h = 1e-5 / direction_scale(dir.w, q);
    auto eval = [&](double c) {
        return rhs_full(HoloField::assume(s.W + c * dir.w), HoloField::assume(s.Q + c * q), true);
    };
    Field dw(g), dq(g);
    if (order == 2) {
        const auto p = eval(h), m = eval(-h);
        dw = (1.0 / (2 * h)) * (p.first - m.first);
        dq = (1.0 / (2 * h)) * (p.second - m.second);
    } else {
        const auto p1 = eval(h), m1 = eval(-h), p2 = eval(2 * h), m2 = eval(-2 * h);
        const double c = 1.0 / (12 * h);
        dw = c * (8.0 * (p1.first - m1.first) - (p2.first - m2.first));
        dq = c * (8.0 * (p1.second - m1.second) - (p2.second - m2.second));
    }
    const FieldPair st = rhs_full(s);
    const HoloField Rt = R_time_derivative(s, st);
    // r = q - R w  =>  r_t = q_t - R_t w - R w_t
    Field dr = dq - project_neg(mul(Rt, dir.w)) - project_neg(mul(s.aux.R, dw));
    return {project_neg(dw), project_neg(dr)};
}

cplx hamiltonian_complex(const HoloField& W, const HoloField& Q) {
    const Field Wa = W.dx();
    const Field Qa = Q.dx();
    // The Q part carries 1/(4i): with 1/(2i) only the one-branch waves keep it constant,
    // and mixed data drift at O(1) under the linear flow.
    const cplx quad = 0.5 * inner(W, W) + (inner(Q, Qa) - inner(Qa, Q)) / (4.0 * I);
    const Field W2 = mul(W, W);
    // int conj(W)^2 W_a = <W_a, W^2>, and its conjugate partner.
    const cplx cubic = -0.25 * (inner(Wa, W2) + inner(W2, Wa));
    return quad + cubic;
}

double hamiltonian(const HoloField& W, const HoloField& Q) { return hamiltonian_complex(W, Q).real(); }

double max_frequency(const GridSpec& g) { return std::sqrt(g.wavenumber(g.keep_index())); }

void check_stability(const GridSpec& g, const StepperConfig& cfg) {
    if (!(cfg.dt > 0.0) || cfg.dt * max_frequency(g) >= 2.8)
        throw Error(ErrorCode::StabilityViolation, "dt * max omega must stay below 2.8");
}

FieldPair linear_propagate(const HoloField& W, const HoloField& Q, double h) {
    const GridSpec& g = W.grid();
    HoloField W2(g), Q2(g);
    for (int i = 0; i < g.N; ++i) {
        const int j = W.index_of_slot(i);
        if (j >= 0) continue;
        const double k = g.wavenumber(j);
        const double om = std::sqrt(-k);
        const double c = std::cos(om * h), sn = std::sin(om * h) / om;
        const cplx w = W.raw()[i], q = Q.raw()[i];
        W2.raw()[i] = c * w + sn * (-I * k) * q;
        Q2.raw()[i] = sn * I * w + c * q;
    }
    return {std::move(W2), std::move(Q2)};
}

namespace {

HoloField axpy(const HoloField& x, double a, const HoloField& y) {
    return HoloField::assume(x + a * y);
}

FieldPair nonlinear_part(const HoloField& W, const HoloField& Q) {
    auto f = rhs_full(W, Q, true);
    auto l = rhs_linear(W, Q);
    return {HoloField::assume(f.first - l.first), HoloField::assume(f.second - l.second)};
}

HoloField finish(const Field& f, bool dealias) {
    return project_neg(dealias ? f.dealiased() : f);
}

}  // namespace

WaveState step(const WaveState& s, const StepperConfig& cfg) {
    check_stability(s.grid(), cfg);
    const double h = cfg.dt;
    const HoloField& W = s.W;
    const HoloField& Q = s.Q;
    HoloField Wn, Qn;
    if (cfg.scheme == Scheme::rk4 || !cfg.nonlinear) {
        if (cfg.scheme == Scheme::rk4_integrating_factor) {
            auto e = linear_propagate(W, Q, h);
            Wn = std::move(e.first);
            Qn = std::move(e.second);
        } else {
            auto f = [&](const HoloField& a, const HoloField& b) { return rhs_full(a, b, cfg.nonlinear); };
            const auto k1 = f(W, Q);
            const auto k2 = f(axpy(W, h / 2, k1.first), axpy(Q, h / 2, k1.second));
            const auto k3 = f(axpy(W, h / 2, k2.first), axpy(Q, h / 2, k2.second));
            const auto k4 = f(axpy(W, h, k3.first), axpy(Q, h, k3.second));
            Wn = finish(W + (h / 6) * (k1.first + 2.0 * k2.first + 2.0 * k3.first + k4.first), cfg.dealias);
            Qn = finish(Q + (h / 6) * (k1.second + 2.0 * k2.second + 2.0 * k3.second + k4.second), cfg.dealias);
        }
    } else {
        // Lawson RK4: the linear flow is integrated exactly.
        auto E = [](const HoloField& a, const HoloField& b, double tau) { return linear_propagate(a, b, tau); };
        const auto k1 = nonlinear_part(W, Q);
        const auto ua = E(axpy(W, h / 2, k1.first), axpy(Q, h / 2, k1.second), h / 2);
        const auto k2 = nonlinear_part(ua.first, ua.second);
        const auto uh = E(W, Q, h / 2);
        const auto k3 = nonlinear_part(axpy(uh.first, h / 2, k2.first), axpy(uh.second, h / 2, k2.second));
        const auto k3e = E(k3.first, k3.second, h / 2);
        const auto full = E(W, Q, h);
        const auto k4 = nonlinear_part(axpy(full.first, h, k3e.first), axpy(full.second, h, k3e.second));
        const auto k1e = E(k1.first, k1.second, h);
        const auto k23e = E(HoloField::assume(k2.first + k3.first), HoloField::assume(k2.second + k3.second), h / 2);
        Wn = finish(full.first + (h / 6) * (k1e.first + 2.0 * k23e.first + k4.first), cfg.dealias);
        Qn = finish(full.second + (h / 6) * (k1e.second + 2.0 * k23e.second + k4.second), cfg.dealias);
    }
    return WaveState::make(s.t + h, std::move(Wn), std::move(Qn));
}

void write_field(std::ostream& os, const Field& f) {
    const GridSpec& g = f.grid();
    os << "# field L=" << std::setprecision(17) << g.L << " N=" << g.N << " rho=" << g.rho << "\n";
    for (int j = -g.N / 2; j < g.N / 2; ++j) {
        const cplx c = f.coef(j);
        os << j << ", " << std::setprecision(17) << c.real() << ", " << c.imag() << "\n";
    }
}

Field read_field(std::istream& is) {
    std::string line;
    while (std::getline(is, line) && line.rfind("# field", 0) != 0) {
    }
    if (line.rfind("# field", 0) != 0) throw Error(ErrorCode::IoError, "missing field header");
    GridSpec g;
    if (std::sscanf(line.c_str(), "# field L=%lf N=%d rho=%lf", &g.L, &g.N, &g.rho) != 3)
        throw Error(ErrorCode::IoError, "malformed field header: " + line);
    g.validate();
    Field f(g);
    for (int n = 0; n < g.N; ++n) {
        if (!std::getline(is, line)) throw Error(ErrorCode::IoError, "truncated field block");
        int j = 0;
        double re = 0, im = 0;
        if (std::sscanf(line.c_str(), "%d, %lf, %lf", &j, &re, &im) != 3)
            throw Error(ErrorCode::IoError, "malformed field row: " + line);
        if (j < -g.N / 2 || j >= g.N / 2) throw Error(ErrorCode::IoError, "mode index out of range");
        f.coef(j) = cplx(re, im);
    }
    return f;
}

void write_checkpoint(const std::string& path, const Checkpoint& c) {
    std::ofstream os(path);
    if (!os) throw Error(ErrorCode::IoError, "cannot write " + path);
    const GridSpec& g = c.W.grid();
    os << "# checkpoint t=" << std::setprecision(17) << c.t << " L=" << g.L << " N=" << g.N
       << " eps=" << c.eps << " scheme=" << to_string(c.scheme) << "\n";
    os << "# block W\n";
    write_field(os, c.W);
    os << "# block Q\n";
    write_field(os, c.Q);
}

Checkpoint read_checkpoint(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw Error(ErrorCode::IoError, "cannot read " + path);
    std::string line;
    std::getline(is, line);
    Checkpoint c;
    double L = 0;
    int N = 0;
    char scheme[64] = {0};
    if (std::sscanf(line.c_str(), "# checkpoint t=%lf L=%lf N=%d eps=%lf scheme=%63s", &c.t, &L, &N, &c.eps,
                    scheme) != 5)
        throw Error(ErrorCode::IoError, "malformed checkpoint header");
    c.scheme = scheme_from_string(scheme);
    c.W = HoloField::checked(read_field(is), 1e-12);
    c.Q = HoloField::checked(read_field(is), 1e-12);
    return c;
}

}  // namespace ww
