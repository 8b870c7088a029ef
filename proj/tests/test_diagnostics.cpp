#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "ww/diagnostics.hpp"
#include "ww/initial_data.hpp"
#include "ww/spectral.hpp"

using namespace ww;

namespace {

GridSpec small_grid() {
    GridSpec g;
    g.L = 128.0 * std::numbers::pi;
    g.N = 512;
    return g;
}

WaveState packet(const GridSpec& g, double eps, double lo, double hi, double center = 0.0, double t = 0.0) {
    PacketData p;
    p.eps = eps;
    p.xi_lo = lo;
    p.xi_hi = hi;
    p.center = center;
    auto [W, Q] = packet_data(g, p);
    return WaveState::make(t, std::move(W), std::move(Q));
}

// Gaussian packet of local frequency -xi at alpha0, one-branch.
std::pair<HoloField, HoloField> gaussian(const GridSpec& g, double alpha0, double xi, double width, double amp) {
    const Field w = Field::from_function(g, [&](double al) {
        const double y = (al - alpha0) / width;
        return amp * std::exp(-0.5 * y * y) * std::exp(-I * xi * al);
    });
    const HoloField W = project_neg(w);
    return {W, project_neg(frac_derivative(W, -0.5))};
}

double pair_mass(const Field& w, const Field& q) {
    double m = 0.0;
    const GridSpec& g = w.grid();
    for (int j = -g.N / 2; j < g.N / 2; ++j)
        m += std::norm(w.coef(j)) + std::abs(g.wavenumber(j)) * std::norm(q.coef(j));
    return m;
}

}  // namespace

TEST_CASE("zero state has zero norms") {
    const GridSpec g = small_grid();
    const WaveState z = WaveState::make(2.0, HoloField(g), HoloField(g));
    const NormRecord r = control_norms(z);
    for (const auto& id : norm_ids()) {
        CAPTURE(id);
        CHECK(norm_value(r, id) == 0.0);
    }
    for (const auto& [s, v] : r.Hs) CHECK(v == 0.0);
    const ScalingDerivatives sd = scaling_fields(z);
    CHECK(weighted_energy(z, sd, 3.0).total() == 0.0);
    const XSharp xs = xsharp_norm(ell_hyp_split(z.W, z.Q, 2.0), 3.0);
    CHECK(xs.total == 0.0);
    CHECK(xs.ell_total == 0.0);
}

TEST_CASE("single-mode values") {
    const GridSpec g = small_grid();
    const int j = -40;
    const double k = g.wavenumber(j), A = 1e-3;
    HoloField W(g);
    W.coef(j) = A / (I * k);  // W_a = A e^{ik alpha}
    const WaveState s = WaveState::make(0.0, W, HoloField(g));
    CHECK(s.aux.Wa.linf() == doctest::Approx(A).epsilon(1e-12));
    CHECK(frac_derivative(s.aux.Wa, -0.5).linf() == doctest::Approx(A / std::sqrt(std::abs(k))).epsilon(1e-12));
    const double x = x_norm(s.aux.Wa, Field(g));
    CHECK(x - besov_norm(s.aux.Wa, 0.25) == doctest::Approx(A / std::sqrt(std::abs(k))).epsilon(1e-10));
    const NormRecord r = control_norms(s);
    CHECK(r.A0 >= A);
    CHECK(r.A0 <= 2.0 * A * (1.0 + 2.0 * A));  // W_a and Y = W_a / (1 + W_a)
    CHECK(r.X == doctest::Approx(x).epsilon(1e-12));
}

TEST_CASE("quarter-derivative sup against its Besov control") {
    const GridSpec g = small_grid();
    Rng rng(3);
    for (int i = 0; i < 3; ++i) {
        const WaveState s = WaveState::make(0.0, random_holo(g, rng, 0.05, 2.0, 1e-3), random_holo(g, rng, 0.05, 2.0, 1e-3));
        const NormRecord r = control_norms(s);
        const double sup = frac_derivative(s.aux.Wa, 0.25).linf();
        MESSAGE("|D|^1/4 W_a sup / A_quarter = " << sup / r.A_quarter);
        CHECK(sup <= 1.3 * r.A_quarter);
    }
}

TEST_CASE("norm ids") {
    NormRecord r;
    r.Hs = {{0.25, 7.0}};
    r.X = 3.0;
    CHECK(norm_value(r, "X") == 3.0);
    CHECK(norm_value(r, "H_0.25") == 7.0);
    CHECK_THROWS_AS(norm_value(r, "bogus"), Error);
}

TEST_CASE("weighted energy") {
    const GridSpec g = small_grid();
    SUBCASE("scaling term at t = 0 tracks the alpha-weighted norm") {
        // At t = 0 the scaling field is 2 alpha d_alpha minus a lower order part, so the
        // comparison is against the doubled reference.
        for (double c : {0.0, -100.0}) {
            const WaveState s = packet(g, 1e-4, 0.1, 1.0, c);
            const WeightedEnergy e = weighted_energy(s, scaling_fields(s), 3.0);
            const double ratio = e.scaling / (2.0 * weighted_energy_t0_reference(s));
            MESSAGE("centre " << c << ": scaling / (2 reference) = " << ratio);
            CHECK(ratio >= 0.5);
            CHECK(ratio <= 2.0);
        }
    }
    SUBCASE("nearly linear in the amplitude") {
        auto wh = [&](double eps) {
            const WaveState s = packet(g, eps, 0.1, 1.0, -50.0, 5.0);
            return weighted_energy(s, scaling_fields(s), 3.0).total();
        };
        for (double eps : {1e-3, 5e-4}) {
            const double r = wh(2.0 * eps) / wh(eps);
            CHECK(r >= 1.9);
            CHECK(r <= 2.1);
        }
    }
}

TEST_CASE("spatial cover and localizers") {
    const GridSpec g = small_grid();
    CHECK_THROWS_AS(DyadicCover::make(0.5, g), Error);
    CHECK_THROWS_AS(ell_hyp_split(HoloField(g), HoloField(g), 0.9), Error);

    const DyadicCover c = DyadicCover::make(16.0, g);
    CHECK(c.alpha_lo == doctest::Approx(8.0));
    CHECK(c.alpha_hi == doctest::Approx(256.0));
    double worst = 0.0;
    for (int n = 0; n < g.N; ++n) {
        const double al = g.alpha(n);
        double s = c.low(al) + c.high(al);
        for (int j = c.j_lo; j <= c.j_hi; ++j) s += c.block(j, al);
        worst = std::max(worst, std::abs(s - 1.0));
    }
    CHECK(worst <= 1e-12);

    // The localized pieces reproduce (w, q_a).
    const WaveState s = packet(g, 1e-3, 0.1, 1.0, -40.0);
    Field w(g), qa(g);
    auto add = [&](const Localizer& l) {
        const auto [w1, q1] = l.apply(s.W, s.Q);
        w += w1;
        qa += q1.dx();
    };
    add({Localizer::Kind::low, 0, 0.0, &c});
    add({Localizer::Kind::high, 0, 0.0, &c});
    for (int j = c.j_lo; j <= c.j_hi; ++j) add({Localizer::Kind::block, j, std::exp2(j), &c});
    CHECK((w - s.W).l2() <= 1e-10 * s.W.l2());
    CHECK((qa - s.Q.dx()).l2() <= 1e-10 * s.Q.dx().l2());
}

TEST_CASE("elliptic-hyperbolic split") {
    GridSpec g;  // default torus: room for the t = 256 cover
    SUBCASE("reconstruction") {
        const WaveState s = packet(g, 1e-3, 0.05, 1.5, 0.0);
        for (double t : {4.0, 64.0}) {
            const EllHypSplit sp = ell_hyp_split(s.W, s.Q, t);
            CHECK((sp.w_ell + sp.w_hyp - s.W).l2() <= 1e-10 * s.W.l2());
            CHECK(((sp.q_ell + sp.q_hyp).dx() - s.Q.dx()).l2() <= 1e-10 * s.Q.dx().l2());
        }
    }
    SUBCASE("a packet on its ray lands in the matching hyperbolic block") {
        const double t = 256.0, v = 1.0, alpha0 = v * t;
        const auto [W, Q] = gaussian(g, alpha0, 1.0 / (4.0 * v * v), 40.0, 1e-3);
        const EllHypSplit sp = ell_hyp_split(W, Q, t);
        const auto it = std::find_if(sp.blocks.begin(), sp.blocks.end(),
                                     [&](const HypBlock& b) { return b.alpha0 == alpha0; });
        REQUIRE(it != sp.blocks.end());
        CHECK(it->xi0 == doctest::Approx(0.25));
        const double frac = pair_mass(it->w_hyp, it->q_hyp) / pair_mass(W, Q);
        MESSAGE("mass in the matching block " << frac);
        CHECK(frac >= 0.8);
        CHECK(it->concentration >= 0.9);
    }
    SUBCASE("a much higher frequency is elliptic") {
        const double t = 16.0, alpha0 = 128.0;
        const double xi0 = t * t / (4.0 * alpha0 * alpha0);
        const auto [W, Q] = gaussian(g, alpha0, 100.0 * xi0, 20.0, 1e-3);
        const EllHypSplit sp = ell_hyp_split(W, Q, t);
        // The cover bumps are C^1 only, so their spectral tails are algebraic.
        CHECK(pair_mass(sp.w_hyp, sp.q_hyp) <= 1e-5 * pair_mass(W, Q));
        CHECK(pair_mass(sp.w_ell, sp.q_ell) == doctest::Approx(pair_mass(W, Q)).epsilon(1e-4));
    }
}

TEST_CASE("sharp norm") {
    CHECK(xsharp_exponent_b(3.0) == doctest::Approx(0.0625));
    CHECK(xsharp_exponent_b(4.0) - xsharp_exponent_b(3.0) == doctest::Approx(0.25).epsilon(1e-15));
    GridSpec g;
    Rng rng(9);
    const double t = 64.0;
    std::vector<double> consts;
    for (int i = 0; i < 3; ++i) {
        const HoloField W = random_holo(g, rng, 0.05, 1.0, 1e-3), Q = random_holo(g, rng, 0.05, 1.0, 1e-3);
        const EllHypSplit sp = ell_hyp_split(W, Q, t);
        const XSharp xs = xsharp_norm(sp, 3.0);
        CHECK(xs.total >= xs.sup_block);
        CHECK(xs.per_block.size() == sp.blocks.size());
        // Blocks with xi0 >= 1 only.
        Field w(g), q(g);
        for (const auto& b : sp.blocks)
            if (b.xi0 >= 1.0) {
                w += b.w_hyp;
                q += b.q_hyp;
            }
        consts.push_back(x_norm(w.dx(), q.dx()) / xs.total);
        // Masking more velocities can only remove blocks.
        CHECK(masked_hyp_x_norm(sp, 0.5) <= masked_hyp_x_norm(sp, 0.25) * (1.0 + 1e-12));
    }
    const auto [lo, hi] = std::minmax_element(consts.begin(), consts.end());
    MESSAGE("X / X_sharp on xi0 >= 1 blocks: " << consts[0] << " " << consts[1] << " " << consts[2]);
    CHECK(*hi <= 3.0 * *lo);
}

TEST_CASE("decay fits") {
    std::vector<double> t, c, p;
    for (int i = 0; i < 20; ++i) {
        t.push_back(10.0 * std::pow(10.0, i / 19.0));
        c.push_back(2.5);
        p.push_back(3.0 * std::pow(t.back(), -0.5));
    }
    CHECK(std::abs(decay_fit(t, c, 10.0, 100.0).slope) <= 1e-12);
    const FitResult f = decay_fit(t, p, 10.0, 100.0);
    CHECK(f.slope == doctest::Approx(-0.5).epsilon(1e-12));
    CHECK(f.intercept == doctest::Approx(std::log(3.0)).epsilon(1e-10));
    CHECK(f.samples == 20);
    CHECK(f.stderr_slope <= 1e-10);

    CHECK_THROWS_AS(decay_fit(t, p, 10.0, 12.0), Error);  // too few samples
    std::vector<double> narrow_t, narrow_y;
    for (int i = 0; i < 10; ++i) {
        narrow_t.push_back(10.0 + i);
        narrow_y.push_back(1.0);
    }
    CHECK_THROWS_AS(decay_fit(narrow_t, narrow_y, 0.0, 1e9), Error);  // less than a decade
}

TEST_CASE("linear packet decays at the dispersive rate") {
    GridSpec g;
    // Late window: the stationary-phase regime starts once t exceeds the band's crossover time.
    const WaveState s0 = packet(g, 1e-3, 0.5, 3.0, -400.0);
    std::vector<NormRecord> recs;
    for (int i = 0; i < 12; ++i) {
        const double t = 80.0 * std::pow(10.0, i / 11.0);
        const auto [W, Q] = linear_propagate(s0.W, s0.Q, t);
        NormOptions o;
        o.weighted = o.sharp = false;
        recs.push_back(control_norms(WaveState::make(t, W, Q), o));
    }
    const FitResult f = decay_fit(recs, "X", 80.0, 800.0);
    MESSAGE("linear X slope " << f.slope << " +- " << f.stderr_slope);
    CHECK(f.slope >= -0.6);
    CHECK(f.slope <= -0.4);
}

TEST_CASE("scaling law acts on the norms as predicted") {
    const GridSpec g = small_grid();
    const double lam = 2.0, l2 = lam * lam;
    const WaveState s = packet(g, 1e-3, 0.05, 0.5, 0.0);
    // (W, Q) -> (lam^-2 W(lam^2 alpha), lam^-3 Q(lam^2 alpha)), one period of the compressed copy only
    auto squeeze = [&](const Field& f, double pw) {
        return project_neg(Field::from_function(g, [&](double al) {
            return std::abs(l2 * al) < 0.5 * g.L ? f.value_at(l2 * al) / std::pow(lam, pw) : cplx{};
        }));
    };
    const HoloField W = squeeze(s.W, 2.0), Q = squeeze(s.Q, 3.0);
    const WaveState r = WaveState::make(0.0, W, Q);
    NormOptions o;
    o.weighted = o.sharp = false;
    const NormRecord a = control_norms(s, o), b = control_norms(r, o);
    CHECK(b.A0 / a.A0 == doctest::Approx(1.0).epsilon(0.02));
    for (std::size_t i = 0; i < a.Hs.size(); ++i) {
        const double sv = a.Hs[i].first;
        CAPTURE(sv);
        CHECK(b.Hs[i].second / a.Hs[i].second == doctest::Approx(std::pow(lam, 2.0 * sv - 1.0)).epsilon(0.02));
    }
}

TEST_CASE("norm CSV round trip") {
    std::vector<NormRecord> recs(3);
    for (int i = 0; i < 3; ++i) {
        NormRecord& r = recs[i];
        r.t = 0.1 * i + 1.0 / 3.0;
        r.A0 = 1e-3 * (i + 1) / 7.0;
        r.X = std::sqrt(2.0) * i;
        r.energy = 1.0 / (i + 3.0);
        r.X_sharp_ell = 5e-20;
        r.Hs = {{0.0, 1.0 / 9.0}, {0.25, 2.0 / 9.0}};
    }
    std::stringstream ss;
    write_norms_csv(ss, recs);
    const std::string header = ss.str().substr(0, ss.str().find('\n'));
    CHECK(header.rfind("t,", 0) == 0);
    const auto back = read_norms_csv(ss);
    REQUIRE(back.size() == recs.size());
    for (std::size_t i = 0; i < recs.size(); ++i) {
        CHECK(back[i].t == recs[i].t);
        CHECK(back[i].A0 == recs[i].A0);
        CHECK(back[i].X == recs[i].X);
        CHECK(back[i].energy == recs[i].energy);
        CHECK(back[i].X_sharp_ell == recs[i].X_sharp_ell);
        REQUIRE(back[i].Hs.size() == 2);
        CHECK(back[i].Hs[1].second == recs[i].Hs[1].second);
    }
}
