#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "ww/initial_data.hpp"
#include "ww/spectral.hpp"

using namespace ww;

namespace {

GridSpec small_grid() {
    GridSpec g;
    g.L = 64.0 * std::numbers::pi;
    g.N = 256;
    return g;
}

// O(N^2) transform of physical samples, the reference for the FFT path.
std::vector<cplx> brute_dft(const GridSpec& g, const std::vector<cplx>& x) {
    std::vector<cplx> c(g.N);
    for (int i = 0; i < g.N; ++i) {
        const int j = i < g.N / 2 ? i : i - g.N;
        cplx s = 0.0;
        for (int n = 0; n < g.N; ++n) s += x[n] * std::exp(-I * g.wavenumber(j) * g.alpha(n));
        c[i] = s / static_cast<double>(g.N);
    }
    return c;
}

double max_diff(const Field& a, const Field& b) {
    double m = 0.0;
    for (int i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a.raw()[i] - b.raw()[i]));
    return m;
}

}  // namespace

TEST_CASE("round trip and Parseval") {
    const GridSpec g = small_grid();
    Rng rng(1);
    const Field u = random_field(g, rng, 0.1, 4.0, 1.0);
    const auto x = u.physical();
    const Field back = Field::from_physical(g, x);
    CHECK(max_diff(u, back) <= 1e-12 * u.max_abs_coef());

    double s = 0.0;
    for (const cplx& v : x) s += std::norm(v);
    CHECK(std::abs(std::sqrt(s * g.dx()) - u.l2()) <= 1e-12 * u.l2());
}

TEST_CASE("FFT coefficients match a direct DFT") {
    const GridSpec g = small_grid();
    Rng rng(2);
    const Field u = random_field(g, rng, 0.1, 3.0, 1.0);
    const auto ref = brute_dft(g, u.physical());
    double m = 0.0;
    for (int i = 0; i < g.N; ++i) m = std::max(m, std::abs(ref[i] - u.raw()[i]));
    CHECK(m <= 1e-12);
}

TEST_CASE("project_neg keeps negative modes only") {
    const GridSpec g = small_grid();
    Field u(g);
    u.coef(-1) = 1.0;
    u.coef(0) = 2.0;
    u.coef(1) = 3.0 * I;
    const HoloField p = project_neg(u);
    CHECK(p.coef(-1) == cplx(1.0));
    CHECK(p.coef(0) == cplx(0.0));
    CHECK(p.coef(1) == cplx(0.0));
    CHECK(p.max_abs_coef() == doctest::Approx(1.0));
}

TEST_CASE("project_neg is idempotent and orthogonal") {
    const GridSpec g = small_grid();
    Rng rng(3);
    const Field u = random_field(g, rng, 0.05, 4.0, 1.0);
    const Field v = random_field(g, rng, 0.05, 4.0, 1.0);
    const Field pu = project_neg(u);
    CHECK(max_diff(project_neg(pu), pu) == 0.0);
    const Field rest = v - project_neg(v);
    CHECK(std::abs(inner(pu, rest)) <= 1e-12 * pu.l2() * rest.l2());
}

TEST_CASE("real zero-mean field splits into P u and its conjugate partner") {
    const GridSpec g = small_grid();
    Rng rng(4);
    const Field u = random_field(g, rng, 0.05, 3.0, 1.0).re();
    // Split by a direct DFT: negative modes and their mirrors.
    const auto c = brute_dft(g, u.physical());
    Field neg(g), pos(g);
    for (int i = 0; i < g.N; ++i) {
        const int j = u.index_of_slot(i);
        if (j < 0) neg.raw()[i] = c[i];
        if (j > 0) pos.raw()[i] = c[i];
    }
    const Field recombined = project_neg(u) + project_neg(u.conj()).conj();
    CHECK(max_diff(recombined, u.without_mean()) <= 1e-12);
    CHECK(max_diff(project_neg(u), neg) <= 1e-12);
    CHECK(max_diff(project_neg(u.conj()).conj(), pos) <= 1e-12);
}

TEST_CASE("fractional derivatives") {
    const GridSpec g = small_grid();
    SUBCASE("single mode") {
        Field u(g);
        u.coef(-7) = 1.0;
        const Field d = frac_derivative(u, 0.5);
        CHECK(std::abs(d.coef(-7) - std::sqrt(g.dk() * 7)) <= 1e-14);
    }
    SUBCASE("order zero is the identity on zero-mean data") {
        Rng rng(5);
        const Field u = random_field(g, rng, 0.1, 3.0, 1.0);
        CHECK(max_diff(frac_derivative(u, 0.0), u) == 0.0);
    }
    SUBCASE("composition") {
        Rng rng(6);
        const Field u = random_field(g, rng, 0.1, 3.0, 1.0);
        const Field twice = frac_derivative(frac_derivative(u, 0.5), 0.5);
        CHECK(max_diff(twice, frac_derivative(u, 1.0)) <= 1e-12 * u.max_abs_coef());
    }
    SUBCASE("negative order needs a vanishing mean") {
        Field u(g);
        u.coef(0) = 1.0;
        CHECK_THROWS_AS(frac_derivative(u, -0.5), Error);
    }
}

TEST_CASE("Littlewood-Paley partition") {
    const GridSpec g = small_grid();
    const auto [lo, hi] = lp::band(g);
    for (int j = 1; j < g.N / 2; ++j) {
        const double xi = g.wavenumber(j);
        double s = 0.0;
        for (int k = lo; k <= hi; ++k) s += lp::symbol(k, xi);
        CHECK(std::abs(s - 1.0) <= 1e-12);
    }
    Rng rng(7);
    const Field u = random_field(g, rng, 0.05, 5.0, 1.0);
    Field sum(g);
    double mass = 0.0;
    for (int k = lo; k <= hi; ++k) {
        const Field b = lp_project(u, k);
        sum += b;
        mass += b.l2() * b.l2();
    }
    CHECK(max_diff(sum, u.without_mean()) <= 1e-12);
    const double total = u.l2() * u.l2();
    CHECK(mass >= 0.5 * total);
    CHECK(mass <= total * (1 + 1e-12));
    CHECK(lp_project(Field(g), 0).max_abs_coef() == 0.0);
}

TEST_CASE("a pure mode at a block centre passes with most of its weight") {
    const GridSpec g = small_grid();
    const int j = 64;  // |xi| = 2
    Field u(g);
    u.coef(-j) = 1.0;
    const double w = std::abs(lp_project(u, 1).coef(-j));
    CHECK(w >= 0.9);
    CHECK(w <= 1.0);
    CHECK(std::abs(lp_project(u, 0).coef(-j)) + std::abs(lp_project(u, 2).coef(-j)) + w ==
          doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("Besov norm") {
    const GridSpec g = small_grid();
    CHECK(besov_norm(Field(g), 0.25) == 0.0);
    // Two modes five octaves apart: the blocks do not interact.
    Field a(g), b(g);
    a.coef(-16) = 0.3;   // xi = 0.5
    b.coef(-512 / 4) = 0.2;  // xi = 4
    const double na = besov_norm(a, 0.25), nb = besov_norm(b, 0.25);
    CHECK(besov_norm(a + b, 0.25) == doctest::Approx(std::hypot(na, nb)).epsilon(0.05));
    // Single mode at 2^m: roughly 2^{m/4} times its amplitude.
    CHECK(nb == doctest::Approx(std::pow(4.0, 0.25) * 0.2).epsilon(0.05));
}

TEST_CASE("Sobolev pair norm") {
    const GridSpec g = small_grid();
    CHECK(sobolev_norm(Field(g), Field(g), 0.5) == 0.0);
    Field w(g);
    w.coef(-5) = 1.0;
    CHECK(sobolev_norm(w, Field(g), 0.0) == doctest::Approx(std::sqrt(g.L)).epsilon(1e-12));
    Rng rng(8);
    const Field u = random_field(g, rng, 0.1, 3.0, 1.0), r = random_field(g, rng, 0.1, 3.0, 1.0);
    CHECK(sobolev_norm(u, r, 0.5, false) >= sobolev_norm(u, r, 0.5, true));
}
