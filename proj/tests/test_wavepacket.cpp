#include <doctest.h>

#include <cmath>
#include <numbers>
#include <sstream>

#include "ww/initial_data.hpp"
#include "ww/spectral.hpp"
#include "ww/wavepacket.hpp"

using namespace ww;

namespace {

const GridSpec kGrid{};

PacketOptions free_v() {
    PacketOptions o;
    o.require_velocity_band = false;
    return o;
}

double slope(const std::vector<double>& x, const std::vector<double>& y) {
    double mx = 0, my = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        mx += std::log(x[i]);
        my += std::log(y[i]);
    }
    mx /= x.size();
    my /= y.size();
    double sxy = 0, sxx = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sxy += (std::log(x[i]) - mx) * (std::log(y[i]) - my);
        sxx += (std::log(x[i]) - mx) * (std::log(x[i]) - mx);
    }
    return sxy / sxx;
}

WaveState packet_state(double eps) {
    PacketData p;
    p.eps = eps;
    auto [W, Q] = packet_data(kGrid, p);
    return WaveState::make(0.0, std::move(W), std::move(Q));
}

}  // namespace

TEST_CASE("bump") {
    const int n = 200000;
    double s = 0.0;
    for (int i = 0; i < n; ++i) s += packet_bump::value(-1.0 + (i + 0.5) * 2.0 / n);
    CHECK(s * 2.0 / n == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(packet_bump::value(1.0) == 0.0);
    CHECK(packet_bump::value(-1.5) == 0.0);
    const double h = 1e-5;
    for (double y : {-0.7, -0.2, 0.1, 0.6}) {
        CHECK(packet_bump::d1(y) ==
              doctest::Approx((packet_bump::value(y + h) - packet_bump::value(y - h)) / (2 * h)).epsilon(1e-7));
        CHECK(packet_bump::d2(y) ==
              doctest::Approx((packet_bump::d1(y + h) - packet_bump::d1(y - h)) / (2 * h)).epsilon(1e-7));
    }
}

TEST_CASE("velocity band and grid") {
    const auto [lo, hi] = velocity_band(256.0);
    CHECK(lo == doctest::Approx(std::pow(256.0, -0.01)));
    CHECK(hi == doctest::Approx(std::pow(256.0, 0.01)));
    const auto v = velocity_grid(256.0);
    REQUIRE(v.size() == 33);
    CHECK(v.front() == doctest::Approx(lo));
    CHECK(v.back() == doctest::Approx(hi));
    CHECK(v[16] == doctest::Approx(1.0));
}

TEST_CASE("domain errors") {
    CHECK_THROWS_AS(build_packet(2.0, 1.0, kGrid), Error);
    CHECK_THROWS_AS(build_packet(64.0, 1.2, kGrid), Error);  // outside the central band
    CHECK_THROWS_AS(build_packet(64.0, -1.0, kGrid, free_v()), Error);
    CHECK_NOTHROW(build_packet(64.0, 1.2, kGrid, free_v()));
    try {
        build_packet(600.0, 1.0, kGrid);
        FAIL("expected WrapAround");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::WrapAround);
    }
}

TEST_CASE("frame") {
    const double t = 256.0, v = 1.0;
    const PacketFrame f = build_packet(t, v, kGrid);
    CHECK(f.phase_at_ray() == doctest::Approx(t / (4 * v)));
    CHECK(f.width == doctest::Approx(16.0));
    // off-node value through trigonometric interpolation; the bump's spectral tail sets the error
    const cplx at = f.u.value_at(v * t);
    CHECK(std::abs(std::arg(at * std::exp(-I * (t / 4.0)))) <= 1e-4);
    CHECK(std::abs(at) == doctest::Approx(packet_bump::value(0.0)).epsilon(1e-4));

    SUBCASE("spectral centre") {
        double m = 0.0, mk = 0.0, near = 0.0;
        const double band = 10.0 / std::sqrt(t);
        for (int j = -kGrid.N / 2; j < kGrid.N / 2; ++j) {
            const double k = kGrid.wavenumber(j), p = std::norm(f.u.coef(j));
            m += p;
            mk += p * k;
            if (std::abs(k - f.xi_v()) <= band) near += p;
        }
        CHECK(std::abs(mk / m - f.xi_v()) <= 2.0 * kGrid.dk());
        CHECK(near >= 0.95 * m);
    }
    SUBCASE("w against its expansion and against a numerical time derivative") {
        CHECK((f.w - f.w_closed).l2() <= 1e-10 * f.w.l2());
        auto d = [&](double h) {
            return (1.0 / (2.0 * h)) * (build_packet(t + h, v, kGrid).u - build_packet(t - h, v, kGrid).u);
        };
        const double h = 1e-2;
        const Field rich = (1.0 / 3.0) * (4.0 * d(0.5 * h) - d(h));
        CHECK(((-I * v) * rich - f.w).l2() <= 1e-8 * f.w.l2());
        CHECK((f.q - v * f.u).l2() == 0.0);
    }
    CHECK(packet_spectrum_mismatch(build_packet(64.0, 1.0, kGrid)) <= 0.05);
}

TEST_CASE("defect") {
    std::vector<double> ts{16.0, 64.0, 256.0}, size, ratio;
    for (double t : ts) {
        const PacketDefect d = packet_defect(build_packet(t, 1.0, kGrid));
        CHECK(d.agreement <= 1e-8);
        size.push_back(d.rel_size);
        ratio.push_back(d.leading.l2() / d.subleading.l2());
    }
    const double s1 = slope(ts, size), s2 = slope(ts, ratio);
    MESSAGE("defect slope " << s1 << ", leading/subleading slope " << s2);
    CHECK(s1 >= -1.2);
    CHECK(s1 <= -0.8);
    CHECK(s2 >= 0.3);
    CHECK(s2 <= 0.7);
}

TEST_CASE("gamma pairing") {
    const PacketFrame f = build_packet(64.0, 1.0, kGrid);
    CHECK(gamma(HoloField(kGrid), HoloField(kGrid), f) == cplx(0.0));

    SUBCASE("self-pairing against physical quadrature") {
        const HoloField W = project_neg(f.w), Q = project_neg(f.q);
        const auto w = W.physical(), fw = f.w.physical();
        const auto r = frac_derivative(Q, 0.5).physical(), fq = frac_derivative(f.q, 0.5).physical();
        cplx s = 0.0;
        for (int n = 0; n < kGrid.N; ++n) s += w[n] * std::conj(fw[n]) + r[n] * std::conj(fq[n]);
        s *= kGrid.dx();
        const cplx g = gamma(W, Q, f);
        CHECK(std::abs(g - s) <= 1e-10 * std::abs(s));
        MESSAGE("gamma " << g << ", reduced form " << gamma_reduced(W, Q, f));
    }
    SUBCASE("linear evolution keeps |gamma| nearly constant") {
        const WaveState s0 = packet_state(1e-3);
        double lo = 1e300, hi = 0.0;
        for (double t = 20.0; t <= 80.0; t += 10.0) {
            const auto [W, Q] = linear_propagate(s0.W, s0.Q, t);
            const double m = std::abs(gamma(W, Q, build_packet(t, 1.0, kGrid)));
            lo = std::min(lo, m);
            hi = std::max(hi, m);
        }
        CHECK(hi / lo - 1.0 <= 0.1);
    }
}

TEST_CASE("asymptotic residual") {
    CHECK(ode_coefficient(2.0, 0.5) == doctest::Approx(0.25));
    GammaProfile p;
    p.v = {0.9, 1.0};
    const cplx c(0.4, 0.1);
    for (double t : {10.0, 20.0}) {
        p.times.push_back(t);
        p.gamma.emplace_back(2, c);
        p.dgamma.emplace_back(2, cplx(0.0));
    }
    CHECK_THROWS_AS(asymptotic_residual(p), Error);
    p.times.push_back(30.0);
    p.gamma.emplace_back(2, c);
    p.dgamma.emplace_back(2, cplx(0.0));
    const AsymptoticResidual r = asymptotic_residual(p);
    for (std::size_t k = 0; k < 3; ++k)
        for (std::size_t i = 0; i < 2; ++i) {
            const cplx expect = -I * c * std::norm(c) / (2.0 * p.times[k] * std::pow(2.0 * p.v[i], 5));
            CHECK(std::abs(r.e_analytic[k][i] - expect) <= 1e-15 * std::abs(expect));
        }
    CHECK(std::isnan(r.e_centered[0][0].real()));
    CHECK(std::abs(r.e_centered[1][1] + I * ode_coefficient(20.0, 1.0) * c * std::norm(c)) <= 1e-15);

    GammaProfile z = p;
    for (auto& row : z.gamma) row.assign(2, cplx(0.0));
    for (const auto& row : asymptotic_residual(z).e_analytic)
        for (const cplx& e : row) CHECK(e == cplx(0.0));

    std::ostringstream os;
    write_profile_csv(os, p, &r);
    CHECK(os.str().rfind("t,v,re_gamma,im_gamma,abs_e,cubic\n", 0) == 0);
}

TEST_CASE("theta functional") {
    const double t = 256.0;
    const auto v = velocity_grid(t);
    CHECK(theta_functional(Field(kGrid), t, v, kGrid)[0] == cplx(0.0));
    const PacketFrame f = build_packet(t, 1.0, kGrid);
    const auto th = theta_functional(f.u.conj(), t, {1.0}, kGrid);
    CHECK(std::abs(th[0] - f.u.l2() * f.u.l2()) <= 1e-12 * f.u.l2() * f.u.l2());

    Rng rng(31);
    std::vector<double> ratios;
    for (int i = 0; i < 5; ++i) {
        const Field raw = random_field(kGrid, rng, 0.05, 1.0, 1.0);
        auto p = raw.phys();
        for (int n = 0; n < kGrid.N; ++n) {
            const double y = (kGrid.alpha(n) - t) / 24.0;
            p[n] *= bump(y);
        }
        const Field fl = p.field();
        const auto th2 = theta_functional(fl, t, v, kGrid);
        std::vector<double> mag;
        for (const cplx& c : th2) mag.push_back(std::abs(c));
        ratios.push_back(l2_velocity(v, mag) / fl.l2());
    }
    const auto [lo, hi] = std::minmax_element(ratios.begin(), ratios.end());
    MESSAGE("theta ratio range " << *lo << " .. " << *hi);
    CHECK(*hi <= 2.0 * *lo);
}

TEST_CASE("reconstruction error") {
    SUBCASE("weights differ by |xi_v|^(1/2) on a single mode") {
        const int j = -50;  // xi = -1/4, the frequency of v = 1
        auto [W, Q] = single_mode(kGrid, j, 1e-3);
        const double t = 64.0;
        const auto e0 = packet_reconstruction_error(W, Q, t, 0.0, {1.0});
        const auto e1 = packet_reconstruction_error(W, Q, t, 0.5, {1.0});
        CHECK(std::abs(e1.err_w[0] - 0.5 * e0.err_w[0]) <= 1e-10 * std::abs(e0.err_w[0]));
        CHECK(std::abs(e1.err_q[0] - 0.5 * e0.err_q[0]) <= 1e-10 * std::abs(e0.err_q[0]));
    }
    SUBCASE("small on evolved packet data") {
        const WaveState s0 = packet_state(1e-3);
        const double t = 64.0;
        const auto [W, Q] = linear_propagate(s0.W, s0.Q, t);
        const auto e = packet_reconstruction_error(W, Q, t, 0.0, velocity_grid(t));
        double worst = 0.0;
        for (std::size_t i = 0; i < e.v.size(); ++i)
            worst = std::max(worst, std::hypot(std::abs(e.err_w[i]), std::abs(e.err_q[i])));
        MESSAGE("reconstruction error " << worst << " against peak " << e.peak);
        CHECK(worst <= 0.2 * e.peak);
    }
}
