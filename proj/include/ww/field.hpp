#pragma once
// Periodic grid, spectral field storage and pointwise products.

#include <complex>
#include <functional>
#include <span>
#include <vector>

#include "ww/errors.hpp"

namespace ww {

using cplx = std::complex<double>;
inline constexpr cplx I{0.0, 1.0};

struct GridSpec {
    double L = 400.0 * 3.14159265358979323846;
    int N = 2048;
    double rho = 2.0 / 3.0;

    void validate() const;
    double dk() const;
    // Wavenumber of mode index j in [-N/2, N/2).
    double wavenumber(int j) const { return dk() * j; }
    // Grid point n in [0, N): alpha_n = -L/2 + n L/N.
    double alpha(int n) const { return -0.5 * L + L * n / N; }
    double dx() const { return L / N; }
    // Largest retained |j| after dealiasing.
    int keep_index() const;
    double k_nyquist() const { return dk() * (N / 2); }
    bool operator==(const GridSpec& o) const { return L == o.L && N == o.N && rho == o.rho; }
};

class Phys;

// Spectral representation u(alpha) = sum_j c_j exp(i k_j alpha).
class Field {
public:
    Field() = default;
    explicit Field(const GridSpec& g);

    static Field from_physical(const GridSpec& g, std::span<const cplx> values);
    static Field from_function(const GridSpec& g, const std::function<cplx(double)>& f);
    static Field from_spectrum(const GridSpec& g, const std::function<cplx(double)>& symbol);

    const GridSpec& grid() const { return grid_; }
    int size() const { return grid_.N; }

    cplx coef(int j) const { return c_[slot(j)]; }
    cplx& coef(int j) { return c_[slot(j)]; }
    // Storage order follows the transform layout: slot i holds j = i for i < N/2, i - N otherwise.
    const std::vector<cplx>& raw() const { return c_; }
    std::vector<cplx>& raw() { return c_; }
    int index_of_slot(int i) const { return i < grid_.N / 2 ? i : i - grid_.N; }

    std::vector<cplx> physical() const;
    Phys phys() const;
    cplx value_at(double alpha) const;  // trigonometric interpolation

    Field conj() const;
    Field re() const;  // Re u as a field: (u + conj u)/2
    Field im() const;
    Field dx() const;  // d/dalpha
    Field antiderivative() const;  // zero mode dropped
    Field multiplier(const std::function<double(double)>& m) const;
    Field cmultiplier(const std::function<cplx(double)>& m) const;
    Field dealiased() const;
    Field without_mean() const;

    cplx mean() const { return coef(0); }
    double l2() const;  // sqrt(int |u|^2)
    double linf() const;
    double max_abs_coef() const;

    Field& operator+=(const Field& o);
    Field& operator-=(const Field& o);
    Field& operator*=(cplx s);
    friend Field operator+(Field a, const Field& b) { return a += b; }
    friend Field operator-(Field a, const Field& b) { return a -= b; }
    friend Field operator*(cplx s, Field a) { return a *= s; }
    friend Field operator*(Field a, cplx s) { return a *= s; }
    friend Field operator*(double s, Field a) { return a *= cplx(s); }
    Field operator-() const { Field r(*this); r *= -1.0; return r; }

    void check_same_grid(const Field& o) const;

protected:
    int slot(int j) const { return j >= 0 ? j : j + grid_.N; }
    GridSpec grid_{};
    std::vector<cplx> c_;
};

// Field whose spectrum lives on strictly negative wavenumbers.
class HoloField : public Field {
public:
    HoloField() = default;
    explicit HoloField(const GridSpec& g) : Field(g) {}
    // Throws OutOfBand when a mode with k >= 0 carries weight above tol * max|coef|.
    static HoloField checked(const Field& f, double tol = 1e-13);
    // Trusted wrap: caller guarantees the invariant (used after exact projections).
    static HoloField assume(Field f) { HoloField h; static_cast<Field&>(h) = std::move(f); return h; }

    friend HoloField operator+(HoloField a, const HoloField& b) { a += b; return a; }
    friend HoloField operator-(HoloField a, const HoloField& b) { a -= b; return a; }
    friend HoloField operator*(cplx s, HoloField a) { a *= s; return a; }
    friend HoloField operator*(double s, HoloField a) { a *= cplx(s); return a; }
};

// Physical-space samples for pointwise algebra; converting back dealiases.
class Phys {
public:
    Phys(const GridSpec& g, std::vector<cplx> v) : grid_(g), v_(std::move(v)) {}
    static Phys constant(const GridSpec& g, cplx c) { return Phys(g, std::vector<cplx>(g.N, c)); }

    const GridSpec& grid() const { return grid_; }
    const std::vector<cplx>& values() const { return v_; }
    cplx operator[](int n) const { return v_[n]; }
    cplx& operator[](int n) { return v_[n]; }

    Field field() const;  // forward transform + dealias
    Field field_raw() const;  // forward transform, no dealias

    Phys conj() const;
    Phys& operator+=(const Phys& o);
    Phys& operator-=(const Phys& o);
    Phys& operator*=(const Phys& o);
    Phys& operator/=(const Phys& o);
    Phys& operator+=(cplx s);
    Phys& operator*=(cplx s);
    friend Phys operator+(Phys a, const Phys& b) { return a += b; }
    friend Phys operator-(Phys a, const Phys& b) { return a -= b; }
    friend Phys operator*(Phys a, const Phys& b) { return a *= b; }
    friend Phys operator/(Phys a, const Phys& b) { return a /= b; }
    friend Phys operator+(Phys a, cplx s) { return a += s; }
    friend Phys operator+(cplx s, Phys a) { return a += s; }
    friend Phys operator*(Phys a, cplx s) { return a *= s; }
    friend Phys operator*(cplx s, Phys a) { return a *= s; }
    friend Phys operator*(double s, Phys a) { return a *= cplx(s); }
    Phys operator-() const { Phys r(*this); r *= -1.0; return r; }
    double max_abs() const;
    double min_real() const;

private:
    GridSpec grid_;
    std::vector<cplx> v_;
};

// Dealiased products.
Field mul(const Field& a, const Field& b);
Field mul(const Field& a, const Field& b, const Field& c);
Field mul_raw(const Field& a, const Field& b);  // no dealiasing

// <u, v> = int u conj(v) dalpha, via Parseval.
cplx inner(const Field& u, const Field& v);
// int u dalpha
cplx integral(const Field& u);

}  // namespace ww
