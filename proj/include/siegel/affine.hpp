#pragma once

#include <cmath>
#include <complex>
#include <utility>
#include <vector>

#include "siegel/errors.hpp"
#include "siegel/points.hpp"

namespace siegel {

using CMatrix = std::vector<std::vector<Complex>>;

inline CMatrix identity_matrix(int n) {
    CMatrix u(static_cast<std::size_t>(n), std::vector<Complex>(static_cast<std::size_t>(n), 0.0));
    for (int j = 0; j < n; ++j) u[j][j] = 1.0;
    return u;
}

inline std::vector<Complex> mat_vec(const CMatrix& m, const std::vector<Complex>& v) {
    std::vector<Complex> out(m.size(), 0.0);
    for (std::size_t r = 0; r < m.size(); ++r) {
        if (m[r].size() != v.size()) throw DimensionMismatch("mat_vec: shape mismatch");
        Complex s = 0.0;
        for (std::size_t c = 0; c < v.size(); ++c) s += m[r][c] * v[c];
        out[r] = s;
    }
    return out;
}

inline CMatrix mat_mul(const CMatrix& a, const CMatrix& b) {
    std::size_t n = a.size();
    CMatrix out(n, std::vector<Complex>(n, 0.0));
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t k = 0; k < n; ++k)
            for (std::size_t c = 0; c < n; ++c) out[r][c] += a[r][k] * b[k][c];
    return out;
}

inline CMatrix adjoint(const CMatrix& a) {
    std::size_t n = a.size();
    CMatrix out(n, std::vector<Complex>(n, 0.0));
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) out[r][c] = std::conj(a[c][r]);
    return out;
}

inline double unitary_defect(const CMatrix& u) {
    CMatrix p = mat_mul(adjoint(u), u);
    double worst = 0.0;
    for (std::size_t r = 0; r < p.size(); ++r)
        for (std::size_t c = 0; c < p.size(); ++c)
            worst = std::max(worst, std::abs(p[r][c] - (r == c ? 1.0 : 0.0)));
    return worst;
}

// Element of Aff(U_{n+1}) = H_n x| GL(U_{n+1}) in normal form: the map acts as
//   p |-> heis . (R U zeta, R^2 z)
// with heis = (zeta0, x0) acting by the Heisenberg affine action
//   (zeta0,x0).(zeta,z) = (zeta0+zeta, z + x0 + i|zeta0|^2 + 2i<zeta|zeta0>).
class AffineAutomorphism {
  public:
    AffineAutomorphism(std::vector<Complex> zeta0, double x0, double dilation, CMatrix rot)
        : zeta0_(std::move(zeta0)), x0_(x0), r_(dilation), u_(std::move(rot)) {
        if (r_ <= 0.0) throw ParameterError("AffineAutomorphism: dilation must be positive");
        if (u_.size() != zeta0_.size()) throw DimensionMismatch("AffineAutomorphism: U size vs n");
        for (const auto& row : u_)
            if (row.size() != u_.size()) throw DimensionMismatch("AffineAutomorphism: U not square");
        if (!u_.empty() && unitary_defect(u_) > 1e-12)
            throw ParameterError("AffineAutomorphism: U not unitary to 1e-12");
    }

    static AffineAutomorphism identity(int n) {
        return AffineAutomorphism(std::vector<Complex>(static_cast<std::size_t>(n), 0.0), 0.0, 1.0,
                                  identity_matrix(n));
    }
    static AffineAutomorphism heisenberg(std::vector<Complex> zeta0, double x0) {
        int n = static_cast<int>(zeta0.size());
        return AffineAutomorphism(std::move(zeta0), x0, 1.0, identity_matrix(n));
    }
    static AffineAutomorphism dilation(int n, double r) {
        return AffineAutomorphism(std::vector<Complex>(static_cast<std::size_t>(n), 0.0), 0.0, r,
                                  identity_matrix(n));
    }
    static AffineAutomorphism rotation(CMatrix u) {
        int n = static_cast<int>(u.size());
        return AffineAutomorphism(std::vector<Complex>(static_cast<std::size_t>(n), 0.0), 0.0, 1.0,
                                  std::move(u));
    }

    int n() const { return static_cast<int>(zeta0_.size()); }
    const std::vector<Complex>& heis_zeta() const { return zeta0_; }
    double heis_x() const { return x0_; }
    double dilation_factor() const { return r_; }
    const CMatrix& rotation_matrix() const { return u_; }

    SiegelPoint apply(const SiegelPoint& p) const {
        if (p.n() != n()) throw DimensionMismatch("AffineAutomorphism::apply: dimension");
        std::vector<Complex> lz = mat_vec(u_, p.zeta());
        for (auto& c : lz) c *= r_;
        Complex z = p.z() * (r_ * r_);
        // Heisenberg part
        Complex z2 = z + Complex(x0_, 0.0) + Complex(0.0, norm_sq(zeta0_)) +
                     Complex(0.0, 2.0) * herm(lz, zeta0_);
        std::vector<Complex> zeta2(zeta0_);
        for (std::size_t j = 0; j < zeta2.size(); ++j) zeta2[j] += lz[j];
        if (p.is_boundary()) return SiegelPoint::boundary(std::move(zeta2), z2);
        return SiegelPoint(std::move(zeta2), z2);
    }

    // |det| of the complex linear part: R^{n+2}.
    double jacobian_modulus() const { return std::pow(r_, n() + 2); }

    // Constant multiplier in U_s(phi) f = (f o phi^{-1}) * cocycle:
    // |J phi^{-1}(0,i)|^{s/(n+2)} = R^{-s}.
    double cocycle_u(double s) const { return std::pow(r_, -s); }

    AffineAutomorphism inverse() const {
        CMatrix ustar = adjoint(u_);
        std::vector<Complex> z0 = mat_vec(ustar, zeta0_);
        for (auto& c : z0) c *= -1.0 / r_;
        return AffineAutomorphism(std::move(z0), -x0_ / (r_ * r_), 1.0 / r_, std::move(ustar));
    }

  private:
    std::vector<Complex> zeta0_;
    double x0_;
    double r_;
    CMatrix u_;
};

// (a o b)(p) = a(b(p)); result in normal form. Uses the semidirect-product
// law L_a . heis_b = (L_a heis_b) . L_a with L_a(zeta0, x0) = (R U zeta0, R^2 x0),
// and the Heisenberg product (z1,x1)(z2,x2) = (z1+z2, x1+x2+2 Im<z1|z2>).
inline AffineAutomorphism compose(const AffineAutomorphism& a, const AffineAutomorphism& b) {
    if (a.n() != b.n()) throw DimensionMismatch("compose: dimension mismatch");
    std::vector<Complex> hb = mat_vec(a.rotation_matrix(), b.heis_zeta());
    for (auto& c : hb) c *= a.dilation_factor();
    double hbx = b.heis_x() * a.dilation_factor() * a.dilation_factor();
    // Heisenberg product (a.heis) * (L_a b.heis)
    std::vector<Complex> zeta(a.heis_zeta());
    double x = a.heis_x() + hbx + 2.0 * herm(a.heis_zeta(), hb).imag();
    for (std::size_t j = 0; j < zeta.size(); ++j) zeta[j] += hb[j];
    return AffineAutomorphism(std::move(zeta), x, a.dilation_factor() * b.dilation_factor(),
                              mat_mul(a.rotation_matrix(), b.rotation_matrix()));
}

} // namespace siegel
