#pragma once

#include <complex>
#include <utility>
#include <vector>

#include "siegel/errors.hpp"

namespace siegel {

using Complex = std::complex<double>;

// Hermitian scalar product on C^n, linear in the first slot:
// herm(a,b) = sum_j a_j * conj(b_j).
inline Complex herm(const std::vector<Complex>& a, const std::vector<Complex>& b) {
    if (a.size() != b.size()) throw DimensionMismatch("herm: length mismatch");
    Complex s = 0.0;
    for (std::size_t j = 0; j < a.size(); ++j) s += a[j] * std::conj(b[j]);
    return s;
}

inline double norm_sq(const std::vector<Complex>& a) {
    double s = 0.0;
    for (const auto& x : a) s += std::norm(x);
    return s;
}

// Point of the Siegel upper half-space U_{n+1} = {(zeta,z): Im z > |zeta|^2}.
// Interior points are the default; boundary points (rho = 0, the Heisenberg
// group embedded as the boundary) come only from the explicit constructor.
class SiegelPoint {
  public:
    SiegelPoint(std::vector<Complex> zeta, Complex z) : zeta_(std::move(zeta)), z_(z) {
        if (defect() <= 0.0)
            throw DomainError("SiegelPoint: Im z - |zeta|^2 <= 0");
    }

    static SiegelPoint boundary(std::vector<Complex> zeta, Complex z) {
        SiegelPoint p;
        p.zeta_ = std::move(zeta);
        p.z_ = z;
        p.boundary_ = true;
        double scale = std::max(1.0, std::abs(z));
        if (std::abs(p.defect()) > 1e-9 * scale)
            throw DomainError("SiegelPoint::boundary: rho not zero");
        return p;
    }

    static SiegelPoint base_point(int n) {
        return SiegelPoint(std::vector<Complex>(static_cast<std::size_t>(n), 0.0), Complex(0.0, 1.0));
    }

    int n() const { return static_cast<int>(zeta_.size()); }
    const std::vector<Complex>& zeta() const { return zeta_; }
    Complex z() const { return z_; }
    bool is_boundary() const { return boundary_; }

    double rho() const { return defect(); }

  private:
    SiegelPoint() = default;
    double defect() const { return z_.imag() - norm_sq(zeta_); }

    std::vector<Complex> zeta_;
    Complex z_{0.0, 1.0};
    bool boundary_ = false;
};

inline double rho(const SiegelPoint& p) { return p.rho(); }

// Point of the open unit ball B_{n+1} in C^n x C; the last coordinate plays
// the role of z under the Cayley transform.
class BallPoint {
  public:
    explicit BallPoint(std::vector<Complex> w) : w_(std::move(w)) {
        if (w_.empty()) throw DimensionMismatch("BallPoint: needs at least one coordinate");
        if (norm_sq(w_) >= 1.0) throw DomainError("BallPoint: |w| >= 1");
    }

    static BallPoint origin(int n) {
        return BallPoint(std::vector<Complex>(static_cast<std::size_t>(n) + 1, 0.0));
    }

    int n() const { return static_cast<int>(w_.size()) - 1; }
    const std::vector<Complex>& w() const { return w_; }
    Complex last() const { return w_.back(); }
    std::vector<Complex> zeta_part() const {
        return std::vector<Complex>(w_.begin(), w_.end() - 1);
    }

  private:
    std::vector<Complex> w_;
};

// Cayley transform B_{n+1} -> U_{n+1}:
//   (zeta, z) |-> (zeta/(1-z), i(1+z)/(1-z)).
inline SiegelPoint cayley(const BallPoint& p) {
    Complex z = p.last();
    Complex d = 1.0 - z;
    std::vector<Complex> zeta(p.w().begin(), p.w().end() - 1);
    for (auto& c : zeta) c /= d;
    return SiegelPoint(std::move(zeta), Complex(0.0, 1.0) * (1.0 + z) / d);
}

// Inverse Cayley transform U_{n+1} -> B_{n+1}:
//   (zeta, z) |-> (2i zeta/(z+i), (z-i)/(z+i)).
inline BallPoint cayley_inverse(const SiegelPoint& p) {
    Complex d = p.z() + Complex(0.0, 1.0);
    std::vector<Complex> w;
    w.reserve(p.zeta().size() + 1);
    for (const auto& c : p.zeta()) w.push_back(Complex(0.0, 2.0) * c / d);
    w.push_back((p.z() - Complex(0.0, 1.0)) / d);
    return BallPoint(std::move(w));
}

} // namespace siegel
