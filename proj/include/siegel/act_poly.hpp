#pragma once

#include <cmath>
#include <utility>
#include <vector>

#include "siegel/affine.hpp"
#include "siegel/parabolic.hpp"
#include "siegel/rational.hpp"

namespace siegel {

using ExactMatrix = std::vector<std::vector<ComplexRational>>;

inline ExactMatrix exact_identity(int n) {
    ExactMatrix u(static_cast<std::size_t>(n),
                  std::vector<ComplexRational>(static_cast<std::size_t>(n)));
    for (int j = 0; j < n; ++j) u[j][j] = ComplexRational(Rational(1));
    return u;
}

// Affine automorphism with exact rational data, in the same normal form as
// AffineAutomorphism: p |-> heis . (R U zeta, R^2 z). Exactness of the
// symbolic action needs the dilation R itself rational (not just R^2), since
// the inverse map divides zeta by R.
class ExactAffine {
  public:
    ExactAffine(std::vector<ComplexRational> zeta0, Rational x0, Rational dilation, ExactMatrix u)
        : zeta0_(std::move(zeta0)), x0_(std::move(x0)), r_(std::move(dilation)), u_(std::move(u)) {
        if (r_ <= 0) throw ParameterError("ExactAffine: dilation must be positive");
        std::size_t n = zeta0_.size();
        if (u_.size() != n) throw DimensionMismatch("ExactAffine: U size vs n");
        for (const auto& row : u_)
            if (row.size() != n) throw DimensionMismatch("ExactAffine: U not square");
        check_unitary();
    }

    static ExactAffine identity(int n) {
        return ExactAffine(std::vector<ComplexRational>(static_cast<std::size_t>(n)), Rational(0),
                           Rational(1), exact_identity(n));
    }
    static ExactAffine heisenberg(std::vector<ComplexRational> zeta0, Rational x0) {
        int n = static_cast<int>(zeta0.size());
        return ExactAffine(std::move(zeta0), std::move(x0), Rational(1), exact_identity(n));
    }
    static ExactAffine dilation(int n, Rational r) {
        return ExactAffine(std::vector<ComplexRational>(static_cast<std::size_t>(n)), Rational(0),
                           std::move(r), exact_identity(n));
    }
    static ExactAffine rotation(ExactMatrix u) {
        int n = static_cast<int>(u.size());
        return ExactAffine(std::vector<ComplexRational>(static_cast<std::size_t>(n)), Rational(0),
                           Rational(1), std::move(u));
    }

    int n() const { return static_cast<int>(zeta0_.size()); }
    const std::vector<ComplexRational>& heis_zeta() const { return zeta0_; }
    const Rational& heis_x() const { return x0_; }
    const Rational& dilation_factor() const { return r_; }
    const ExactMatrix& rotation_matrix() const { return u_; }

    ExactAffine inverse() const {
        int nn = n();
        ExactMatrix ustar(static_cast<std::size_t>(nn),
                          std::vector<ComplexRational>(static_cast<std::size_t>(nn)));
        for (int r = 0; r < nn; ++r)
            for (int c = 0; c < nn; ++c) ustar[r][c] = u_[c][r].conj();
        std::vector<ComplexRational> z0(static_cast<std::size_t>(nn));
        ComplexRational minus_inv_r(Rational(-1) / r_);
        for (int r = 0; r < nn; ++r) {
            ComplexRational s;
            for (int c = 0; c < nn; ++c) s += ustar[r][c] * zeta0_[c];
            z0[r] = minus_inv_r * s;
        }
        return ExactAffine(std::move(z0), Rational(-x0_ / (r_ * r_)), Rational(1) / r_,
                           std::move(ustar));
    }

    AffineAutomorphism to_numeric() const {
        std::vector<Complex> z0;
        z0.reserve(zeta0_.size());
        for (const auto& c : zeta0_) z0.push_back(c.to_complex());
        CMatrix u(u_.size());
        for (std::size_t r = 0; r < u_.size(); ++r)
            for (const auto& c : u_[r]) u[r].push_back(c.to_complex());
        return AffineAutomorphism(std::move(z0), to_double(x0_), to_double(r_), std::move(u));
    }

  private:
    void check_unitary() const {
        std::size_t nn = zeta0_.size();
        for (std::size_t r = 0; r < nn; ++r) {
            for (std::size_t c = 0; c < nn; ++c) {
                ComplexRational s;
                for (std::size_t k = 0; k < nn; ++k) s += u_[k][r].conj() * u_[k][c];
                ComplexRational want =
                    r == c ? ComplexRational(Rational(1)) : ComplexRational();
                if (s != want) throw ExactnessError("ExactAffine: U*U != I exactly");
            }
        }
    }

    std::vector<ComplexRational> zeta0_;
    Rational x0_;
    Rational r_;
    ExactMatrix u_;
};

inline ExactAffine exact_compose(const ExactAffine& a, const ExactAffine& b) {
    if (a.n() != b.n()) throw DimensionMismatch("exact_compose: dimension mismatch");
    int nn = a.n();
    // L_a(b.heis) = (R_a U_a zeta0_b, R_a^2 x0_b)
    std::vector<ComplexRational> hb(static_cast<std::size_t>(nn));
    ComplexRational ra(a.dilation_factor());
    for (int r = 0; r < nn; ++r) {
        ComplexRational s;
        for (int c = 0; c < nn; ++c) s += a.rotation_matrix()[r][c] * b.heis_zeta()[c];
        hb[r] = ra * s;
    }
    Rational hbx = b.heis_x() * a.dilation_factor() * a.dilation_factor();
    // Heisenberg product (z1,x1)(z2,x2) = (z1+z2, x1+x2+2 Im<z1|z2>)
    Rational two_im(0);
    for (int j = 0; j < nn; ++j) {
        ComplexRational t = a.heis_zeta()[j] * hb[j].conj();
        two_im += 2 * t.im;
    }
    std::vector<ComplexRational> zeta(a.heis_zeta());
    for (int j = 0; j < nn; ++j) zeta[j] += hb[j];
    ExactMatrix u(static_cast<std::size_t>(nn),
                  std::vector<ComplexRational>(static_cast<std::size_t>(nn)));
    for (int r = 0; r < nn; ++r)
        for (int c = 0; c < nn; ++c) {
            ComplexRational s;
            for (int k = 0; k < nn; ++k)
                s += a.rotation_matrix()[r][k] * b.rotation_matrix()[k][c];
            u[r][c] = s;
        }
    return ExactAffine(std::move(zeta), Rational(a.heis_x() + hbx + two_im),
                       Rational(a.dilation_factor() * b.dilation_factor()), std::move(u));
}

// U_s(a) P = (P o a^{-1}) * R^{-s}, computed exactly. a^{-1} sends
//   zeta |-> (1/R) U* (zeta - zeta0)
//   z    |-> (z - x0 + i|zeta0|^2 - 2i<zeta|zeta0>) / R^2.
// ExactAction caches the substitution images and their powers, so sweeps over
// many monomials and weights against one map pay the expansion cost once.
// Throws ExactnessError when R^{-s} is not an exact rational (it always is
// for integer s with rational R, and for any s when R = 1).
class ExactAction {
  public:
    explicit ExactAction(const ExactAffine& a) : map_(a), n_(a.n()) {
        ExactAffine inv = a.inverse();
        const int n = n_;
        ComplexRational ri(inv.dilation_factor()); // 1/R
        for (int j = 0; j < n; ++j) {
            ExactPoly img(n + 1);
            for (int k = 0; k < n; ++k) {
                Exponents e(static_cast<std::size_t>(n) + 1, 0);
                e[static_cast<std::size_t>(k)] = 1;
                img.add_term(std::move(e), inv.rotation_matrix()[j][k] * ri);
            }
            Exponents e0(static_cast<std::size_t>(n) + 1, 0);
            img.add_term(std::move(e0), inv.heis_zeta()[j]);
            images_.push_back(std::move(img));
        }
        // z-image in Heisenberg-first form, with a's own heis data
        const Rational& r = a.dilation_factor();
        Rational r2inv = Rational(1) / (r * r);
        ExactPoly img(n + 1);
        Exponents ez(static_cast<std::size_t>(n) + 1, 0);
        ez.back() = 1;
        img.add_term(std::move(ez), ComplexRational(r2inv));
        Rational zsq(0);
        for (const auto& c : a.heis_zeta()) zsq += abs_sq(c);
        Exponents e0(static_cast<std::size_t>(n) + 1, 0);
        img.add_term(std::move(e0),
                     ComplexRational(Rational(-a.heis_x() * r2inv), Rational(zsq * r2inv)));
        for (int k = 0; k < n; ++k) {
            Exponents e(static_cast<std::size_t>(n) + 1, 0);
            e[static_cast<std::size_t>(k)] = 1;
            ComplexRational coef = ComplexRational(Rational(0), Rational(-2)) *
                                   a.heis_zeta()[k].conj() * ComplexRational(r2inv);
            img.add_term(std::move(e), coef);
        }
        images_.push_back(std::move(img));
        powers_.resize(images_.size());
        for (std::size_t j = 0; j < images_.size(); ++j)
            powers_[j].push_back(ExactPoly::constant(n + 1, ComplexRational(Rational(1))));
    }

    const ExactAffine& map() const { return map_; }

    ParabolicPolynomial apply(const ParabolicPolynomial& p, const Rational& s) {
        if (p.n() != n_) throw DimensionMismatch("ExactAction::apply: dimension mismatch");
        auto weight = exact_pow(map_.dilation_factor(), Rational(-s));
        if (!weight) throw ExactnessError("ExactAction: R^{-s} not exactly representable");
        ExactPoly out(n_ + 1);
        for (const auto& [e, c] : p.poly().terms()) {
            ExactPoly term = ExactPoly::constant(n_ + 1, c);
            for (std::size_t j = 0; j < images_.size(); ++j) {
                while (powers_[j].size() <= e[j])
                    powers_[j].push_back(powers_[j].back() * images_[j]);
                if (e[j] > 0) term = term * powers_[j][e[j]];
            }
            out = out + term;
        }
        return ParabolicPolynomial(n_, ComplexRational(*weight) * out);
    }

  private:
    ExactAffine map_;
    int n_;
    std::vector<ExactPoly> images_;
    std::vector<std::vector<ExactPoly>> powers_;
};

inline ParabolicPolynomial act_u_poly(const ExactAffine& a, const Rational& s,
                                      const ParabolicPolynomial& p) {
    ExactAction action(a);
    return action.apply(p, s);
}

// Reconstructs exact data from a numeric automorphism (doubles are binary
// rationals, so the conversion itself is exact); the unitarity recheck then
// rejects parameters that were only approximately unitary.
inline ExactAffine exact_from_numeric(const AffineAutomorphism& a) {
    auto rat = [](double x) {
        if (!std::isfinite(x)) throw ExactnessError("exact_from_numeric: non-finite");
        Rational r(x);
        return r;
    };
    std::vector<ComplexRational> z0;
    z0.reserve(a.heis_zeta().size());
    for (const auto& c : a.heis_zeta()) z0.emplace_back(rat(c.real()), rat(c.imag()));
    ExactMatrix u(a.rotation_matrix().size());
    for (std::size_t r = 0; r < u.size(); ++r)
        for (const auto& c : a.rotation_matrix()[r]) u[r].emplace_back(rat(c.real()), rat(c.imag()));
    return ExactAffine(std::move(z0), rat(a.heis_x()), rat(a.dilation_factor()), std::move(u));
}

} // namespace siegel
