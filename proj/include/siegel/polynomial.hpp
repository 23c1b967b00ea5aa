#pragma once

#include <complex>
#include <cstdint>
#include <map>
#include <span>
#include <utility>
#include <vector>

#include "siegel/errors.hpp"
#include "siegel/rational.hpp"

namespace siegel {

using Exponents = std::vector<std::uint32_t>;

// Sparse multivariate polynomial with exact complex-rational coefficients.
// The variable count is fixed per instance; zero coefficients are never
// stored. This one engine backs the parabolic algebra on U_{n+1}, the ball
// polynomials, and the (zeta, conj zeta, x) expansions of the appendix.
class ExactPoly {
  public:
    using TermMap = std::map<Exponents, ComplexRational>;

    explicit ExactPoly(int nvars = 0) : nvars_(nvars) {}

    static ExactPoly constant(int nvars, ComplexRational c) {
        ExactPoly p(nvars);
        p.add_term(Exponents(static_cast<std::size_t>(nvars), 0), std::move(c));
        return p;
    }
    static ExactPoly variable(int nvars, int j) {
        ExactPoly p(nvars);
        Exponents e(static_cast<std::size_t>(nvars), 0);
        e[static_cast<std::size_t>(j)] = 1;
        p.add_term(std::move(e), ComplexRational(Rational(1)));
        return p;
    }
    static ExactPoly monomial(int nvars, Exponents e, ComplexRational c) {
        if (static_cast<int>(e.size()) != nvars)
            throw DimensionMismatch("ExactPoly::monomial: exponent arity");
        ExactPoly p(nvars);
        p.add_term(std::move(e), std::move(c));
        return p;
    }

    int nvars() const { return nvars_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    bool is_constant() const {
        if (terms_.empty()) return true;
        if (terms_.size() > 1) return false;
        for (auto e : terms_.begin()->first)
            if (e != 0) return false;
        return true;
    }

    ComplexRational constant_term() const {
        Exponents zero(static_cast<std::size_t>(nvars_), 0);
        auto it = terms_.find(zero);
        return it == terms_.end() ? ComplexRational() : it->second;
    }

    ComplexRational coefficient(const Exponents& e) const {
        auto it = terms_.find(e);
        return it == terms_.end() ? ComplexRational() : it->second;
    }

    void add_term(Exponents e, ComplexRational c) { accumulate(e, c); }

    long weighted_degree(std::span<const int> weights) const {
        long best = -1;
        for (const auto& [e, c] : terms_) {
            long d = 0;
            for (std::size_t j = 0; j < e.size(); ++j) d += static_cast<long>(e[j]) * weights[j];
            best = std::max(best, d);
        }
        return best;
    }

    long total_degree() const {
        long best = -1;
        for (const auto& [e, c] : terms_) {
            long d = 0;
            for (auto x : e) d += x;
            best = std::max(best, d);
        }
        return best;
    }

    friend ExactPoly operator+(const ExactPoly& a, const ExactPoly& b) {
        a.check_same(b);
        ExactPoly out = a;
        for (const auto& [e, c] : b.terms_) out.accumulate(e, c);
        return out;
    }
    friend ExactPoly operator-(const ExactPoly& a, const ExactPoly& b) {
        a.check_same(b);
        ExactPoly out = a;
        for (const auto& [e, c] : b.terms_) out.accumulate(e, -c);
        return out;
    }
    friend ExactPoly operator*(const ExactPoly& a, const ExactPoly& b) {
        a.check_same(b);
        ExactPoly out(a.nvars_);
        for (const auto& [ea, ca] : a.terms_) {
            for (const auto& [eb, cb] : b.terms_) {
                Exponents e(ea);
                for (std::size_t j = 0; j < e.size(); ++j) e[j] += eb[j];
                out.accumulate(e, ca * cb);
            }
        }
        return out;
    }
    friend ExactPoly operator*(const ComplexRational& c, const ExactPoly& a) {
        ExactPoly out(a.nvars_);
        if (c.is_zero()) return out;
        for (const auto& [e, t] : a.terms_) out.terms_.emplace(e, c * t);
        return out;
    }
    friend ExactPoly operator-(const ExactPoly& a) { return ComplexRational(Rational(-1)) * a; }

    friend bool operator==(const ExactPoly& a, const ExactPoly& b) {
        return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
    }

    ExactPoly pow(unsigned e) const {
        ExactPoly acc = constant(nvars_, ComplexRational(Rational(1)));
        ExactPoly base = *this;
        while (e) {
            if (e & 1) acc = acc * base;
            if (e >>= 1) base = base * base;
        }
        return acc;
    }

    // d^order/d x_j^order, exact.
    ExactPoly derivative(int j, unsigned order = 1) const {
        ExactPoly out = *this;
        for (unsigned k = 0; k < order; ++k) {
            ExactPoly next(nvars_);
            for (const auto& [e, c] : out.terms_) {
                std::uint32_t ej = e[static_cast<std::size_t>(j)];
                if (ej == 0) continue;
                Exponents e2(e);
                --e2[static_cast<std::size_t>(j)];
                next.accumulate(e2, ComplexRational(Rational(ej)) * c);
            }
            out = std::move(next);
        }
        return out;
    }

    // P(images[0], ..., images[nvars-1]); images may live in another variable
    // space. Per-variable powers are cached across terms.
    ExactPoly substitute(std::span<const ExactPoly> images) const {
        if (static_cast<int>(images.size()) != nvars_)
            throw DimensionMismatch("ExactPoly::substitute: arity mismatch");
        int target_vars = images.empty() ? 0 : images[0].nvars();
        for (const auto& im : images)
            if (im.nvars() != target_vars)
                throw DimensionMismatch("ExactPoly::substitute: inconsistent images");
        std::vector<std::vector<ExactPoly>> powers(images.size());
        for (std::size_t j = 0; j < images.size(); ++j)
            powers[j].push_back(constant(target_vars, ComplexRational(Rational(1))));
        ExactPoly out(target_vars);
        for (const auto& [e, c] : terms_) {
            ExactPoly term = constant(target_vars, c);
            for (std::size_t j = 0; j < images.size(); ++j) {
                while (powers[j].size() <= e[j]) powers[j].push_back(powers[j].back() * images[j]);
                if (e[j] > 0) term = term * powers[j][e[j]];
            }
            out = out + term;
        }
        return out;
    }

    std::complex<double> eval(std::span<const std::complex<double>> x) const {
        if (static_cast<int>(x.size()) != nvars_) throw DimensionMismatch("ExactPoly::eval: arity");
        std::complex<double> acc = 0.0;
        for (const auto& [e, c] : terms_) {
            std::complex<double> t = c.to_complex();
            for (std::size_t j = 0; j < e.size(); ++j)
                for (std::uint32_t k = 0; k < e[j]; ++k) t *= x[j];
            acc += t;
        }
        return acc;
    }

    ExactPoly conj_coefficients() const {
        ExactPoly out(nvars_);
        for (const auto& [e, c] : terms_) out.terms_.emplace(e, c.conj());
        return out;
    }

    void accumulate(const Exponents& e, const ComplexRational& c) {
        if (c.is_zero()) return;
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            terms_.emplace(e, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

  private:
    void check_same(const ExactPoly& b) const {
        if (nvars_ != b.nvars_) throw DimensionMismatch("ExactPoly: variable count mismatch");
    }

    int nvars_;
    TermMap terms_;
};

} // namespace siegel
