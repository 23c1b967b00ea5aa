#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "siegel/act_poly.hpp"
#include "siegel/descriptor.hpp"
#include "siegel/errors.hpp"

namespace siegel {

// The finite exact generator sample used for invariance and orbit closures:
// Heisenberg translations with parameters in {+-1, +-1/2, +-i/2} per
// coordinate, horizontal translations x0 = +-1, dilations R in {1/2, 2}, and
// (for n >= 2) the transposition of the first two coordinates. Iterating
// these to closure already forces the full descriptor lattice.
inline std::vector<ExactAffine> default_generator_sample(int n) {
    std::vector<ExactAffine> gens;
    auto zero = [&] { return std::vector<ComplexRational>(static_cast<std::size_t>(n)); };
    if (n > 0) {
        std::vector<ComplexRational> params = {
            ComplexRational(Rational(1)),
            ComplexRational(Rational(-1)),
            ComplexRational(Rational(1, 2)),
            ComplexRational(Rational(-1, 2)),
            ComplexRational(Rational(0), Rational(1, 2)),
            ComplexRational(Rational(0), Rational(-1, 2)),
        };
        for (int j = 0; j < n; ++j) {
            for (const auto& par : params) {
                auto zeta = zero();
                zeta[static_cast<std::size_t>(j)] = par;
                gens.push_back(ExactAffine::heisenberg(std::move(zeta), Rational(0)));
            }
        }
    }
    gens.push_back(ExactAffine::heisenberg(zero(), Rational(1)));
    gens.push_back(ExactAffine::heisenberg(zero(), Rational(-1)));
    gens.push_back(ExactAffine::dilation(n, Rational(2)));
    gens.push_back(ExactAffine::dilation(n, Rational(1, 2)));
    if (n >= 2) {
        ExactMatrix swap = exact_identity(n);
        std::swap(swap[0], swap[1]);
        gens.push_back(ExactAffine::rotation(std::move(swap)));
    }
    return gens;
}

namespace detail {

// Dense exact row space over a fixed monomial order; insert() reduces against
// the current echelon basis and reports whether the vector was new.
class ExactRowSpace {
  public:
    explicit ExactRowSpace(std::size_t width) : width_(width) {}

    bool insert(std::vector<ComplexRational> v) {
        reduce(v);
        std::size_t lead = leading(v);
        if (lead == width_) return false;
        ComplexRational inv = ComplexRational(Rational(1)) / v[lead];
        for (auto& c : v) c *= inv;
        // back-substitute into existing rows
        for (auto& [l, row] : rows_) {
            if (!row[lead].is_zero()) {
                ComplexRational f = row[lead];
                for (std::size_t j = 0; j < width_; ++j) row[j] -= f * v[j];
            }
        }
        rows_.emplace(lead, std::move(v));
        return true;
    }

    std::size_t dimension() const { return rows_.size(); }
    const std::map<std::size_t, std::vector<ComplexRational>>& rows() const { return rows_; }

    bool contains(std::vector<ComplexRational> v) const {
        reduce(v);
        return leading(v) == width_;
    }

  private:
    void reduce(std::vector<ComplexRational>& v) const {
        for (const auto& [lead, row] : rows_) {
            if (!v[lead].is_zero()) {
                ComplexRational f = v[lead];
                for (std::size_t j = 0; j < width_; ++j) v[j] -= f * row[j];
            }
        }
    }
    std::size_t leading(const std::vector<ComplexRational>& v) const {
        for (std::size_t j = 0; j < width_; ++j)
            if (!v[j].is_zero()) return j;
        return width_;
    }

    std::size_t width_;
    std::map<std::size_t, std::vector<ComplexRational>> rows_;
};

} // namespace detail

// Monomial frame: all (alpha, m) with |alpha| + 2m <= degree_bound in a fixed
// order, used to flatten polynomials for exact linear algebra.
class MonomialFrame {
  public:
    MonomialFrame(int n, long degree_bound) : n_(n) {
        Exponents e(static_cast<std::size_t>(n) + 1, 0);
        enumerate(e, 0, degree_bound);
        for (std::size_t j = 0; j < monomials_.size(); ++j) index_.emplace(monomials_[j], j);
    }

    int n() const { return n_; }
    std::size_t size() const { return monomials_.size(); }
    const std::vector<Exponents>& monomials() const { return monomials_; }

    std::optional<std::vector<ComplexRational>> flatten(const ParabolicPolynomial& p) const {
        std::vector<ComplexRational> v(monomials_.size());
        for (const auto& [e, c] : p.poly().terms()) {
            auto it = index_.find(e);
            if (it == index_.end()) return std::nullopt; // exceeds the frame
            v[it->second] = c;
        }
        return v;
    }

    ParabolicPolynomial unflatten(const std::vector<ComplexRational>& v) const {
        ExactPoly p(n_ + 1);
        for (std::size_t j = 0; j < v.size(); ++j)
            if (!v[j].is_zero()) p.add_term(monomials_[j], v[j]);
        return {n_, std::move(p)};
    }

  private:
    void enumerate(Exponents& e, int var, long budget) {
        if (var == n_) {
            for (long m = 0; 2 * m <= budget; ++m) {
                e.back() = static_cast<std::uint32_t>(m);
                monomials_.push_back(e);
            }
            e.back() = 0;
            return;
        }
        for (long a = 0; a <= budget; ++a) {
            e[static_cast<std::size_t>(var)] = static_cast<std::uint32_t>(a);
            enumerate(e, var + 1, budget - a);
        }
        e[static_cast<std::size_t>(var)] = 0;
    }

    int n_;
    std::vector<Exponents> monomials_;
    std::map<Exponents, std::size_t> index_;
};

struct OrbitSpan {
    MonomialFrame frame;
    std::vector<ParabolicPolynomial> basis; // echelonized, frame order
};

// Exact linear span, truncated to parabolic degree <= degree_bound, of the
// U_0-orbit of P_k(C^n) x P^h(C) under the generator sample, iterated to
// closure. The affine action never raises the parabolic degree, so for
// degree_bound >= k + 2h - 2 no truncation actually occurs.
inline OrbitSpan brute_force_orbit_span(int n, std::uint32_t k, std::uint32_t h, long degree_bound,
                                        const std::vector<ExactAffine>& generators) {
    if (degree_bound > 10 || n > 2)
        throw BudgetExceeded("brute_force_orbit_span: degree_bound <= 10, n <= 2");
    MonomialFrame frame(n, degree_bound);
    detail::ExactRowSpace space(frame.size());
    std::vector<ParabolicPolynomial> worklist;

    auto push = [&](const ParabolicPolynomial& p) {
        auto flat = frame.flatten(p);
        if (!flat) throw BudgetExceeded("brute_force_orbit_span: term beyond frame");
        if (space.insert(std::move(*flat))) worklist.push_back(p);
    };

    // seed: monomial basis of P_k x P^h
    for (const auto& e : frame.monomials()) {
        if (ParabolicPolynomial::zeta_degree_of(e) == static_cast<long>(k) && e.back() < h)
            push(ParabolicPolynomial(n, ExactPoly::monomial(n + 1, e, ComplexRational(Rational(1)))));
    }

    while (!worklist.empty()) {
        ParabolicPolynomial p = std::move(worklist.back());
        worklist.pop_back();
        for (const auto& g : generators) {
            if (space.dimension() > 4096) throw BudgetExceeded("brute_force_orbit_span: dimension");
            push(act_u_poly(g, Rational(0), p));
        }
    }

    OrbitSpan out{std::move(frame), {}};
    for (const auto& [lead, row] : space.rows()) out.basis.push_back(out.frame.unflatten(row));
    return out;
}

// The member set of a descriptor inside a frame, as sorted monomial indices.
inline std::vector<std::size_t> member_indices(const MonomialFrame& frame,
                                               const SubspaceDescriptor& d) {
    std::vector<std::size_t> idx;
    for (std::size_t j = 0; j < frame.size(); ++j) {
        const Exponents& e = frame.monomials()[j];
        std::size_t k = static_cast<std::size_t>(ParabolicPolynomial::zeta_degree_of(e));
        if (e.back() < d.h(k)) idx.push_back(j);
    }
    return idx;
}

// Exact set equality between an orbit span and a descriptor's member set:
// every basis vector passes the term test, and the dimensions agree.
inline bool span_equals_descriptor(const OrbitSpan& span, const SubspaceDescriptor& d) {
    for (const auto& p : span.basis)
        if (!member(p, d)) return false;
    return span.basis.size() == member_indices(span.frame, d).size();
}

} // namespace siegel
