#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "siegel/descriptor.hpp"
#include "siegel/parabolic.hpp"

namespace siegel {

// Constant-coefficient differential monomial
//   coeff * d_zeta'^alpha d_{conj zeta'}^beta d_x'^m
// on the Heisenberg group coordinates, homogeneous of degree
// |alpha| + |beta| + 2m under the parabolic dilations.
struct AnnihilatorOperator {
    Exponents alpha;       // holomorphic zeta' derivatives, length n
    Exponents beta;        // antiholomorphic zeta' derivatives, length n
    std::uint32_t m = 0;   // x' derivatives
    ComplexRational coeff = ComplexRational(Rational(1));

    long homogeneity() const {
        long d = 2L * m;
        for (auto a : alpha) d += a;
        for (auto b : beta) d += b;
        return d;
    }
};

// Heisenberg base point (zeta_g, x_g), exact; embeds into the boundary as
// (zeta_g, x_g + i |zeta_g|^2).
struct HeisenbergPoint {
    std::vector<ComplexRational> zeta;
    Rational x;
};

// P((zeta_g, z_g) . (zeta', x' + i|zeta'|^2)) expanded exactly as a
// polynomial in the 2n+1 real-group coordinates, encoded with variables
// (zeta'_1..zeta'_n, conj(zeta')_1..conj(zeta')_n, x'):
//   zeta |-> zeta_g + zeta'
//   z    |-> z_g + x' + i sum_j zeta'_j conj(zeta')_j + 2i <zeta'|zeta_g>.
inline ExactPoly heisenberg_pullback(const ParabolicPolynomial& p, const HeisenbergPoint& g) {
    const int n = p.n();
    if (static_cast<int>(g.zeta.size()) != n)
        throw DimensionMismatch("heisenberg_pullback: dimension mismatch");
    const int nv = 2 * n + 1;

    Rational zsq(0);
    for (const auto& c : g.zeta) zsq += abs_sq(c);
    ComplexRational z_g(g.x, zsq); // boundary embedding of g

    std::vector<ExactPoly> images;
    images.reserve(static_cast<std::size_t>(n) + 1);
    for (int j = 0; j < n; ++j) {
        ExactPoly img = ExactPoly::constant(nv, g.zeta[static_cast<std::size_t>(j)]);
        img = img + ExactPoly::variable(nv, j);
        images.push_back(std::move(img));
    }
    ExactPoly zimg = ExactPoly::constant(nv, z_g);
    zimg = zimg + ExactPoly::variable(nv, 2 * n); // x'
    for (int j = 0; j < n; ++j) {
        Exponents e(static_cast<std::size_t>(nv), 0);
        e[static_cast<std::size_t>(j)] = 1;
        e[static_cast<std::size_t>(n + j)] = 1;
        zimg.add_term(std::move(e), ComplexRational::unit_i()); // i zeta' conj(zeta')
        Exponents e2(static_cast<std::size_t>(nv), 0);
        e2[static_cast<std::size_t>(j)] = 1;
        zimg.add_term(std::move(e2),
                      ComplexRational(Rational(0), Rational(2)) *
                          g.zeta[static_cast<std::size_t>(j)].conj()); // 2i zeta' conj(zeta_g)
    }
    images.push_back(std::move(zimg));
    return p.poly().substitute(images);
}

// (P * I)(g) for the distribution I = op applied at the origin: the operator
// acting in (zeta', conj zeta', x') on the pullback, evaluated at 0. Exact;
// vanishing at every g for every operator in a descriptor's annihilator basis
// characterizes membership.
inline ComplexRational annihilation_value(const ParabolicPolynomial& p,
                                          const AnnihilatorOperator& op,
                                          const HeisenbergPoint& g) {
    const int n = p.n();
    if (static_cast<int>(op.alpha.size()) != n || static_cast<int>(op.beta.size()) != n)
        throw DimensionMismatch("annihilation_value: operator arity");
    ExactPoly f = heisenberg_pullback(p, g);
    Exponents target;
    target.reserve(2 * static_cast<std::size_t>(n) + 1);
    target.insert(target.end(), op.alpha.begin(), op.alpha.end());
    target.insert(target.end(), op.beta.begin(), op.beta.end());
    target.push_back(op.m);
    ComplexRational c = f.coefficient(target);
    if (c.is_zero()) return ComplexRational();
    BigInt fact = 1;
    for (auto a : op.alpha) fact *= factorial(a);
    for (auto b : op.beta) fact *= factorial(b);
    fact *= factorial(op.m);
    return op.coeff * ComplexRational(Rational(fact)) * c;
}

inline std::vector<ComplexRational> annihilation_pair(const ParabolicPolynomial& p,
                                                      const AnnihilatorOperator& op,
                                                      const std::vector<HeisenbergPoint>& at) {
    std::vector<ComplexRational> out;
    out.reserve(at.size());
    for (const auto& g : at) out.push_back(annihilation_value(p, op, g));
    return out;
}

// Graded annihilator basis of the descriptor subspace at parabolic degree d:
// the pure operators d_zeta^beta d_x^m with m >= h_{|beta|} and |beta|+2m = d.
// Each pairs nontrivially with exactly one holomorphic monomial (its own
// bidegree) and kills every member monomial, so together with the member set
// it exhausts dim P_d (the annihilator-dimension duality).
inline std::vector<AnnihilatorOperator> annihilator_basis(int n, const SubspaceDescriptor& d,
                                                          long degree) {
    std::vector<AnnihilatorOperator> ops;
    std::vector<Exponents> betas;
    Exponents cur(static_cast<std::size_t>(n), 0);
    std::function<void(int, long)> rec = [&](int var, long remaining) {
        if (var == n) {
            if (remaining % 2 == 0) betas.push_back(cur);
            return;
        }
        for (long a = 0; a <= remaining; ++a) {
            cur[static_cast<std::size_t>(var)] = static_cast<std::uint32_t>(a);
            rec(var + 1, remaining - a);
        }
        cur[static_cast<std::size_t>(var)] = 0;
    };
    rec(0, degree);
    for (const auto& beta : betas) {
        long kb = 0;
        for (auto b : beta) kb += b;
        long m2 = degree - kb;
        if (m2 < 0 || m2 % 2) continue;
        std::uint32_t m = static_cast<std::uint32_t>(m2 / 2);
        if (m >= d.h(static_cast<std::size_t>(kb)))
            ops.push_back(AnnihilatorOperator{beta, Exponents(static_cast<std::size_t>(n), 0), m});
    }
    return ops;
}

} // namespace siegel
