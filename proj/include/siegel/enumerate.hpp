#pragma once

#include <functional>
#include <map>
#include <optional>
#include <set>
#include <tuple>
#include <utility>
#include <vector>

#include "siegel/orbit.hpp"

namespace siegel {

namespace detail {

// Bidegree (zeta-degree, z-degree) support of the exact generator images of a
// full block P_k(C^n) x z^m, memoized per generator. Blocks are the right
// granularity: candidates are unions of full blocks (T-isotypic plus U(n)
// irreducibility of P_k), and the affine action never raises the z-degree.
class BlockImageTable {
  public:
    BlockImageTable(int n, const std::vector<ExactAffine>& gens) : n_(n), gens_(&gens) {}

    const std::set<std::pair<long, long>>& support(std::size_t gen, long k, long m) {
        auto key = std::make_tuple(gen, k, m);
        auto it = cache_.find(key);
        if (it != cache_.end()) return it->second;
        std::set<std::pair<long, long>> supp;
        Exponents alpha(static_cast<std::size_t>(n_), 0);
        enumerate_alpha(alpha, 0, k, [&](const Exponents& a) {
            ParabolicPolynomial p = ParabolicPolynomial::monomial(
                n_, a, static_cast<std::uint32_t>(m));
            ParabolicPolynomial q = act_u_poly((*gens_)[gen], Rational(0), p);
            for (const auto& [e, c] : q.poly().terms())
                supp.emplace(ParabolicPolynomial::zeta_degree_of(e), static_cast<long>(e.back()));
        });
        return cache_.emplace(key, std::move(supp)).first->second;
    }

  private:
    template <typename Fn>
    void enumerate_alpha(Exponents& a, int var, long remaining, const Fn& fn) {
        if (var == n_ - 1 || n_ == 0) {
            if (n_ > 0) a[static_cast<std::size_t>(var)] = static_cast<std::uint32_t>(remaining);
            fn(a);
            if (n_ > 0) a[static_cast<std::size_t>(var)] = 0;
            return;
        }
        for (long x = 0; x <= remaining; ++x) {
            a[static_cast<std::size_t>(var)] = static_cast<std::uint32_t>(x);
            enumerate_alpha(a, var + 1, remaining - x, fn);
        }
        a[static_cast<std::size_t>(var)] = 0;
    }

    int n_;
    const std::vector<ExactAffine>* gens_;
    std::map<std::tuple<std::size_t, long, long>, std::set<std::pair<long, long>>> cache_;
};

} // namespace detail

struct EnumerationResult {
    std::vector<SubspaceDescriptor> descriptors;   // lexicographically sorted
    std::size_t candidates_visited = 0;            // DFS nodes of the completeness sweep
};

// Enumerates the closed Aff-invariant subspaces distinguishable below
// degree_bound: all step-valid cap sequences (h_0..h_D) with h_0 <= D,
// tail = h_D. Each is verified closed under the exact generator sample, and a
// pruned DFS over all graded block-candidates (caps mu_k <= D, horizon D)
// asserts that no other candidate is closed -- the brute-force completeness
// half of the classification at this truncation.
inline EnumerationResult enumerate_invariant_truncations(int n, long degree_bound) {
    if (degree_bound < 0 || degree_bound > 8)
        throw BudgetExceeded("enumerate_invariant_truncations: degree_bound <= 8");
    if (n < 0 || n > 2) throw BudgetExceeded("enumerate_invariant_truncations: n <= 2");

    const long D = degree_bound;
    std::vector<ExactAffine> gens = default_generator_sample(n);
    EnumerationResult out;

    if (n == 0) {
        // Candidates are subsets of {z^m : m <= D}; exhaustive closure sweep.
        // act images of z^m live on z^j, j <= m.
        std::vector<std::set<long>> images(static_cast<std::size_t>(D) + 1);
        for (long m = 0; m <= D; ++m) {
            for (std::size_t g = 0; g < gens.size(); ++g) {
                ParabolicPolynomial p =
                    ParabolicPolynomial::monomial(0, {}, static_cast<std::uint32_t>(m));
                ParabolicPolynomial q = act_u_poly(gens[g], Rational(0), p);
                for (const auto& [e, c] : q.poly().terms())
                    images[static_cast<std::size_t>(m)].insert(static_cast<long>(e.back()));
            }
        }
        for (std::uint64_t mask = 0; mask < (1ULL << (D + 1)); ++mask) {
            ++out.candidates_visited;
            bool closed = true;
            for (long m = 0; m <= D && closed; ++m) {
                if (!(mask >> m & 1)) continue;
                for (long j : images[static_cast<std::size_t>(m)])
                    if (!(mask >> j & 1)) { closed = false; break; }
            }
            if (!closed) continue;
            // closed subsets must be initial segments {m < h0}, h0 <= D
            // (the full set is indistinguishable from Hol at this bound)
            long h0 = 0;
            while (h0 <= D && (mask >> h0 & 1)) ++h0;
            bool initial = true;
            for (long m = h0; m <= D; ++m)
                if (mask >> m & 1) initial = false;
            if (!initial)
                throw AssertionFailure("enumerate: closed candidate not an initial segment");
            // the full truncation is indistinguishable from Hol, except that the
            // constants stay a legitimate answer even at bound 0
            if (h0 <= std::max(D, 1L))
                out.descriptors.push_back(SubspaceDescriptor{{static_cast<std::uint32_t>(h0)},
                                                             static_cast<std::uint32_t>(h0)});
        }
        std::sort(out.descriptors.begin(), out.descriptors.end());
        return out;
    }

    // n >= 1: pruned DFS over cap sequences mu_0..mu_D (block (k,m) selected
    // iff m < mu_k). A constraint is checkable once every index it touches is
    // assigned; violations prune the branch.
    detail::BlockImageTable table(n, gens);
    std::vector<long> mu(static_cast<std::size_t>(D) + 1, 0);
    std::vector<SubspaceDescriptor> closed_candidates;

    auto selected = [&](long k, long m, long depth) {
        return k <= depth && m < mu[static_cast<std::size_t>(k)];
    };
    // check all constraints whose source block and relevant targets are <= depth
    auto consistent_at = [&](long depth) {
        for (long k = 0; k <= depth; ++k) {
            for (long m = 0; m < mu[static_cast<std::size_t>(k)]; ++m) {
                for (std::size_t g = 0; g < gens.size(); ++g) {
                    for (const auto& [kk, mm] : table.support(g, k, m)) {
                        if (kk > depth || kk > D) continue;
                        if (mm > D) continue; // beyond the candidate grid, ignored
                        if (!selected(kk, mm, depth)) return false;
                    }
                }
            }
        }
        return true;
    };

    std::function<void(long)> dfs = [&](long depth) {
        if (depth > D) {
            SubspaceDescriptor d;
            for (long k = 0; k <= D; ++k) d.head.push_back(static_cast<std::uint32_t>(mu[k]));
            d.tail = static_cast<std::uint32_t>(mu[static_cast<std::size_t>(D)]);
            closed_candidates.push_back(d.canonical());
            return;
        }
        for (long v = 0; v <= D; ++v) {
            mu[static_cast<std::size_t>(depth)] = v;
            ++out.candidates_visited;
            if (consistent_at(depth)) dfs(depth + 1);
        }
        mu[static_cast<std::size_t>(depth)] = 0;
    };
    dfs(0);

    // completeness: the closed candidates are exactly the step-valid ones
    for (const auto& d : closed_candidates) {
        if (!validate_descriptor(d).valid)
            throw AssertionFailure("enumerate: closed candidate violates the step rule");
        out.descriptors.push_back(d);
    }
    std::sort(out.descriptors.begin(), out.descriptors.end());
    out.descriptors.erase(std::unique(out.descriptors.begin(), out.descriptors.end()),
                          out.descriptors.end());
    return out;
}

// Explicit escape witness for an invalid descriptor: a generator and a member
// monomial whose image leaves the member set. Returns nullopt for valid
// descriptors (tested over the same frame the enumerator uses).
struct NonInvarianceWitness {
    ExactAffine generator;
    ParabolicPolynomial monomial;
    ParabolicPolynomial image;
};

inline std::optional<NonInvarianceWitness> non_invariance_witness(int n,
                                                                  const SubspaceDescriptor& d,
                                                                  long degree_bound) {
    std::vector<ExactAffine> gens = default_generator_sample(n);
    MonomialFrame frame(n, 2 * degree_bound + 2);
    for (const auto& e : frame.monomials()) {
        std::size_t k = static_cast<std::size_t>(ParabolicPolynomial::zeta_degree_of(e));
        if (e.back() >= d.h(k)) continue;
        ParabolicPolynomial p(n, ExactPoly::monomial(n + 1, e, ComplexRational(Rational(1))));
        for (const auto& g : gens) {
            ParabolicPolynomial q = act_u_poly(g, Rational(0), p);
            if (!member(q, d)) return NonInvarianceWitness{g, p, q};
        }
    }
    return std::nullopt;
}

} // namespace siegel
