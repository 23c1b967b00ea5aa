#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "siegel/annihilator.hpp"
#include "siegel/enumerate.hpp"
#include "siegel/orbit.hpp"
#include "siegel/rng.hpp"

using namespace siegel;

namespace {
ComplexRational cr(long re, long im = 0) { return {Rational(re), Rational(im)}; }
} // namespace

TEST_CASE("descriptor validation") {
    CHECK(validate_descriptor({{2, 2, 1}, 1}).valid);
    CHECK(validate_descriptor({{}, 3}).valid); // constant sequence

    auto inc = validate_descriptor({{1, 2}, 2});
    CHECK_FALSE(inc.valid);
    CHECK(inc.first_violation == 0);

    auto drop2 = validate_descriptor({{3, 1}, 1});
    CHECK_FALSE(drop2.valid);
    CHECK(drop2.first_violation == 0);

    // junction head -> tail is part of the step rule
    CHECK_FALSE(validate_descriptor({{3}, 0}).valid);
    CHECK(validate_descriptor({{1}, 0}).valid);
}

TEST_CASE("membership term test") {
    // h == 0: only the zero polynomial
    SubspaceDescriptor zero{{}, 0};
    CHECK(member(ParabolicPolynomial(1), zero));
    CHECK_FALSE(member(ParabolicPolynomial::constant(1, cr(1)), zero));

    // constants in z at every zeta degree: zeta^3 in, z out
    SubspaceDescriptor consts{{}, 1};
    CHECK(member(ParabolicPolynomial::monomial(1, {3}, 0), consts));
    CHECK_FALSE(member(ParabolicPolynomial::z(1), consts));

    // (2,1,0,...): z in, zeta z out
    SubspaceDescriptor d{{2, 1}, 0};
    CHECK(member(ParabolicPolynomial::z(1), d));
    CHECK_FALSE(member(ParabolicPolynomial::monomial(1, {1}, 1), d));
}

TEST_CASE("orbit descriptors") {
    CHECK(orbit_descriptor(0, 1) == SubspaceDescriptor{{1}, 0});
    CHECK(orbit_descriptor(0, 2) == SubspaceDescriptor{{2, 1}, 0});
    CHECK(orbit_descriptor(1, 1) == SubspaceDescriptor{{1, 1}, 0});
    CHECK(validate_descriptor(orbit_descriptor(3, 4)).valid);
}

TEST_CASE("brute-force orbit spans are the oracle for orbit_descriptor") {
    auto gens = default_generator_sample(1);

    // (0,1): constants at every bound
    auto span01 = brute_force_orbit_span(1, 0, 1, 4, gens);
    REQUIRE(span01.basis.size() == 1);
    CHECK(span01.basis[0].poly().is_constant());

    // (0,2), n=1, degree bound 4: matches the member test of (2,1,0,...)
    auto span02 = brute_force_orbit_span(1, 0, 2, 4, gens);
    CHECK(span_equals_descriptor(span02, orbit_descriptor(0, 2)));

    // identity generator only: the span stays the seed
    std::vector<ExactAffine> only_id{ExactAffine::identity(1)};
    auto seed_only = brute_force_orbit_span(1, 1, 1, 4, only_id);
    REQUIRE(seed_only.basis.size() == 1);
    CHECK(seed_only.basis[0] == ParabolicPolynomial::zeta(1, 0));

    // small (k,h) sweep at n = 1 (the acceptance suite runs k+h <= 5)
    for (std::uint32_t k = 0; k <= 3; ++k)
        for (std::uint32_t h = 0; k + h <= 3; ++h) {
            long bound = std::max<long>(static_cast<long>(k) + 2L * h - 2, 0);
            auto span = brute_force_orbit_span(1, k, h, bound, gens);
            REQUIRE(span_equals_descriptor(span, orbit_descriptor(k, h)));
        }
    CHECK_THROWS_AS(brute_force_orbit_span(1, 0, 2, 11, gens), BudgetExceeded);
}

TEST_CASE("orbit/descriptor consistency extends to n = 2") {
    auto gens = default_generator_sample(2);
    for (std::uint32_t k = 0; k <= 5; ++k)
        for (std::uint32_t h = 0; k + h <= 5; ++h) {
            long bound = std::max<long>(static_cast<long>(k) + 2L * h - 2, 0);
            auto span = brute_force_orbit_span(2, k, h, bound, gens);
            REQUIRE(span_equals_descriptor(span, orbit_descriptor(k, h)));
        }
}

TEST_CASE("member sets of valid descriptors are invariant, s-independently") {
    // 50 exact maps: the generator sample plus deterministic pairwise
    // compositions of its elements
    auto gens = default_generator_sample(1);
    std::vector<ExactAffine> maps = gens;
    SplitMix64 rng(4242);
    while (maps.size() < 50)
        maps.push_back(exact_compose(gens[rng.next() % gens.size()],
                                     gens[rng.next() % gens.size()]));

    std::vector<SubspaceDescriptor> ds{{{2, 1}, 0}, {{3, 3, 2}, 2}, {{}, 2}};
    MonomialFrame frame(1, 6);
    for (const auto& d : ds) {
        REQUIRE(validate_descriptor(d).valid);
        for (const auto& e : frame.monomials()) {
            std::size_t k = static_cast<std::size_t>(ParabolicPolynomial::zeta_degree_of(e));
            if (e.back() >= d.h(k)) continue;
            ParabolicPolynomial p(1, ExactPoly::monomial(2, e, cr(1)));
            for (const auto& g : maps)
                for (long s : {0L, -2L})
                    REQUIRE(member(act_u_poly(g, Rational(s), p), d));
        }
    }
}

TEST_CASE("invalid descriptors have explicit escape witnesses") {
    for (const SubspaceDescriptor& d :
         {SubspaceDescriptor{{1, 2}, 2}, SubspaceDescriptor{{3, 1}, 1},
          SubspaceDescriptor{{2, 2, 3}, 3}}) {
        REQUIRE_FALSE(validate_descriptor(d).valid);
        auto wit = non_invariance_witness(1, d, 4);
        REQUIRE(wit.has_value());
        CHECK(member(wit->monomial, d));
        CHECK_FALSE(member(wit->image, d));
    }
    CHECK_FALSE(non_invariance_witness(1, {{2, 1}, 0}, 4).has_value());
}

TEST_CASE("enumeration at n = 0 returns P^0..P^D") {
    auto res = enumerate_invariant_truncations(0, 4);
    REQUIRE(res.descriptors.size() == 5);
    for (std::uint32_t k = 0; k <= 4; ++k)
        CHECK(res.descriptors[k] == SubspaceDescriptor{{k}, k});

    // degree bound 0: the zero space and the constants
    auto res0 = enumerate_invariant_truncations(0, 0);
    REQUIRE(res0.descriptors.size() == 2);
    CHECK(res0.descriptors[0] == SubspaceDescriptor{{}, 0});
    CHECK(res0.descriptors[1] == SubspaceDescriptor{{1}, 1});
}

TEST_CASE("enumeration at n = 1 matches the step-valid sequences") {
    for (long D : {2L, 4L}) {
        auto res = enumerate_invariant_truncations(1, D);
        // generate all step-valid cap sequences (h_0..h_D), h_0 <= D directly
        std::set<SubspaceDescriptor> expect;
        std::vector<std::uint32_t> seq(static_cast<std::size_t>(D) + 1, 0);
        std::function<void(long)> rec = [&](long k) {
            if (k > D) {
                SubspaceDescriptor d;
                d.head.assign(seq.begin(), seq.end());
                d.tail = seq.back();
                expect.insert(d.canonical());
                return;
            }
            std::uint32_t lo = 0, hi = static_cast<std::uint32_t>(D);
            if (k > 0) {
                std::uint32_t prev = seq[static_cast<std::size_t>(k - 1)];
                lo = prev == 0 ? 0 : prev - 1;
                hi = prev;
            }
            for (std::uint32_t v = lo; v <= hi; ++v) {
                seq[static_cast<std::size_t>(k)] = v;
                rec(k + 1);
            }
        };
        rec(0);
        std::set<SubspaceDescriptor> got(res.descriptors.begin(), res.descriptors.end());
        REQUIRE(got == expect);
    }
    CHECK_THROWS_AS(enumerate_invariant_truncations(1, 20), BudgetExceeded);
}

TEST_CASE("exhaustive subset sweep justifies the initial-segment reduction") {
    // n = 1, bidegrees (k, m) with k, m <= 2: all 2^9 subsets; the ones closed
    // under the generator sample are exactly the descriptor truncations.
    auto gens = default_generator_sample(1);
    struct Bi {
        long k, m;
    };
    std::vector<Bi> cells;
    for (long k = 0; k <= 2; ++k)
        for (long m = 0; m <= 2; ++m) cells.push_back({k, m});

    // image supports of each cell, truncated to the 3x3 grid
    std::vector<std::vector<std::size_t>> images(cells.size());
    for (std::size_t c = 0; c < cells.size(); ++c) {
        ParabolicPolynomial p = ParabolicPolynomial::monomial(
            1, {static_cast<std::uint32_t>(cells[c].k)}, static_cast<std::uint32_t>(cells[c].m));
        std::set<std::size_t> supp;
        for (const auto& g : gens) {
            ParabolicPolynomial q = act_u_poly(g, Rational(0), p);
            for (const auto& [e, coef] : q.poly().terms()) {
                long kk = ParabolicPolynomial::zeta_degree_of(e);
                long mm = e.back();
                if (kk <= 2 && mm <= 2)
                    supp.insert(static_cast<std::size_t>(kk * 3 + mm));
            }
        }
        images[c].assign(supp.begin(), supp.end());
    }

    std::size_t closed_count = 0;
    for (std::uint32_t mask = 0; mask < (1u << 9); ++mask) {
        bool closed = true;
        for (std::size_t c = 0; c < 9 && closed; ++c) {
            if (!(mask >> c & 1)) continue;
            for (std::size_t t : images[c])
                if (!(mask >> t & 1)) { closed = false; break; }
        }
        if (!closed) continue;
        ++closed_count;
        // closed => per-k initial segments obeying the step rule
        std::uint32_t h[3];
        for (long k = 0; k <= 2; ++k) {
            std::uint32_t cap = 0;
            while (cap < 3 && (mask >> (k * 3 + cap) & 1)) ++cap;
            for (std::uint32_t m = cap; m < 3; ++m) REQUIRE_FALSE(mask >> (k * 3 + m) & 1);
            h[k] = cap;
        }
        SubspaceDescriptor d{{h[0], h[1], h[2]}, h[2]};
        REQUIRE(validate_descriptor(d).valid);
    }
    // the step-valid sequences with h_0 <= 3 cut to the grid: counted directly
    CHECK(closed_count == 12);
}

TEST_CASE("annihilation pairing") {
    // d_x kills constants at every base point
    AnnihilatorOperator dx{{}, {}, 1};
    std::vector<HeisenbergPoint> pts{{{}, Rational(0)}, {{}, Rational(1)}, {{}, Rational(-2)}};
    for (const auto& v : annihilation_pair(ParabolicPolynomial::constant(0, cr(3)), dx, pts))
        CHECK(v.is_zero());

    // n = 0, V = P^2: d_x^2 kills z but not z^2 (value 2 at the origin)
    AnnihilatorOperator dx2{{}, {}, 2};
    for (const auto& v : annihilation_pair(ParabolicPolynomial::z(0), dx2, pts))
        CHECK(v.is_zero());
    auto vals = annihilation_pair(ParabolicPolynomial::monomial(0, {}, 2), dx2, pts);
    CHECK(vals[0] == cr(2));
    for (const auto& v : vals) CHECK_FALSE(v.is_zero());

    // an operator of homogeneity d kills everything of parabolic degree < d
    AnnihilatorOperator op{{2}, {0}, 1, cr(1)};
    REQUIRE(op.homogeneity() == 4);
    std::vector<HeisenbergPoint> pts1{{{cr(1, 1)}, Rational(1, 2)}, {{cr(0)}, Rational(0)}};
    for (long k = 0; k <= 1; ++k)
        for (long m = 0; 2 * m + k <= 3; ++m) {
            ParabolicPolynomial p = ParabolicPolynomial::monomial(
                1, {static_cast<std::uint32_t>(k)}, static_cast<std::uint32_t>(m));
            for (const auto& v : annihilation_pair(p, op, pts1)) REQUIRE(v.is_zero());
        }
}

TEST_CASE("annihilator bases: duality, vanishing, and nondegeneracy") {
    std::vector<SubspaceDescriptor> ds{{{2, 1}, 0}, {{1, 1}, 0}, {{3, 2, 2}, 2}, {{}, 0}, {{}, 1}};
    std::vector<HeisenbergPoint> pts{{{cr(0)}, Rational(0)},
                                     {{cr(1)}, Rational(1)},
                                     {{cr(0, 1)}, Rational(-1, 2)}};
    int n = 1;
    for (const auto& d : ds) {
        REQUIRE(validate_descriptor(d).valid);
        for (long degree = 0; degree <= 6; ++degree) {
            // dim of P at this parabolic degree
            MonomialFrame frame(n, degree);
            std::size_t dim_p = 0, dim_member = 0;
            for (const auto& e : frame.monomials()) {
                if (ParabolicPolynomial::parabolic_degree_of(e) != degree) continue;
                ++dim_p;
                std::size_t k = static_cast<std::size_t>(ParabolicPolynomial::zeta_degree_of(e));
                if (e.back() < d.h(k)) ++dim_member;
            }
            auto ops = annihilator_basis(n, d, degree);
            REQUIRE(dim_member + ops.size() == dim_p);

            // every member monomial of this degree is killed by every op
            for (const auto& e : frame.monomials()) {
                if (ParabolicPolynomial::parabolic_degree_of(e) != degree) continue;
                std::size_t k = static_cast<std::size_t>(ParabolicPolynomial::zeta_degree_of(e));
                ParabolicPolynomial p(n, ExactPoly::monomial(n + 1, e, cr(1)));
                if (e.back() < d.h(k)) {
                    for (const auto& op : ops)
                        for (const auto& v : annihilation_pair(p, op, pts)) REQUIRE(v.is_zero());
                } else {
                    // non-members are seen by their dual operator at the origin
                    bool seen = false;
                    for (const auto& op : ops)
                        if (!annihilation_value(p, op, {{cr(0)}, Rational(0)}).is_zero()) seen = true;
                    REQUIRE(seen);
                }
            }
        }
    }
}
