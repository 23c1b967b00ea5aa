#pragma once

#include <algorithm>
#include <cstdint>
#include <utility>
#include <vector>

#include "siegel/errors.hpp"
#include "siegel/parabolic.hpp"

namespace siegel {

// Encodes a closed Aff-invariant subspace of Hol(U_{n+1}) as the sequence
// (h_k): the subspace is the closure of  (+)_k  P_k(C^n) x P^{h_k}(C),
// i.e. the monomial test "zeta^alpha z^m belongs iff m < h_{|alpha|}".
// Valid sequences satisfy h_{k+1} in {h_k, (h_k - 1)_+}, including the
// head -> tail junction; the tail value repeats forever.
struct SubspaceDescriptor {
    std::vector<std::uint32_t> head;
    std::uint32_t tail = 0;

    std::uint32_t h(std::size_t k) const { return k < head.size() ? head[k] : tail; }

    SubspaceDescriptor canonical() const {
        SubspaceDescriptor d = *this;
        while (!d.head.empty() && d.head.back() == d.tail) d.head.pop_back();
        return d;
    }

    friend bool operator==(const SubspaceDescriptor& a, const SubspaceDescriptor& b) {
        SubspaceDescriptor ca = a.canonical(), cb = b.canonical();
        return ca.head == cb.head && ca.tail == cb.tail;
    }
    friend bool operator<(const SubspaceDescriptor& a, const SubspaceDescriptor& b) {
        SubspaceDescriptor ca = a.canonical(), cb = b.canonical();
        std::size_t len = std::max(ca.head.size(), cb.head.size()) + 1;
        for (std::size_t k = 0; k < len; ++k)
            if (ca.h(k) != cb.h(k)) return ca.h(k) < cb.h(k);
        return false;
    }
};

struct DescriptorValidation {
    bool valid = true;
    long first_violation = -1; // index k of the offending step h_k -> h_{k+1}
};

inline DescriptorValidation validate_descriptor(const SubspaceDescriptor& d) {
    auto step_ok = [](std::uint32_t from, std::uint32_t to) {
        std::uint32_t drop = from == 0 ? 0 : from - 1;
        return to == from || to == drop;
    };
    for (std::size_t k = 0; k < d.head.size(); ++k) {
        std::uint32_t next = k + 1 < d.head.size() ? d.head[k + 1] : d.tail;
        if (!step_ok(d.head[k], next))
            return {false, static_cast<long>(k)};
    }
    return {true, -1};
}

// Term test: every monomial zeta^alpha z^m of P must satisfy m < h_{|alpha|}.
inline bool member(const ParabolicPolynomial& p, const SubspaceDescriptor& d) {
    for (const auto& [e, c] : p.poly().terms()) {
        std::size_t k = static_cast<std::size_t>(ParabolicPolynomial::zeta_degree_of(e));
        if (e.back() >= d.h(k)) return false;
    }
    return true;
}

// Descriptor of the Aff-invariant span generated by P_k(C^n) x P^h(C):
// h'_l = h for l <= k and (h - (l-k))_+ beyond (the orbit-closure formula).
inline SubspaceDescriptor orbit_descriptor(std::uint32_t k, std::uint32_t h) {
    SubspaceDescriptor d;
    for (std::uint32_t l = 0; l <= k; ++l) d.head.push_back(h);
    for (std::uint32_t j = 1; j <= h; ++j) d.head.push_back(h - j);
    d.tail = 0;
    return d.canonical();
}

} // namespace siegel
