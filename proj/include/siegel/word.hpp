#pragma once

#include <functional>
#include <variant>
#include <vector>

#include "siegel/affine.hpp"
#include "siegel/phase.hpp"
#include "siegel/points.hpp"

namespace siegel {

// The inversion iota(zeta, z) = (-i zeta/z, -1/z), an involution on points.
struct Inversion {};

inline SiegelPoint apply_inversion(const SiegelPoint& p) {
    Complex z = p.z();
    std::vector<Complex> zeta(p.zeta());
    for (auto& c : zeta) c *= Complex(0.0, -1.0) / z;
    return SiegelPoint(std::move(zeta), -1.0 / z);
}

using Letter = std::variant<AffineAutomorphism, Inversion>;

// Finite word in affine generators and the inversion. The word l1 l2 ... lm
// acts on points as phi_{l1} o phi_{l2} o ... o phi_{lm} (leftmost outermost).
//
// cocycle(s, p) is the branch-fixed lift of (J phi_w)^{s/(n+2)}(p), built
// letter by letter through the cocycle law
//   cocycle(w1 w2, p) = cocycle(w1, w2 p) * cocycle(w2, p),
// with per-letter values
//   affine a : R_a^{s}                    (= |J a (0,i)|^{s/(n+2)})
//   INV      : i^{-ns/(n+2)} z^{-s}       (Eq. for J iota, principal branch;
//                                          valid since Im z > 0).
// Two words with the same point action may carry different phases; every
// shipped identity is either phase-insensitive or pinned by the recorded
// iota-square reference phase.
class GroupWord {
  public:
    GroupWord() = default;
    explicit GroupWord(std::vector<Letter> letters) : letters_(std::move(letters)) {}

    static GroupWord single(AffineAutomorphism a) { return GroupWord({Letter(std::move(a))}); }
    static GroupWord inversion() { return GroupWord({Letter(Inversion{})}); }

    const std::vector<Letter>& letters() const { return letters_; }
    bool empty() const { return letters_.empty(); }
    std::size_t size() const { return letters_.size(); }

    void push_back(Letter l) { letters_.push_back(std::move(l)); }

    GroupWord concat(const GroupWord& other) const {
        std::vector<Letter> ls = letters_;
        ls.insert(ls.end(), other.letters_.begin(), other.letters_.end());
        return GroupWord(std::move(ls));
    }

    // Reversed word of letter inverses; INV is its own inverse as a letter.
    GroupWord inverse() const {
        std::vector<Letter> ls;
        ls.reserve(letters_.size());
        for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) {
            if (std::holds_alternative<Inversion>(*it))
                ls.emplace_back(Inversion{});
            else
                ls.emplace_back(std::get<AffineAutomorphism>(*it).inverse());
        }
        return GroupWord(std::move(ls));
    }

    SiegelPoint apply(const SiegelPoint& p) const {
        SiegelPoint q = p;
        for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) {
            if (std::holds_alternative<Inversion>(*it))
                q = apply_inversion(q);
            else
                q = std::get<AffineAutomorphism>(*it).apply(q);
        }
        return q;
    }

    Complex cocycle(double s, const SiegelPoint& p,
                    const PhaseConvention& conv = default_phase_convention()) const {
        Complex acc = 1.0;
        SiegelPoint q = p;
        for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) {
            if (std::holds_alternative<Inversion>(*it)) {
                acc *= conv.iota_prefactor(q.n(), s) * cpow(q.z(), -s);
                q = apply_inversion(q);
            } else {
                const auto& a = std::get<AffineAutomorphism>(*it);
                acc *= std::pow(a.dilation_factor(), s);
                q = a.apply(q);
            }
        }
        return acc;
    }

  private:
    std::vector<Letter> letters_;
};

inline SiegelPoint apply_point(const GroupWord& w, const SiegelPoint& p) { return w.apply(p); }

inline Complex cocycle_word(const GroupWord& w, double s, const SiegelPoint& p,
                            const PhaseConvention& conv = default_phase_convention()) {
    return w.cocycle(s, p, conv);
}

using HolomorphicFn = std::function<Complex(const SiegelPoint&)>;

// Weighted action along a word: U_s(w) f (p) = f(w^{-1} p) * cocycle(w^{-1}, s, p).
// For a pure dilation this is (f o delta_R^{-1}) R^{-s}.
inline Complex act_u(const GroupWord& w, double s, const HolomorphicFn& f, const SiegelPoint& p,
                     const PhaseConvention& conv = default_phase_convention()) {
    GroupWord winv = w.inverse();
    return f(winv.apply(p)) * winv.cocycle(s, p, conv);
}

} // namespace siegel
