#pragma once

#include <cmath>
#include <string>
#include <vector>

#include <json.hpp>

#include "siegel/act_poly.hpp"
#include "siegel/descriptor.hpp"
#include "siegel/norms.hpp"
#include "siegel/parabolic.hpp"
#include "siegel/points.hpp"
#include "siegel/word.hpp"

namespace siegel {

using Json = nlohmann::json;

// Points serialize as arrays of [re, im] pairs; a SiegelPoint of dimension n
// is a length-(n+1) array with the last entry z.

inline Json to_json(const Complex& c) { return Json::array({c.real(), c.imag()}); }

inline Complex complex_from_json(const Json& j) {
    if (!j.is_array() || j.size() != 2) throw ParameterError("complex_from_json: expected [re, im]");
    return {j[0].get<double>(), j[1].get<double>()};
}

inline Json to_json(const SiegelPoint& p) {
    Json arr = Json::array();
    for (const auto& c : p.zeta()) arr.push_back(to_json(c));
    arr.push_back(to_json(p.z()));
    return arr;
}

inline SiegelPoint siegel_point_from_json(const Json& j) {
    if (!j.is_array() || j.empty()) throw ParameterError("siegel_point_from_json: expected array");
    std::vector<Complex> zeta;
    for (std::size_t k = 0; k + 1 < j.size(); ++k) zeta.push_back(complex_from_json(j[k]));
    return SiegelPoint(std::move(zeta), complex_from_json(j.back()));
}

inline Json to_json(const BallPoint& p) {
    Json arr = Json::array();
    for (const auto& c : p.w()) arr.push_back(to_json(c));
    return arr;
}

inline BallPoint ball_point_from_json(const Json& j) {
    std::vector<Complex> w;
    for (const auto& c : j) w.push_back(complex_from_json(c));
    return BallPoint(std::move(w));
}

// AffineAutomorphism: {heis:{zeta:[[re,im]..], x:real}, R:real, U:[[..]]}
inline Json to_json(const AffineAutomorphism& a) {
    Json heis;
    Json zeta = Json::array();
    for (const auto& c : a.heis_zeta()) zeta.push_back(to_json(c));
    heis["zeta"] = std::move(zeta);
    heis["x"] = a.heis_x();
    Json u = Json::array();
    for (const auto& row : a.rotation_matrix()) {
        Json r = Json::array();
        for (const auto& c : row) r.push_back(to_json(c));
        u.push_back(std::move(r));
    }
    return Json{{"heis", std::move(heis)}, {"R", a.dilation_factor()}, {"U", std::move(u)}};
}

inline AffineAutomorphism affine_from_json(const Json& j) {
    std::vector<Complex> zeta;
    for (const auto& c : j.at("heis").at("zeta")) zeta.push_back(complex_from_json(c));
    CMatrix u;
    for (const auto& row : j.at("U")) {
        std::vector<Complex> r;
        for (const auto& c : row) r.push_back(complex_from_json(c));
        u.push_back(std::move(r));
    }
    return AffineAutomorphism(std::move(zeta), j.at("heis").at("x").get<double>(),
                              j.at("R").get<double>(), std::move(u));
}

// GroupWord: JSON list mixing affine objects and the string "INV".
inline Json to_json(const GroupWord& w) {
    Json arr = Json::array();
    for (const auto& l : w.letters()) {
        if (std::holds_alternative<Inversion>(l))
            arr.push_back("INV");
        else
            arr.push_back(to_json(std::get<AffineAutomorphism>(l)));
    }
    return arr;
}

inline GroupWord word_from_json(const Json& j) {
    std::vector<Letter> letters;
    for (const auto& l : j) {
        if (l.is_string()) {
            if (l.get<std::string>() != "INV")
                throw ParameterError("word_from_json: unknown letter string");
            letters.emplace_back(Inversion{});
        } else {
            letters.emplace_back(affine_from_json(l));
        }
    }
    return GroupWord(std::move(letters));
}

// Polynomials: lists of {alpha:[..], m:int, re:"p/q", im:"p/q"}.
inline Json to_json(const ParabolicPolynomial& p) {
    Json arr = Json::array();
    for (const auto& [e, c] : p.poly().terms()) {
        Json alpha = Json::array();
        for (std::size_t j = 0; j + 1 < e.size(); ++j) alpha.push_back(e[j]);
        arr.push_back(Json{{"alpha", std::move(alpha)},
                           {"m", e.back()},
                           {"re", to_string(c.re)},
                           {"im", to_string(c.im)}});
    }
    return arr;
}

inline ParabolicPolynomial parabolic_from_json(const Json& j, int n) {
    ExactPoly p(n + 1);
    for (const auto& t : j) {
        Exponents e;
        for (const auto& a : t.at("alpha")) e.push_back(a.get<std::uint32_t>());
        if (static_cast<int>(e.size()) != n)
            throw ParameterError("parabolic_from_json: alpha arity");
        e.push_back(t.at("m").get<std::uint32_t>());
        p.add_term(std::move(e), ComplexRational(rational_from_string(t.at("re").get<std::string>()),
                                                 rational_from_string(t.at("im").get<std::string>())));
    }
    return {n, std::move(p)};
}

// Descriptors: {head:[..], tail:int}
inline Json to_json(const SubspaceDescriptor& d) {
    return Json{{"head", d.head}, {"tail", d.tail}};
}

inline SubspaceDescriptor descriptor_from_json(const Json& j) {
    SubspaceDescriptor d;
    for (const auto& h : j.at("head")) d.head.push_back(h.get<std::uint32_t>());
    d.tail = j.at("tail").get<std::uint32_t>();
    return d;
}

// NormReport: {value: number|"inf", method, per_degree:[{k, contribution}]}
inline Json to_json(const NormReport& r) {
    Json per = Json::array();
    for (const auto& [k, v] : r.per_degree)
        per.push_back(Json{{"k", k}, {"contribution", std::isfinite(v) ? Json(v) : Json("inf")}});
    const char* method = r.method == NormReport::Method::SERIES       ? "series"
                         : r.method == NormReport::Method::QUADRATURE ? "quadrature"
                                                                      : "gram";
    Json value = r.infinite ? Json("inf") : Json(r.value);
    return Json{{"value", std::move(value)}, {"method", method}, {"per_degree", std::move(per)}};
}

} // namespace siegel
