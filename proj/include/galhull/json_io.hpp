#ifndef GALHULL_JSON_IO_HPP
#define GALHULL_JSON_IO_HPP

/**
 * @file json_io.hpp
 * @brief JSON encodings (nlohmann::json) of fields, elements, GRS specs and reports.
 *
 * Field:    {"p": 3, "h": 4, "modulus": [1, 0, 0, 1, 2]}   modulus leading coefficient first; optional
 * Element:  [c_{h-1}, ..., c_0]                               power-basis digits, highest power first
 * GrsSpec:  {"field": ..., "a": [...], "v": [...], "k": 2, "extended": false}
 * Poly:     [coeff_0, coeff_1, ...]                           constant term first, elements as above
 *
 * Decoding failures of any kind surface as InvalidArgument.
 */

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "constructions.hpp"
#include "errors.hpp"
#include "field.hpp"
#include "grs.hpp"
#include "linear_code.hpp"
#include "matrix.hpp"
#include "poly.hpp"

namespace galhull::json_io {

using json = nlohmann::json;

namespace detail {

template <class F>
auto guarded(const char* what, F&& fn) -> decltype(fn()) {
    try {
        return fn();
    } catch (const json::exception& ex) {
        throw InvalidArgument(std::string("malformed ") + what + ": " + ex.what());
    }
}

}  // namespace detail

inline json to_json(const Field& f) { return {{"p", f.p()}, {"h", f.h()}, {"modulus", f.modulus()}}; }

inline Field field_from_json(const json& j, FieldOptions options = {}) {
    return detail::guarded("field", [&] {
        if (!j.is_object()) throw InvalidArgument("field must be a JSON object");
        const auto p = j.at("p").get<std::uint64_t>();
        const auto h = j.at("h").get<unsigned>();
        std::optional<std::vector<std::uint64_t>> modulus;
        if (j.contains("modulus") && !j.at("modulus").is_null()) modulus = j.at("modulus").get<std::vector<std::uint64_t>>();
        return Field::create(p, h, modulus, options);
    });
}

inline json to_json(const Element& x) { return x.digits(); }

inline Element element_from_json(const Field& f, const json& j) {
    return detail::guarded("element", [&] {
        if (j.is_number_unsigned() || j.is_number_integer()) return f.element(j.get<std::uint64_t>());
        return f.from_digits(j.get<std::vector<std::uint64_t>>());
    });
}

inline json to_json(const std::vector<Element>& xs) {
    json out = json::array();
    for (const auto& x : xs) out.push_back(to_json(x));
    return out;
}

inline std::vector<Element> elements_from_json(const Field& f, const json& j) {
    if (!j.is_array()) throw InvalidArgument("expected a JSON array of field elements");
    std::vector<Element> out;
    for (const auto& x : j) out.push_back(element_from_json(f, x));
    return out;
}

inline json to_json(const Poly& p) { return to_json(p.coeffs()); }

inline Poly poly_from_json(const Field& f, const json& j) { return Poly(f, elements_from_json(f, j)); }

inline json to_json(const Matrix& m) {
    json rows = json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) rows.push_back(to_json(m.row_vector(r)));
    return rows;
}

inline json to_json(const GrsSpec& s) {
    return {{"field", to_json(s.field)}, {"a", to_json(s.a)}, {"v", to_json(s.v)}, {"k", s.k}, {"extended", s.extended}};
}

/// Decodes and validates a GrsSpec.
inline GrsSpec spec_from_json(const json& j, FieldOptions options = {}) {
    return detail::guarded("GRS spec", [&] {
        if (!j.is_object()) throw InvalidArgument("GRS spec must be a JSON object");
        Field f = field_from_json(j.at("field"), options);
        const auto k = j.at("k").get<std::int64_t>();
        if (k < 1) throw InvalidArgument("GRS dimension k must be at least 1");
        GrsSpec s{f, elements_from_json(f, j.at("a")), elements_from_json(f, j.at("v")), static_cast<std::size_t>(k),
                  j.value("extended", false)};
        s.validate();
        return s;
    });
}

inline json to_json(const SelfOrthogonalWitness& w) {
    return {{"e", w.e}, {"h", to_json(w.h)}, {"deg_h", w.deg_h()}, {"lambda", to_json(w.lambda)}, {"g", to_json(w.g)}};
}

inline json to_json(const TwistPlan& p) {
    return {{"e_prime", p.e_prime},
            {"target", p.target},
            {"mu", static_cast<std::int64_t>(p.mu)},
            {"nu", static_cast<std::int64_t>(p.nu)},
            {"alpha", to_json(p.alpha)},
            {"beta", to_json(p.beta)},
            {"s", p.s}};
}

inline json to_json(const CosetPointSet& ps) {
    json beta = json::array();
    for (const auto& b : ps.beta_labels) beta.push_back(to_json(b));
    return {{"m", ps.m},
            {"z", ps.z},
            {"w", ps.w},
            {"t", ps.t},
            {"n", ps.n()},
            {"h_basis", to_json(ps.h_basis)},
            {"eta", to_json(ps.eta)},
            {"beta_labels", beta},
            {"epsilon", to_json(ps.epsilon)}};
}

inline json to_json(const MdsResult& r) {
    json j{{"verdict", to_string(r.verdict)}, {"strategy", to_string(r.strategy)}};
    if (r.min_distance) j["min_distance"] = *r.min_distance;
    return j;
}

inline json to_json(const HullReport& h, const LinearCode& c, const std::optional<MdsResult>& mds = std::nullopt) {
    json j{{"n", c.n()}, {"k", c.k()}, {"e", h.e}, {"hull_dim", h.dim}, {"basis", to_json(h.basis)}};
    j["mds"] = mds ? json(to_string(mds->verdict)) : json(nullptr);
    return j;
}

}  // namespace galhull::json_io

#endif  // GALHULL_JSON_IO_HPP
