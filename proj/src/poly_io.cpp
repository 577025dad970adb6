#include "umemura/poly_io.hpp"

#include <algorithm>
#include <cstdio>
#include <vector>

#include "umemura/errors.hpp"

namespace umemura {

namespace {

struct FlatTerm {
    int deg_r, deg_t;
    Rational coef;
};

// Canonical document order: (deg_t, deg_r) descending.
std::vector<FlatTerm> canonical_terms(const BiPoly& p) {
    std::vector<FlatTerm> out;
    out.reserve(p.term_count());
    for (const auto& [key, coef] : p.terms()) out.push_back({key.deg_r, key.deg_t, coef});
    std::sort(out.begin(), out.end(), [](const FlatTerm& a, const FlatTerm& b) {
        if (a.deg_t != b.deg_t) return a.deg_t > b.deg_t;
        return a.deg_r > b.deg_r;
    });
    return out;
}

}  // namespace

nlohmann::ordered_json bipoly_to_json(const BiPoly& p) {
    nlohmann::ordered_json doc;
    doc["vars"] = nlohmann::ordered_json::array({"r", "t"});
    auto terms = nlohmann::ordered_json::array();
    for (const auto& term : canonical_terms(p)) {
        nlohmann::ordered_json t;
        t["c"] = term.coef.str_fraction();
        t["e"] = nlohmann::ordered_json::array({term.deg_r, term.deg_t});
        terms.push_back(std::move(t));
    }
    doc["terms"] = std::move(terms);
    return doc;
}

std::string bipoly_to_json_string(const BiPoly& p) { return bipoly_to_json(p).dump(); }

BiPoly bipoly_from_json(const nlohmann::json& doc) {
    if (!doc.is_object()) throw ParseError("polynomial document must be an object", 0);
    if (!doc.contains("vars") || !doc.contains("terms"))
        throw ParseError("polynomial document needs 'vars' and 'terms'", 0);
    const auto& vars = doc["vars"];
    if (!vars.is_array() || vars.size() != 2 || vars[0] != "r" || vars[1] != "t")
        throw ParseError("unsupported variable list; expected [\"r\",\"t\"]", 0);
    const auto& terms = doc["terms"];
    if (!terms.is_array()) throw ParseError("'terms' must be an array", 0);
    BiPoly p;
    std::size_t index = 0;
    for (const auto& t : terms) {
        if (!t.is_object() || !t.contains("c") || !t.contains("e") || !t["e"].is_array() ||
            t["e"].size() != 2 || !t["c"].is_string())
            throw ParseError("malformed term at index " + std::to_string(index), index);
        if (!t["e"][0].is_number_integer() || !t["e"][1].is_number_integer())
            throw ParseError("non-integer exponent at index " + std::to_string(index), index);
        const int dr = t["e"][0].get<int>();
        const int dt = t["e"][1].get<int>();
        if (dr < 0 || dt < 0)
            throw ParseError("negative exponent at index " + std::to_string(index), index);
        Rational c;
        try {
            c = Rational::from_string(t["c"].get<std::string>());
        } catch (const std::invalid_argument& e) {
            throw ParseError(std::string("bad coefficient: ") + e.what(), index);
        }
        if (c.is_zero())
            throw ParseError("explicit zero coefficient at index " + std::to_string(index), index);
        if (!p.coeff(dr, dt).is_zero())
            throw ParseError("duplicate exponent pair at index " + std::to_string(index), index);
        p.add_term({dr, dt}, c);
        ++index;
    }
    return p;
}

BiPoly bipoly_from_string(std::string_view text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(e.what(), e.byte);
    }
    return bipoly_from_json(doc);
}

std::string bipoly_to_latex(const BiPoly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& term : canonical_terms(p)) {
        const bool negative = term.coef.sign() < 0;
        const Rational mag = term.coef.abs();
        if (first) {
            if (negative) out += "-";
            first = false;
        } else {
            out += negative ? " - " : " + ";
        }
        std::string mono;
        auto append_power = [&mono](const char* var, int e) {
            if (e == 0) return;
            mono += var;
            if (e > 1) mono += "^{" + std::to_string(e) + "}";
        };
        append_power("r", term.deg_r);
        append_power("t", term.deg_t);
        std::string coef_str;
        if (mag.is_integer()) {
            if (!(mono.size() && mag == Rational(1))) coef_str = mag.str();
        } else {
            coef_str = "\\frac{" + mag.raw().get_num().get_str() + "}{" +
                       mag.raw().get_den().get_str() + "}";
        }
        out += coef_str + mono;
    }
    return out;
}

std::string format_double17(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

}  // namespace umemura
