#include "kvb/poly_json.hpp"

#include "kvb/errors.hpp"

namespace kvb {

json to_json(const LaurentPoly& p, const VarTable& vars) {
    json out = json::array();
    for (const auto& [m, c] : p.sorted_terms()) {
        json e = json::object();
        for (const auto& [v, x] : m.entries()) e[vars.name(v)] = x;
        out.push_back({{"c", c.str()}, {"e", e}});
    }
    return out;
}

LaurentPoly poly_from_json(const json& j, const VarTable& vars, Tag default_tag) {
    if (!j.is_array()) throw StructuralError("polynomial must be a JSON array of terms");
    LaurentPoly p;
    for (const auto& t : j) {
        if (!t.is_object() || !t.contains("c")) throw StructuralError("polynomial term needs a \"c\" field");
        Integer c;
        const auto& cj = t.at("c");
        try {
            if (cj.is_string())
                c = Integer(cj.get<std::string>());
            else if (cj.is_number_integer())
                c = Integer(cj.get<long long>());
            else
                throw StructuralError("coefficient must be a decimal string");
        } catch (const std::runtime_error&) {
            throw StructuralError("bad coefficient " + cj.dump());
        }
        Monomial::Storage entries;
        if (t.contains("e")) {
            if (!t.at("e").is_object()) throw StructuralError("\"e\" must be an object");
            for (const auto& [name, x] : t.at("e").items()) {
                if (!x.is_number_integer()) throw StructuralError("exponent of " + name + " must be an integer");
                entries.emplace_back(vars.parse(name, default_tag), x.get<int>());
            }
        }
        p.add_term(Monomial::from_entries(std::move(entries)), c);
    }
    return p;
}

json to_json(const RationalFn& r, const VarTable& vars) {
    RationalFn c = r;
    c.reduce();
    return {{"numerator", to_json(c.numerator(), vars)}, {"denominator", to_json(c.denominator(), vars)}};
}

json to_json(const FormalSeries& s, const VarTable& vars) {
    auto bound = [](int x) { return x == FormalSeries::kNegInf ? json(nullptr) : json(x); };
    json terms = json::array();
    for (auto it = s.coeffs().rbegin(); it != s.coeffs().rend(); ++it)
        terms.push_back({{"z", it->first.first}, {"w", it->first.second}, {"c", to_json(it->second, vars)}});
    return {{"window",
             {{"z", {bound(s.low(0)), bound(s.upper(0))}}, {"w", {bound(s.low(1)), bound(s.upper(1))}}}},
            {"terms", terms}};
}

}  // namespace kvb
