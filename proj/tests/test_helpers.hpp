#pragma once

#include <random>

#include "kvb/laurent_poly.hpp"

namespace kvb::testing {

inline Monomial mono(std::initializer_list<std::pair<Var, int>> entries) {
    Monomial::Storage s(entries.begin(), entries.end());
    return Monomial::from_entries(std::move(s));
}

inline LaurentPoly random_poly(std::mt19937& rng, const std::vector<Var>& vars, int terms, int max_exp) {
    std::uniform_int_distribution<int> exp(-max_exp, max_exp), coef(-5, 5);
    LaurentPoly p;
    for (int t = 0; t < terms; ++t) {
        Monomial::Storage s;
        for (Var v : vars) s.emplace_back(v, exp(rng));
        p.add_term(Monomial::from_entries(std::move(s)), Integer(coef(rng)));
    }
    return p;
}

}  // namespace kvb::testing
