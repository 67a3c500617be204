#include "kvb/iota.hpp"

#include "kvb/errors.hpp"

namespace kvb {

IotaSymbols register_iota_symbols(VarTable& vars) {
    return {vars.add_param("x"), vars.add_param("y"), vars.add_param("p"), vars.add_param("q")};
}

LaurentPoly iota_truncation(const IotaSymbols& s, bool plus, int n) {
    if (n < 0) throw StructuralError("truncation level must be nonnegative");
    LaurentPoly sum;
    for (int k = 0; k <= n; ++k)
        sum.add_term(Monomial::var(s.p, k) * Monomial::var(s.q, k + 1), Integer(1));
    return plus ? sum * Monomial::var(s.y) : -(sum * Monomial::var(s.x, -1));
}

LaurentPoly iota_factor(const IotaSymbols& s, bool plus) {
    LaurentPoly d = LaurentPoly::var(s.q, -1) - LaurentPoly::var(s.p);
    return plus ? d * Monomial::var(s.y, -1) : -(d * Monomial::var(s.x));
}

LaurentPoly iota_check(const IotaSymbols& s, bool plus, int n) {
    return iota_truncation(s, plus, n) * iota_factor(s, plus) - LaurentPoly(1);
}

}  // namespace kvb
