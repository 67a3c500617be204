#pragma once

#include "kvb/laurent_poly.hpp"

namespace kvb {

// Symbols for the expansions of (1 - x/y)^-1 in the ring generated by
// x, y, p and q, where for iota+ p stands for (1 - y) and q for
// (1 - x)^-1, and for iota- p stands for (1 - 1/y) and q for (1 - 1/x)^-1.
struct IotaSymbols {
    Var x, y, p, q;
};

IotaSymbols register_iota_symbols(VarTable& vars);

// Truncation at level n of iota+ (1 - x/y)^-1 = y sum_k p^k q^(k+1), or of
// iota- (1 - x/y)^-1 = -x^-1 sum_k p^k q^(k+1).
LaurentPoly iota_truncation(const IotaSymbols& s, bool plus, int n);

// (1 - x/y) written in the same symbols: y^-1 (q^-1 - p), or -x (q^-1 - p).
LaurentPoly iota_factor(const IotaSymbols& s, bool plus);

// iota(f^-1) * f - 1 with f = 1 - x/y, truncated at level n.
LaurentPoly iota_check(const IotaSymbols& s, bool plus, int n);

}  // namespace kvb
