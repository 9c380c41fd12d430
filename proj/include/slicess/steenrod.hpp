#pragma once

#include "slicess/field.hpp"

namespace slicess {

// Closed forms on a = τ^n c with c in h^{p,p}, n = q - p.
MotClass sq1(const FieldPresentation& f, const MotClass& x);     // (p+1, q)
MotClass sq2(const FieldPresentation& f, const MotClass& x);     // (p+2, q+1)
MotClass sq3(const FieldPresentation& f, const MotClass& x);     // (p+3, q+1), Sq3 = Sq1 Sq2
MotClass sq2sq1(const FieldPresentation& f, const MotClass& x);  // (p+3, q+1)
MotClass sq3sq1(const FieldPresentation& f, const MotClass& x);  // (p+4, q+1)
MotClass tau_times(const FieldPresentation& f, const MotClass& x);
MotClass rho_times(const FieldPresentation& f, const MotClass& x);

// Integral elements of H^{p,q}, in generator coordinates of the resolved cell.
struct IntClass {
    int p = 0, q = 0;
    std::vector<BigInt> coords;
};

MotClass reduce_mod2(const FieldPresentation& f, const ResolvedCell& cell, const IntClass& x);
// Bockstein h^{p,q} -> H^{p+1,q}; `target` must be the resolved cell (p+1,q).
IntClass bockstein(const FieldPresentation& f, const ResolvedCell& target, const MotClass& x);

}  // namespace slicess
