#pragma once

#include "slicess/ops.hpp"
#include "slicess/slices.hpp"

#include <map>
#include <string>
#include <utility>

namespace slicess {

struct ConsistencyError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// d1: E1_{p,q} -> E1_{p-1,q+1}
GroupHom d1_matrix(Spectrum e, const FieldPresentation& f, int p, int q);

struct Window {
    int pmin = 0, pmax = 0, qmin = 0, qmax = 0;

    bool empty() const { return pmin > pmax || qmin > qmax; }
    bool contains(int p, int q) const { return p >= pmin && p <= pmax && q >= qmin && q <= qmax; }
};

using Cell = std::pair<int, int>;

struct PageRegion {
    Spectrum spectrum = Spectrum::KT;
    std::string field;
    std::string page = "1";  // "1", "2", "inf"
    Window window;
    std::map<Cell, GroupObject> cells;
    std::map<Cell, GroupHom> homs;  // keyed by source cell
    std::map<Cell, std::string> notes;
};

// E1 cells and every d1 with both ends in the window; d1∘d1 is checked eagerly.
PageRegion d1_region(Spectrum e, const FieldPresentation& f, const Window& w);

// entries of g∘f must vanish in the presented target group
bool composite_vanishes(const IntMatrix& gf, const std::vector<BigInt>& target_orders);

}  // namespace slicess
