#pragma once

#include "slicess/differentials.hpp"

#include <string>
#include <vector>

namespace slicess {

struct E2Cell {
    GroupObject e1;
    GroupObject e2;
    GroupHom in, out;          // d1 entering and leaving (p,q)
    std::vector<BitVec> reps;  // E1 coordinates of survivors, mod-2 cells only
};

E2Cell compute_e2(Spectrum e, const FieldPresentation& f, int p, int q);
GroupObject e2_group(Spectrum e, const FieldPresentation& f, int p, int q);

// page "2" or "inf"; d1 homs are not carried
PageRegion e2_region(Spectrum e, const FieldPresentation& f, const Window& w, const std::string& page = "2");

struct CollapseMismatch {
    int p = 0, q = 0;
    std::string expected, computed;
};

struct CollapseReport {
    std::string field;
    std::size_t cells = 0;
    std::vector<CollapseMismatch> mismatches;
    bool ok() const { return mismatches.empty(); }
};

// E2(KT) = h^{q,q} at p ≡ 0 (mod 4), 0 elsewhere, with matching labels
CollapseReport check_collapse_kt(const FieldPresentation& f, const Window& w);

struct SplitReport {
    std::size_t checked = 0;
    std::vector<Cell> failures;  // source cells of a non-injective entering d1
    bool ok() const { return failures.empty(); }
};

SplitReport check_split_injective_kt(const FieldPresentation& f, const Window& w);

struct WittReport {
    std::string field;
    int qmax = 0;
    std::vector<int> dims;                        // dim I^q/I^{q+1}
    std::vector<std::vector<std::string>> labels;
    std::string note;
};

WittReport graded_witt(const FieldPresentation& f, int qmax);

struct KTFiltrationReport {
    int p = 0, q = 0;
    std::vector<std::pair<int, int>> groups;  // h^{a,b} summands
    int dim = 0;
    bool tail = false;                        // p ≡ 0: the extension by I^{q+1}
    std::string str() const;
};

// π_{p,0} f_q(KT) for p ≢ 0, and the split part of π_{0,0} f_{q+1}(KT) for p ≡ 0
KTFiltrationReport kt_filtration_groups(const FieldPresentation& f, int p, int q);

struct CrosscheckReport {
    std::size_t checked = 0;
    std::vector<std::string> failures;
    bool ok() const { return failures.empty(); }
};

CrosscheckReport kt_filtration_crosscheck(const FieldPresentation& f, const Window& w);

struct ColumnEntry {
    int q = 0;
    GroupObject e2;
};

std::vector<ColumnEntry> kq_e2_column(const FieldPresentation& f, int p, int qmax);

struct KOReport {
    std::string field;
    int qmax = 0;
    std::vector<ColumnEntry> ko0, ko1, col2;
    GroupObject ko2;
    GroupObject ko3_sub, ko3_quotient;
    std::vector<std::string> lines() const;
};

KOReport ko_low_degree(const FieldPresentation& f, int qmax = -1);

}  // namespace slicess
