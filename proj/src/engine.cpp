#include "slicess/engine.hpp"

#include <map>

namespace slicess {

namespace {

int mod4(int n) { return ((n % 4) + 4) % 4; }

// E1 cells and d1 maps computed once per (p,q)
class PageCache {
public:
    PageCache(Spectrum e, const FieldPresentation& f) : e_(e), f_(f) {}

    const GroupObject& e1(int p, int q)
    {
        auto it = e1_.find({p, q});
        if (it == e1_.end())
            it = e1_.emplace(Cell{p, q}, e1_group(e_, f_, p, q)).first;
        return it->second;
    }

    const GroupHom& d1(int p, int q)
    {
        auto it = d1_.find({p, q});
        if (it == d1_.end()) {
            GroupHom h;
            if (q < 0) {
                h.source = GroupObject{p, q, {}, false};
                h.target = e1(p - 1, q + 1);
            } else {
                h = d1_matrix(e_, f_, p, q);
            }
            it = d1_.emplace(Cell{p, q}, std::move(h)).first;
        }
        return it->second;
    }

    E2Cell e2(int p, int q);

private:
    Spectrum e_;
    const FieldPresentation& f_;
    std::map<Cell, GroupObject> e1_;
    std::map<Cell, GroupHom> d1_;
};

F2Matrix to_f2(const IntMatrix& m)
{
    F2Matrix out(m.rows(), m.cols());
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c)
            out.set(r, c, m(r, c) % 2 != 0);
    return out;
}

std::string join(const std::vector<std::string>& v, const std::string& sep)
{
    std::string s;
    for (const auto& x : v)
        s += (s.empty() ? "" : sep) + x;
    return s;
}

E2Cell PageCache::e2(int p, int q)
{
    E2Cell cell;
    cell.e1 = e1(p, q);
    cell.in = d1(p + 1, q - 1);
    cell.out = d1(p, q);
    const GroupObject& b = cell.e1;
    GroupObject& out = cell.e2;
    out.p = p;
    out.q = q;
    out.conditional = b.conditional || cell.in.source.conditional || cell.out.target.conditional;
    if (b.pure_mod2() && cell.in.source.pure_mod2() && cell.out.target.pure_mod2()) {
        F2Homology h = f2_homology(to_f2(cell.in.total()), to_f2(cell.out.total()));
        cell.reps = h.reps;
        if (h.dim > 0) {
            // generator index -> (component, basis index)
            std::vector<std::pair<std::size_t, std::size_t>> where;
            for (std::size_t c = 0; c < b.comps.size(); ++c)
                for (int k = 0; k < b.comps[c].dim; ++k)
                    where.emplace_back(c, static_cast<std::size_t>(k));
            Component comp;
            comp.kind = Component::Kind::F2;
            comp.dim = static_cast<int>(h.dim);
            comp.name = "E2";
            for (const auto& r : h.reps) {
                std::vector<std::string> parts;
                for (std::size_t i = 0; i < r.size(); ++i)
                    if (r.get(i))
                        parts.push_back(b.comps[where[i].first].labels[where[i].second]);
                comp.labels.push_back(join(parts, " + "));
            }
            const auto& lead = b.comps[where[static_cast<std::size_t>(h.reps.front().first())].first];
            comp.offset = lead.offset;
            comp.a = lead.a;
            comp.w = lead.w;
            out.comps.push_back(std::move(comp));
        }
    } else {
        FgAbGroup g = fgab_homology(cell.in.source.orders(), cell.in.total(), b.orders(), cell.out.total(),
                                    cell.out.target.orders());
        if (!g.trivial()) {
            Component comp;
            comp.kind = Component::Kind::Z;
            comp.coeff = Coeff::Z;
            comp.group = g;
            comp.name = "E2";
            out.comps.push_back(std::move(comp));
        }
    }
    for (const auto& c : b.comps)
        if (c.kind == Component::Kind::Div)
            out.comps.push_back(c);
    return cell;
}

void require_weight(const FieldPresentation& f, int qmax, const std::string& what)
{
    if (qmax + 1 > f.truncation)
        throw InputError(what + " up to weight " + std::to_string(qmax) + " needs weight " + std::to_string(qmax + 1) +
                         " data, beyond truncation " + std::to_string(f.truncation) + " of " + f.name);
}

std::string describe(int dim, const std::vector<std::string>& labels)
{
    if (dim == 0)
        return "0";
    return (dim == 1 ? std::string("F2") : "F2^" + std::to_string(dim)) + " {" + join(labels, ", ") + "}";
}

}  // namespace

E2Cell compute_e2(Spectrum e, const FieldPresentation& f, int p, int q)
{
    if (!has_differential(e))
        throw InputError("no differential defined for " + spectrum_name(e));
    PageCache cache(e, f);
    return cache.e2(p, q);
}

GroupObject e2_group(Spectrum e, const FieldPresentation& f, int p, int q) { return compute_e2(e, f, p, q).e2; }

PageRegion e2_region(Spectrum e, const FieldPresentation& f, const Window& w, const std::string& page)
{
    if (!has_differential(e))
        throw InputError("no differential defined for " + spectrum_name(e));
    PageRegion reg;
    reg.spectrum = e;
    reg.field = f.name;
    reg.page = page;
    reg.window = w;
    if (w.empty())
        return reg;
    require_weight(f, w.qmax, "E2");
    PageCache cache(e, f);
    for (int q = w.qmin; q <= w.qmax; ++q)
        for (int p = w.pmin; p <= w.pmax; ++p) {
            E2Cell c = cache.e2(p, q);
            std::string note;
            if (page == "inf" && e != Spectrum::KT && !c.e2.zero())
                note = "E2 (not E-infinity-certified)";
            if (c.e2.conditional)
                note += std::string(note.empty() ? "" : "; ") + "conditional on Beilinson-Soule vanishing";
            if (!note.empty())
                reg.notes[{p, q}] = note;
            reg.cells[{p, q}] = std::move(c.e2);
        }
    return reg;
}

CollapseReport check_collapse_kt(const FieldPresentation& f, const Window& w)
{
    require_weight(f, w.qmax, "KT collapse check");
    CollapseReport rep;
    rep.field = f.name;
    PageCache cache(Spectrum::KT, f);
    for (int q = w.qmin; q <= w.qmax; ++q)
        for (int p = w.pmin; p <= w.pmax; ++p) {
            const E2Cell c = cache.e2(p, q);
            std::vector<std::string> want;
            if (mod4(p) == 0)
                for (int i = 0; i < h_dim(f, q, q); ++i)
                    want.push_back(h_basis_label(f, q, q, static_cast<std::size_t>(i)));
            std::vector<std::string> got;
            int got_dim = 0;
            bool mod2 = true;
            for (const auto& comp : c.e2.comps) {
                if (comp.kind != Component::Kind::F2)
                    mod2 = false;
                got_dim += comp.dim;
                got.insert(got.end(), comp.labels.begin(), comp.labels.end());
            }
            const std::string expected = describe(static_cast<int>(want.size()), want);
            const std::string computed = mod2 ? describe(got_dim, got) : c.e2.str();
            ++rep.cells;
            if (expected != computed)
                rep.mismatches.push_back({p, q, expected, computed});
        }
    return rep;
}

SplitReport check_split_injective_kt(const FieldPresentation& f, const Window& w)
{
    require_weight(f, w.qmax, "split injectivity check");
    SplitReport rep;
    PageCache cache(Spectrum::KT, f);
    for (int q = std::max(w.qmin, 1); q <= w.qmax; ++q)
        for (int p = w.pmin; p <= w.pmax; ++p) {
            if (mod4(p) != 0)
                continue;
            // the entering d1 restricted to the summands h^{a,q-1} with a ≡ q (mod 4); it vanishes on the rest
            const GroupHom& d = cache.d1(p + 1, q - 1);
            const IntMatrix m = d.total();
            std::vector<std::size_t> alpha_cols;
            bool rest_zero = true;
            for (std::size_t c = 0; c < d.source.comps.size(); ++c) {
                const auto& comp = d.source.comps[c];
                const std::size_t start = d.source.gen_start(c);
                for (int k = 0; k < comp.dim; ++k) {
                    const std::size_t col = start + static_cast<std::size_t>(k);
                    if (mod4(comp.a - q) == 0) {
                        alpha_cols.push_back(col);
                        continue;
                    }
                    for (std::size_t r = 0; r < m.rows(); ++r)
                        if (m(r, col) % 2 != 0)
                            rest_zero = false;
                }
            }
            F2Matrix alpha(m.rows(), alpha_cols.size());
            for (std::size_t r = 0; r < m.rows(); ++r)
                for (std::size_t k = 0; k < alpha_cols.size(); ++k)
                    alpha.set(r, k, m(r, alpha_cols[k]) % 2 != 0);
            ++rep.checked;
            if (!rest_zero || f2_rank_kernel_image(alpha).rank != alpha_cols.size())
                rep.failures.push_back({p + 1, q - 1});
        }
    return rep;
}

WittReport graded_witt(const FieldPresentation& f, int qmax)
{
    require_weight(f, qmax, "graded Witt ring");
    WittReport rep;
    rep.field = f.name;
    rep.qmax = qmax;
    rep.note = "I^q/I^{q+1} = E2_{0,q}(KT) = E-infinity_{0,q}(KT) by collapse at E2";
    PageCache cache(Spectrum::KT, f);
    for (int q = 0; q <= qmax; ++q) {
        const E2Cell c = cache.e2(0, q);
        int d = 0;
        std::vector<std::string> labels;
        for (const auto& comp : c.e2.comps) {
            d += comp.dim;
            labels.insert(labels.end(), comp.labels.begin(), comp.labels.end());
        }
        rep.dims.push_back(d);
        rep.labels.push_back(labels);
    }
    return rep;
}

std::string KTFiltrationReport::str() const
{
    std::string s;
    for (const auto& [a, b] : groups)
        s += (s.empty() ? "" : " + ") + std::string("h^{") + std::to_string(a) + "," + std::to_string(b) + "}";
    if (s.empty())
        s = "0";
    if (tail)
        s = "0 -> " + s + " -> pi_{" + std::to_string(p) + ",0} f_" + std::to_string(q + 1) + "(KT) -> I^" +
            std::to_string(q + 1) + " -> 0 (split)";
    return s;
}

KTFiltrationReport kt_filtration_groups(const FieldPresentation& f, int p, int q)
{
    if (q < 0)
        throw InputError("negative weight " + std::to_string(q));
    KTFiltrationReport rep;
    rep.p = p;
    rep.q = q;
    const int r = mod4(p);
    rep.tail = r == 0;
    for (int a = q - (r == 0 ? 3 : r); a >= 0; a -= 4) {
        rep.groups.emplace_back(a, q);
        rep.dim += h_dim(f, a, q);
    }
    return rep;
}

CrosscheckReport kt_filtration_crosscheck(const FieldPresentation& f, const Window& w)
{
    require_weight(f, w.qmax, "KT filtration cross-check");
    CrosscheckReport rep;
    for (int q = w.qmin; q <= w.qmax; ++q)
        for (int p = w.pmin; p <= w.pmax; ++p) {
            const int r = mod4(p);
            if (r != 2 && r != 3)
                continue;
            const int s = e1_group(Spectrum::KT, f, p, q).f2_dim();
            const int left = kt_filtration_groups(f, p, q).dim;
            const int right = kt_filtration_groups(f, p - 1, q + 1).dim;
            ++rep.checked;
            if (s != left + right)
                rep.failures.push_back("(" + std::to_string(p) + "," + std::to_string(q) + "): dim s = " +
                                       std::to_string(s) + " but " + std::to_string(left) + " + " +
                                       std::to_string(right));
        }
    return rep;
}

std::vector<ColumnEntry> kq_e2_column(const FieldPresentation& f, int p, int qmax)
{
    if (p < 0 || p > 4)
        throw InputError("KQ columns are reported for p in 0..4");
    require_weight(f, qmax, "KQ column");
    PageCache cache(Spectrum::KQ, f);
    std::vector<ColumnEntry> out;
    for (int q = 0; q <= qmax; ++q)
        out.push_back({q, cache.e2(p, q).e2});
    return out;
}

KOReport ko_low_degree(const FieldPresentation& f, int qmax)
{
    if (qmax < 0)
        qmax = f.truncation - 1;
    if (qmax < 3)
        throw InputError("KO report needs weights up to 3");
    KOReport rep;
    rep.field = f.name;
    rep.qmax = qmax;
    rep.ko0 = kq_e2_column(f, 0, qmax);
    rep.ko1 = kq_e2_column(f, 1, qmax);
    rep.col2 = kq_e2_column(f, 2, qmax);
    const auto col3 = kq_e2_column(f, 3, qmax);
    rep.ko2 = rep.col2[2].e2;
    rep.ko3_sub = col3[3].e2;
    rep.ko3_quotient = col3[2].e2;
    return rep;
}

std::vector<std::string> KOReport::lines() const
{
    auto pieces = [](const std::vector<ColumnEntry>& col) {
        std::string s;
        for (const auto& c : col)
            if (!c.e2.zero())
                s += (s.empty() ? "" : ", ") + std::string("q=") + std::to_string(c.q) + ": " + c.e2.str() +
                     (c.e2.conditional ? " (conditional)" : "");
        return s.empty() ? std::string("0") : s;
    };
    std::vector<std::string> out;
    out.push_back("field " + field);
    out.push_back("KO0 filtration pieces: " + pieces(ko0));
    out.push_back("KO1 filtration pieces: " + pieces(ko1));
    out.push_back("KO2 = E2_{2,2} = " + ko2.str());
    std::string others;
    for (const auto& c : col2)
        if (c.q != 2 && !c.e2.zero())
            others += (others.empty() ? "" : ", ") + std::string("q=") + std::to_string(c.q) + ": " + c.e2.str();
    if (!others.empty())
        out.push_back("  other nonzero E2 cells in column 2: " + others);
    out.push_back("KO3 extension: 0 -> " + ko3_sub.str() + " -> KO3 -> " + ko3_quotient.str() + " -> 0 (unresolved)");
    out.push_back("entries are E2 (not E-infinity-certified) beyond the collapse arguments");
    return out;
}

}  // namespace slicess
