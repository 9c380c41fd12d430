#include "slicess/differentials.hpp"
#include "slicess/steenrod.hpp"

namespace slicess {

namespace {

// source generator k of a component, as a class in h^{a,w}
MotClass mod2_image(const FieldPresentation& f, const Component& c, std::size_t k)
{
    if (c.kind == Component::Kind::F2)
        return basis_class(f, c.a, c.w, k);
    MotClass x = zero_class(f, c.a, c.w);
    for (std::size_t r = 0; r < x.coords.size(); ++r)
        x.coords[r] = static_cast<std::uint8_t>(static_cast<int>(c.pr(r, k) % 2 != 0));
    return x;
}

// splits δ·(mod-2 part)·pr
OpWord mod2_part(const OpWord& op)
{
    OpWord out = op_zero();
    for (Word w : op.terms) {
        if (op.tgt == Coeff::Z) {
            if (w.empty() || w.front() != Letter::Delta)
                throw OpError("integral-target operation must start with δ: " + word_str(w));
            w.erase(w.begin());
        }
        if (op.src == Coeff::Z) {
            if (w.empty() || w.back() != Letter::Pr)
                throw OpError("integral-source operation must end with pr: " + word_str(w));
            w.pop_back();
        }
        out = op_sum(out, op_word(w));
    }
    return out;
}

}  // namespace

GroupHom d1_matrix(Spectrum e, const FieldPresentation& f, int p, int q)
{
    if (!has_differential(e))
        throw InputError("no differential defined for " + spectrum_name(e));
    GroupHom h;
    h.source = e1_group(e, f, p, q);
    h.target = e1_group(e, f, p - 1, q + 1);
    for (std::size_t si = 0; si < h.source.comps.size(); ++si) {
        const Component& sc = h.source.comps[si];
        if (sc.kind == Component::Kind::Div)
            continue;
        const SummandDesc sd{sc.coeff, q + sc.offset, q};
        for (const auto& entry : d1_symbolic(d1_case_for(e, q, sd))) {
            if (entry.op.is_zero())
                continue;
            const int ti = h.target.find(sc.offset + entry.shift, entry.op.tgt);
            if (ti < 0)
                continue;
            const Component& tc = h.target.comps[static_cast<std::size_t>(ti)];
            const OpWord normal = op_normalize(entry.op);
            const OpWord inner = mod2_part(normal);
            auto bideg = word_bidegree(*normal.terms.begin());
            if (normal.tgt == Coeff::Z)
                bideg.first -= 1;
            const std::size_t src_gens = sc.orders().size(), tgt_gens = tc.orders().size();
            GroupHom::Block b{si, static_cast<std::size_t>(ti), entry.op.str(), entry.kind, IntMatrix(tgt_gens, src_gens)};
            for (std::size_t k = 0; k < src_gens; ++k) {
                const MotClass x = mod2_image(f, sc, k);
                const MotClass y = eval_normal(f, inner, x, nullptr, bideg);
                if (normal.tgt == Coeff::Z2) {
                    if (y.p != tc.a || y.q != tc.w)
                        throw std::logic_error("d1 lands outside its target summand");
                    for (std::size_t r = 0; r < tgt_gens; ++r)
                        b.matrix(r, k) = y.coords[r];
                } else {
                    if (y.p + 1 != tc.a || y.q != tc.w)
                        throw std::logic_error("d1 lands outside its target summand");
                    IntClass z = bockstein(f, *tc.cell, y);
                    for (std::size_t r = 0; r < tgt_gens; ++r)
                        b.matrix(r, k) = z.coords[r];
                }
            }
            h.blocks.push_back(std::move(b));
        }
    }
    return h;
}

bool composite_vanishes(const IntMatrix& gf, const std::vector<BigInt>& target_orders)
{
    for (std::size_t r = 0; r < gf.rows(); ++r) {
        const BigInt& o = target_orders[r];
        for (std::size_t c = 0; c < gf.cols(); ++c) {
            const BigInt& v = gf(r, c);
            if (o == 0 ? v != 0 : v % o != 0)
                return false;
        }
    }
    return true;
}

PageRegion d1_region(Spectrum e, const FieldPresentation& f, const Window& w)
{
    PageRegion reg;
    reg.spectrum = e;
    reg.field = f.name;
    reg.page = "1";
    reg.window = w;
    if (w.empty())
        return reg;
    for (int q = w.qmin; q <= w.qmax; ++q)
        for (int p = w.pmin; p <= w.pmax; ++p)
            reg.cells[{p, q}] = e1_group(e, f, p, q);
    if (!has_differential(e))
        return reg;
    for (int q = w.qmin; q < w.qmax; ++q)
        for (int p = w.pmin + 1; p <= w.pmax; ++p)
            reg.homs[{p, q}] = d1_matrix(e, f, p, q);
    for (const auto& [cell, d] : reg.homs) {
        auto next = reg.homs.find({cell.first - 1, cell.second + 1});
        if (next == reg.homs.end())
            continue;
        const IntMatrix gf = next->second.total() * d.total();
        if (!composite_vanishes(gf, next->second.target.orders()))
            throw ConsistencyError("d1∘d1 != 0 for " + spectrum_name(e) + " over " + f.name + " from (" +
                                   std::to_string(cell.first) + "," + std::to_string(cell.second) + ")");
    }
    return reg;
}

}  // namespace slicess
