#include "slicess/slices.hpp"

#include <algorithm>

namespace slicess {

std::string spectrum_name(Spectrum e)
{
    switch (e) {
    case Spectrum::KT: return "KT";
    case Spectrum::KQ: return "KQ";
    case Spectrum::KGL: return "KGL";
    case Spectrum::KGL2: return "KGL2";
    case Spectrum::KGLhC2: return "KGLhC2";
    }
    return "?";
}

Spectrum parse_spectrum(const std::string& s)
{
    for (Spectrum e : {Spectrum::KT, Spectrum::KQ, Spectrum::KGL, Spectrum::KGL2, Spectrum::KGLhC2})
        if (spectrum_name(e) == s)
            return e;
    if (s == "KGL/2")
        return Spectrum::KGL2;
    throw InputError("unknown spectrum: " + s);
}

bool has_differential(Spectrum e) { return e == Spectrum::KT || e == Spectrum::KQ || e == Spectrum::KGL2; }

std::string SummandDesc::str() const
{
    return "Σ^{" + std::to_string(s) + "," + std::to_string(w) + "}" + (coeff == Coeff::Z ? "MZ" : "MZ/2");
}

namespace {

bool even(int n) { return n % 2 == 0; }

}  // namespace

std::vector<SummandDesc> slice_summands(Spectrum e, int q, int lo, int hi)
{
    std::vector<SummandDesc> out;
    auto add = [&](Coeff c, int off) {
        if (off >= lo && off <= hi)
            out.push_back({c, q + off, q});
    };
    for (int off = hi; off >= lo; --off) {
        switch (e) {
        case Spectrum::KT:
            if (even(off))
                add(Coeff::Z2, off);
            break;
        case Spectrum::KQ:
            if (even(q) && off == q)
                add(Coeff::Z, off);
            else if (even(off) && off < q)
                add(Coeff::Z2, off);
            break;
        case Spectrum::KGL:
            if (off == q)
                add(Coeff::Z, off);
            break;
        case Spectrum::KGL2:
            if (off == q)
                add(Coeff::Z2, off);
            break;
        case Spectrum::KGLhC2:
            if (even(q) && off == q)
                add(Coeff::Z, off);
            else if (off > q - 1 && (even(q) ? !even(off - q) : even(off - q)))
                add(Coeff::Z2, off);
            break;
        }
    }
    return out;
}

std::vector<SummandDesc> column_summands(Spectrum e, int q, int p)
{
    std::vector<SummandDesc> out;
    // integral summands sit at offset q; they reach every column p >= q
    const int lo = std::min(p - q, q);
    for (const auto& s : slice_summands(e, q, lo, p)) {
        if (s.coeff == Coeff::Z2 && s.offset() < p - q)
            continue;
        out.push_back(s);
    }
    return out;
}

std::vector<BigInt> Component::orders() const
{
    switch (kind) {
    case Kind::F2: return std::vector<BigInt>(static_cast<std::size_t>(dim), BigInt(2));
    case Kind::Z: return group.orders();
    case Kind::Div: return {};
    }
    return {};
}

std::string Component::value_str() const
{
    switch (kind) {
    case Kind::F2: return dim == 1 ? "F2" : "F2^" + std::to_string(dim);
    case Kind::Z: return group.str();
    case Kind::Div: return "D";
    }
    return "?";
}

std::vector<BigInt> GroupObject::orders() const
{
    std::vector<BigInt> out;
    for (const auto& c : comps) {
        auto o = c.orders();
        out.insert(out.end(), o.begin(), o.end());
    }
    return out;
}

std::size_t GroupObject::gen_start(std::size_t comp) const
{
    std::size_t n = 0;
    for (std::size_t i = 0; i < comp; ++i)
        n += comps[i].orders().size();
    return n;
}

int GroupObject::find(int offset, Coeff coeff) const
{
    for (std::size_t i = 0; i < comps.size(); ++i)
        if (comps[i].offset == offset && comps[i].coeff == coeff && comps[i].kind != Component::Kind::Div)
            return static_cast<int>(i);
    return -1;
}

bool GroupObject::pure_mod2() const
{
    return std::all_of(comps.begin(), comps.end(), [](const Component& c) { return c.kind == Component::Kind::F2; });
}

int GroupObject::f2_dim() const
{
    int d = 0;
    for (const auto& c : comps)
        if (c.kind == Component::Kind::F2)
            d += c.dim;
    return d;
}

std::string GroupObject::str() const
{
    if (comps.empty())
        return "0";
    // merge F2 pieces so that equal groups print equally whatever their origin
    int f2 = 0;
    std::vector<BigInt> orders;
    int div = 0;
    for (const auto& c : comps) {
        if (c.kind == Component::Kind::F2)
            f2 += c.dim;
        else if (c.kind == Component::Kind::Z) {
            auto o = c.group.orders();
            orders.insert(orders.end(), o.begin(), o.end());
        } else
            ++div;
    }
    for (int i = 0; i < f2; ++i)
        orders.push_back(2);
    std::string s;
    if (!orders.empty())
        s = FgAbGroup::from_orders(orders).str();
    if (div)
        s += (s.empty() ? "" : " + ") + std::string("D");
    return s.empty() ? "0" : s;
}

IntMatrix GroupHom::total() const
{
    IntMatrix m(target.generators(), source.generators());
    for (const auto& b : blocks) {
        const std::size_t r0 = target.gen_start(b.tgt_index), c0 = source.gen_start(b.src_index);
        for (std::size_t r = 0; r < b.matrix.rows(); ++r)
            for (std::size_t c = 0; c < b.matrix.cols(); ++c)
                m(r0 + r, c0 + c) += b.matrix(r, c);
    }
    return m;
}

namespace {

std::string cell_name(const char* h, int a, int w)
{
    return std::string(h) + "^{" + std::to_string(a) + "," + std::to_string(w) + "}";
}

}  // namespace

GroupObject e1_group(Spectrum e, const FieldPresentation& f, int p, int q)
{
    if (q < 0)
        throw InputError("negative weight " + std::to_string(q));
    GroupObject g;
    g.p = p;
    g.q = q;
    for (const auto& s : column_summands(e, q, p)) {
        const int a = s.s - p;
        if (s.coeff == Coeff::Z2) {
            const int d = h_dim(f, a, q);
            if (d == 0)
                continue;
            Component c;
            c.kind = Component::Kind::F2;
            c.coeff = Coeff::Z2;
            c.offset = s.offset();
            c.a = a;
            c.w = q;
            c.dim = d;
            for (int i = 0; i < d; ++i)
                c.labels.push_back(h_basis_label(f, a, q, static_cast<std::size_t>(i)));
            c.name = cell_name("h", a, q);
            g.comps.push_back(std::move(c));
            continue;
        }
        h_dim(f, a, q);  // enforces the truncation
        ResolvedCell cell = f.resolve_integral(a, q);
        if (cell.conditional())
            g.conditional = true;
        Component base;
        base.coeff = Coeff::Z;
        base.offset = s.offset();
        base.a = a;
        base.w = q;
        base.cell = cell;
        base.conditional = cell.conditional();
        base.name = cell_name("H", a, q);
        if (!cell.group.trivial()) {
            Component c = base;
            c.kind = Component::Kind::Z;
            c.group = cell.group;
            c.pr = cell.pr;
            g.comps.push_back(std::move(c));
        }
        if (cell.divisible) {
            Component c = base;
            c.kind = Component::Kind::Div;
            g.comps.push_back(std::move(c));
        }
    }
    return g;
}

}  // namespace slicess
