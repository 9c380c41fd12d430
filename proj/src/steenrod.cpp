#include "slicess/steenrod.hpp"

namespace slicess {

namespace {

// ρ^k c placed at bidegree (p+k, qt)
MotClass rho_power_shift(const FieldPresentation& f, const MotClass& x, int k, int qt)
{
    MotClass c{x.p, x.p, x.coords};
    MotClass r = rho_class(f);
    for (int i = 0; i < k; ++i)
        c = cup(f, r, c);
    MotClass out = zero_class(f, x.p + k, qt);
    if (!out.coords.empty())
        out.coords = c.coords;
    return out;
}

bool live(const MotClass& x) { return x.p >= 0 && x.p <= x.q && !x.is_zero(); }

}  // namespace

MotClass sq1(const FieldPresentation& f, const MotClass& x)
{
    const int n = x.q - x.p;
    if (!live(x) || n % 2 == 0)
        return zero_class(f, x.p + 1, x.q);
    return rho_power_shift(f, x, 1, x.q);
}

MotClass sq2(const FieldPresentation& f, const MotClass& x)
{
    const int n = x.q - x.p;
    if (!live(x) || (n % 4 != 2 && n % 4 != 3))
        return zero_class(f, x.p + 2, x.q + 1);
    return rho_power_shift(f, x, 2, x.q + 1);
}

MotClass sq3(const FieldPresentation& f, const MotClass& x)
{
    const int n = x.q - x.p;
    if (!live(x) || n % 4 != 2)
        return zero_class(f, x.p + 3, x.q + 1);
    return rho_power_shift(f, x, 3, x.q + 1);
}

MotClass sq2sq1(const FieldPresentation& f, const MotClass& x)
{
    const int n = x.q - x.p;
    if (!live(x) || n % 4 != 3)
        return zero_class(f, x.p + 3, x.q + 1);
    return rho_power_shift(f, x, 3, x.q + 1);
}

MotClass sq3sq1(const FieldPresentation& f, const MotClass& x)
{
    const int n = x.q - x.p;
    if (!live(x) || n % 4 != 3)
        return zero_class(f, x.p + 4, x.q + 1);
    return rho_power_shift(f, x, 4, x.q + 1);
}

MotClass tau_times(const FieldPresentation& f, const MotClass& x) { return cup(f, tau_class(f), x); }

MotClass rho_times(const FieldPresentation& f, const MotClass& x) { return cup(f, rho_class(f), x); }

MotClass reduce_mod2(const FieldPresentation& f, const ResolvedCell& cell, const IntClass& x)
{
    MotClass out = zero_class(f, cell.p, cell.q);
    if (x.coords.size() != cell.pr.cols())
        throw std::logic_error("reduce_mod2: coordinate length mismatch");
    for (std::size_t r = 0; r < out.coords.size(); ++r) {
        BigInt s = 0;
        for (std::size_t c = 0; c < x.coords.size(); ++c)
            s += cell.pr(r, c) * x.coords[c];
        out.coords[r] = static_cast<std::uint8_t>(static_cast<int>(s % 2 != 0));
    }
    return out;
}

IntClass bockstein(const FieldPresentation& f, const ResolvedCell& target, const MotClass& x)
{
    if (target.p != x.p + 1 || target.q != x.q)
        throw std::logic_error("bockstein: target cell has the wrong bidegree");
    const std::size_t gens = target.group.generators();
    IntClass out{target.p, target.q, std::vector<BigInt>(gens)};
    if (x.is_zero() || gens == 0) {
        if (gens == 0 && !sq1(f, x).is_zero())
            throw InputError("inconsistent integral data: Sq1 nonzero into H^{" + std::to_string(target.p) + "," +
                             std::to_string(target.q) + "} without 2-torsion");
        return out;
    }
    if (target.delta) {
        std::vector<BigInt> xv(x.coords.begin(), x.coords.end());
        out.coords = target.delta->apply(xv);
        return out;
    }
    // lift Sq1 x through pr restricted to the 2-torsion subgroup
    const auto orders = target.group.orders();
    std::vector<std::size_t> two;
    for (std::size_t i = 0; i < orders.size(); ++i)
        if (orders[i] != 0 && orders[i] % 2 == 0)
            two.push_back(i);
    const MotClass s = sq1(f, x);
    const std::size_t hd = s.coords.size();
    F2Matrix prt(hd, two.size());
    for (std::size_t k = 0; k < two.size(); ++k) {
        const BigInt half = orders[two[k]] / 2;
        for (std::size_t r = 0; r < hd; ++r)
            prt.set(r, k, (half * target.pr(r, two[k])) % 2 != 0);
    }
    const auto rk = f2_rank_kernel_image(prt);
    const std::string where = "H^{" + std::to_string(target.p) + "," + std::to_string(target.q) + "}";
    if (two.empty()) {
        if (!s.is_zero())
            throw InputError("inconsistent integral data: Sq1 nonzero into " + where + " without 2-torsion");
        return out;
    }
    if (rk.rank != two.size())
        throw InputError("delta data required for " + where);
    // solve prt * c = s by brute elimination on the augmented system
    F2Matrix aug(hd, two.size() + 1);
    for (std::size_t r = 0; r < hd; ++r) {
        for (std::size_t k = 0; k < two.size(); ++k)
            aug.set(r, k, prt.get(r, k));
        aug.set(r, two.size(), s.coords[r] & 1);
    }
    const auto ra = f2_rank_kernel_image(aug);
    if (ra.rank != rk.rank)
        throw InputError("inconsistent integral data: Sq1 value not in pr of the 2-torsion of " + where);
    // kernel vector with last coordinate 1 gives the solution
    for (const auto& kv : ra.kernel)
        if (kv.get(two.size())) {
            for (std::size_t k = 0; k < two.size(); ++k)
                if (kv.get(k))
                    out.coords[two[k]] = orders[two[k]] / 2;
            return out;
        }
    throw std::logic_error("bockstein: no solution despite rank agreement");
}

}  // namespace slicess
