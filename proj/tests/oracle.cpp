#include "oracle.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace oracle {

FiniteField::FiniteField(int q) : q_(q)
{
    for (int p = 2; p <= q; ++p) {
        int n = q, d = 0;
        while (n % p == 0) {
            n /= p;
            ++d;
        }
        if (d > 0) {
            if (n != 1 || p == 2 || d > 2)
                throw std::invalid_argument("unsupported field order");
            p_ = p;
            deg_ = d;
            break;
        }
    }
    if (deg_ == 2)
        for (int c = 2; c < p_; ++c) {
            bool square = false;
            for (int y = 1; y < p_; ++y)
                square = square || (y * y) % p_ == c;
            if (!square) {
                nr_ = c;
                break;
            }
        }
}

int FiniteField::add(int x, int y) const
{
    const int a = (x % p_ + y % p_) % p_, b = (x / p_ + y / p_) % p_;
    return a + p_ * b;
}

int FiniteField::neg(int x) const
{
    return (p_ - x % p_) % p_ + p_ * ((p_ - x / p_) % p_);
}

int FiniteField::mul(int x, int y) const
{
    const int a = x % p_, b = x / p_, c = y % p_, d = y / p_;
    const int re = (a * c + nr_ * b * d) % p_, im = (a * d + b * c) % p_;
    return re + p_ * im;
}

int FiniteField::inv(int x) const
{
    for (int y = 1; y < q_; ++y)
        if (mul(x, y) == 1)
            return y;
    throw std::domain_error("zero has no inverse");
}

int FiniteField::from_int(long long n) const
{
    return static_cast<int>(((n % p_) + p_) % p_);
}

bool FiniteField::is_square(int x) const
{
    for (int y = 0; y < q_; ++y)
        if (mul(y, y) == x)
            return true;
    return false;
}

namespace {

using Gram = std::vector<std::vector<int>>;

int form_value(const FiniteField& F, const Gram& g, const std::vector<int>& x, const std::vector<int>& y)
{
    int s = 0;
    for (std::size_t i = 0; i < g.size(); ++i)
        for (std::size_t j = 0; j < g.size(); ++j)
            s = F.add(s, F.mul(x[i], F.mul(g[i][j], y[j])));
    return s;
}

// next vector of F^n in counting order; false after the last
bool next_vector(std::vector<int>& v, int q)
{
    for (int& c : v) {
        if (++c < q)
            return true;
        c = 0;
    }
    return false;
}

// basis of {x : rows . x = 0} by Gaussian elimination over F
std::vector<std::vector<int>> nullspace(const FiniteField& F, std::vector<std::vector<int>> rows, std::size_t n)
{
    std::vector<int> pivot_col;
    std::size_t r = 0;
    for (std::size_t c = 0; c < n && r < rows.size(); ++c) {
        std::size_t k = r;
        while (k < rows.size() && rows[k][c] == 0)
            ++k;
        if (k == rows.size())
            continue;
        std::swap(rows[r], rows[k]);
        const int iv = F.inv(rows[r][c]);
        for (auto& e : rows[r])
            e = F.mul(e, iv);
        for (std::size_t o = 0; o < rows.size(); ++o)
            if (o != r && rows[o][c] != 0) {
                const int f = rows[o][c];
                for (std::size_t j = 0; j < n; ++j)
                    rows[o][j] = F.sub(rows[o][j], F.mul(f, rows[r][j]));
            }
        pivot_col.push_back(static_cast<int>(c));
        ++r;
    }
    std::vector<std::vector<int>> basis;
    for (std::size_t c = 0; c < n; ++c) {
        if (std::find(pivot_col.begin(), pivot_col.end(), static_cast<int>(c)) != pivot_col.end())
            continue;
        std::vector<int> v(n, 0);
        v[c] = 1;
        for (std::size_t i = 0; i < pivot_col.size(); ++i)
            v[static_cast<std::size_t>(pivot_col[i])] = F.neg(rows[i][c]);
        basis.push_back(v);
    }
    return basis;
}

Gram anisotropic_part(const FiniteField& F, Gram g)
{
    for (;;) {
        const std::size_t n = g.size();
        if (n == 0)
            return g;
        std::vector<int> v(n, 0), iso;
        while (next_vector(v, F.order()))
            if (form_value(F, g, v, v) == 0) {
                iso = v;
                break;
            }
        if (iso.empty())
            return g;
        std::vector<int> w;
        for (std::size_t i = 0; i < n && w.empty(); ++i) {
            std::vector<int> e(n, 0);
            e[i] = 1;
            if (form_value(F, g, iso, e) != 0)
                w = e;
        }
        if (w.empty())
            throw std::logic_error("degenerate form");
        std::vector<std::vector<int>> eqs(2, std::vector<int>(n, 0));
        for (std::size_t j = 0; j < n; ++j) {
            std::vector<int> e(n, 0);
            e[j] = 1;
            eqs[0][j] = form_value(F, g, iso, e);
            eqs[1][j] = form_value(F, g, w, e);
        }
        const auto basis = nullspace(F, eqs, n);
        Gram h(basis.size(), std::vector<int>(basis.size(), 0));
        for (std::size_t i = 0; i < basis.size(); ++i)
            for (std::size_t j = 0; j < basis.size(); ++j)
                h[i][j] = form_value(F, g, basis[i], basis[j]);
        g = h;
    }
}

bool isometric(const FiniteField& F, const Gram& a, const Gram& b)
{
    const std::size_t n = a.size();
    if (n != b.size())
        return false;
    if (n == 0)
        return true;
    if (n > 2)
        throw std::logic_error("anisotropic form of dimension above 2 over a finite field");
    std::vector<int> m(n * n, 0);
    while (next_vector(m, F.order())) {
        bool ok = true;
        for (std::size_t i = 0; i < n && ok; ++i)
            for (std::size_t j = 0; j < n && ok; ++j) {
                int s = 0;
                for (std::size_t k = 0; k < n; ++k)
                    for (std::size_t l = 0; l < n; ++l)
                        s = F.add(s, F.mul(m[k * n + i], F.mul(a[k][l], m[l * n + j])));
                ok = s == b[i][j];
            }
        if (ok)
            return true;  // b nondegenerate forces m invertible
    }
    return false;
}

Gram orth_sum(const Gram& a, const Gram& b)
{
    Gram g(a.size() + b.size(), std::vector<int>(a.size() + b.size(), 0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a.size(); ++j)
            g[i][j] = a[i][j];
    for (std::size_t i = 0; i < b.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            g[a.size() + i][a.size() + j] = b[i][j];
    return g;
}

Gram tensor(const FiniteField& F, const Gram& a, const Gram& b)
{
    const std::size_t n = a.size() * b.size();
    Gram g(n, std::vector<int>(n, 0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a.size(); ++j)
            for (std::size_t k = 0; k < b.size(); ++k)
                for (std::size_t l = 0; l < b.size(); ++l)
                    g[i * b.size() + k][j * b.size() + l] = F.mul(a[i][j], b[k][l]);
    return g;
}

struct ClassTable {
    const FiniteField& F;
    std::vector<Gram> reps;

    int classify(const Gram& g)
    {
        const Gram an = anisotropic_part(F, g);
        for (std::size_t i = 0; i < reps.size(); ++i)
            if (isometric(F, reps[i], an))
                return static_cast<int>(i);
        reps.push_back(an);
        return static_cast<int>(reps.size() - 1);
    }
};

}  // namespace

WittOracle witt_ring(int q, int qmax)
{
    const FiniteField F(q);
    ClassTable table{F, {}};
    table.classify({});
    for (int a = 1; a < q; ++a)
        table.classify({{a}});
    for (std::size_t known = 0; known != table.reps.size();) {
        known = table.reps.size();
        for (std::size_t i = 0; i < known; ++i)
            for (std::size_t j = 0; j < known; ++j)
                table.classify(orth_sum(table.reps[i], table.reps[j]));
    }
    WittOracle out;
    out.classes = static_cast<int>(table.reps.size());
    std::vector<int> ideal;
    for (std::size_t i = 0; i < table.reps.size(); ++i)
        if (table.reps[i].size() % 2 == 0)
            ideal.push_back(static_cast<int>(i));
    out.ideal_power_sizes.push_back(out.classes);
    std::vector<int> products = ideal;  // q-fold products of elements of I
    for (int k = 1; k <= qmax + 1; ++k) {
        std::vector<int> span = {table.classify({})};
        for (int p : products)
            if (std::find(span.begin(), span.end(), p) == span.end())
                span.push_back(p);
        for (bool grew = true; grew;) {
            grew = false;
            const std::vector<int> cur = span;
            for (int x : cur)
                for (int y : cur) {
                    const int z = table.classify(orth_sum(table.reps[static_cast<std::size_t>(x)],
                                                          table.reps[static_cast<std::size_t>(y)]));
                    if (std::find(span.begin(), span.end(), z) == span.end()) {
                        span.push_back(z);
                        grew = true;
                    }
                }
        }
        out.ideal_power_sizes.push_back(static_cast<int>(span.size()));
        std::vector<int> next;
        for (int x : products)
            for (int y : ideal) {
                const int z = table.classify(tensor(F, table.reps[static_cast<std::size_t>(x)],
                                                    table.reps[static_cast<std::size_t>(y)]));
                if (std::find(next.begin(), next.end(), z) == next.end())
                    next.push_back(z);
            }
        products = next;
    }
    if (static_cast<int>(table.reps.size()) != out.classes)
        throw std::logic_error("Witt classes not closed under addition");
    return out;
}

bool minus_one_is_square_mod(int p)
{
    for (int y = 1; y < p; ++y)
        if ((y * y) % p == p - 1)
            return true;
    return false;
}

int hilbert_symbol(int p, int a_pi, int a_u, int b_pi, int b_u)
{
    int u = 2;
    while (true) {
        bool square = false;
        for (int y = 1; y < p; ++y)
            square = square || (y * y) % p == u;
        if (!square)
            break;
        ++u;
    }
    const long long m = static_cast<long long>(p) * p * p;
    auto make = [&](int pi, int un) {
        long long v = 1;
        for (int i = 0; i < pi; ++i)
            v *= p;
        for (int i = 0; i < un; ++i)
            v = v * u % m;
        return v % m;
    };
    const long long a = make(a_pi, a_u), b = make(b_pi, b_u);
    // residue -> 0 not a square, 1 square of a non-unit only, 2 square of a unit
    std::vector<int> square_kind(static_cast<std::size_t>(m), 0);
    for (long long z = 0; z < m; ++z) {
        auto& k = square_kind[static_cast<std::size_t>(z * z % m)];
        k = std::max(k, z % p != 0 ? 2 : 1);
    }
    for (long long x = 0; x < m; ++x)
        for (long long y = 0; y < m; ++y) {
            const long long r = (a * (x * x % m) + b * (y * y % m)) % m;
            const int k = square_kind[static_cast<std::size_t>(r)];
            const bool unit_xy = x % p != 0 || y % p != 0;
            if (k == 2 || (k == 1 && unit_xy))
                return 1;
        }
    return -1;
}

std::size_t f2_rank(std::vector<std::vector<int>> rows)
{
    std::size_t rank = 0;
    const std::size_t cols = rows.empty() ? 0 : rows[0].size();
    for (std::size_t c = 0; c < cols; ++c) {
        std::size_t k = rank;
        while (k < rows.size() && (rows[k][c] & 1) == 0)
            ++k;
        if (k == rows.size())
            continue;
        std::swap(rows[rank], rows[k]);
        for (std::size_t o = 0; o < rows.size(); ++o)
            if (o != rank && (rows[o][c] & 1))
                for (std::size_t j = 0; j < cols; ++j)
                    rows[o][j] ^= rows[rank][j] & 1;
        ++rank;
    }
    return rank;
}

namespace {

Int determinant(const std::vector<std::vector<Int>>& a)
{
    const std::size_t n = a.size();
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    Int det = 0;
    do {
        int inversions = 0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                inversions += perm[i] > perm[j] ? 1 : 0;
        Int term = inversions % 2 ? -1 : 1;
        for (std::size_t i = 0; i < n && term != 0; ++i)
            term *= a[i][perm[i]];
        det += term;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return det;
}

void subsets(std::size_t n, std::size_t k, std::size_t start, std::vector<std::size_t>& cur,
             std::vector<std::vector<std::size_t>>& out)
{
    if (cur.size() == k) {
        out.push_back(cur);
        return;
    }
    for (std::size_t i = start; i < n; ++i) {
        cur.push_back(i);
        subsets(n, k, i + 1, cur, out);
        cur.pop_back();
    }
}

}  // namespace

std::vector<Int> invariant_factors(const std::vector<std::vector<long long>>& m)
{
    const std::size_t rows = m.size(), cols = rows ? m[0].size() : 0;
    std::vector<Int> out;
    Int prev = 1;
    for (std::size_t k = 1; k <= std::min(rows, cols); ++k) {
        std::vector<std::vector<std::size_t>> rs, cs;
        std::vector<std::size_t> cur;
        subsets(rows, k, 0, cur, rs);
        subsets(cols, k, 0, cur, cs);
        Int g = 0;
        for (const auto& r : rs)
            for (const auto& c : cs) {
                std::vector<std::vector<Int>> sub(k, std::vector<Int>(k));
                for (std::size_t i = 0; i < k; ++i)
                    for (std::size_t j = 0; j < k; ++j)
                        sub[i][j] = m[r[i]][c[j]];
                g = boost::multiprecision::gcd(g, abs(determinant(sub)));
            }
        if (g == 0)
            break;
        out.push_back(g / prev);
        prev = g;
    }
    return out;
}

std::vector<std::vector<long long>> enumerate_group(const std::vector<long long>& cyclic_orders)
{
    std::vector<std::vector<long long>> out;
    std::vector<long long> x(cyclic_orders.size(), 0);
    for (;;) {
        out.push_back(x);
        std::size_t i = 0;
        while (i < x.size() && ++x[i] == cyclic_orders[i])
            x[i++] = 0;
        if (i == x.size())
            break;
    }
    return out;
}

long long element_order(const std::vector<long long>& x, const std::vector<long long>& cyclic_orders)
{
    long long o = 1;
    for (std::size_t i = 0; i < x.size(); ++i)
        o = std::lcm(o, cyclic_orders[i] / std::gcd(x[i], cyclic_orders[i]));
    return o;
}

std::vector<Int> invariants_from_element_orders(const std::vector<long long>& element_orders)
{
    const long long n = static_cast<long long>(element_orders.size());
    std::map<long long, std::vector<long long>> parts;  // prime -> partition of exponents, descending
    long long rest = n;
    for (long long l = 2; l <= rest; ++l) {
        if (rest % l != 0)
            continue;
        while (rest % l == 0)
            rest /= l;
        // c_j = #{x : order(x) divides l^j}
        std::vector<long long> c = {1};
        for (long long lj = l;; lj *= l) {
            long long cnt = 0;
            for (long long o : element_orders)
                cnt += lj % o == 0 ? 1 : 0;
            if (cnt == c.back())
                break;
            c.push_back(cnt);
        }
        // number of cyclic l-parts of exponent >= j is log_l(c_j / c_{j-1})
        std::vector<long long> at_least;
        for (std::size_t j = 1; j < c.size(); ++j) {
            long long ratio = c[j] / c[j - 1], e = 0;
            while (ratio > 1) {
                ratio /= l;
                ++e;
            }
            at_least.push_back(e);
        }
        std::vector<long long> exps(static_cast<std::size_t>(at_least.empty() ? 0 : at_least[0]), 0);
        for (std::size_t j = 0; j < at_least.size(); ++j)
            for (long long k = 0; k < at_least[j]; ++k)
                ++exps[static_cast<std::size_t>(k)];
        parts[l] = exps;
    }
    std::size_t len = 0;
    for (const auto& [l, e] : parts)
        len = std::max(len, e.size());
    std::vector<Int> out(len, 1);
    for (const auto& [l, e] : parts)
        for (std::size_t k = 0; k < e.size(); ++k)
            for (long long t = 0; t < e[k]; ++t)
                out[k] *= l;
    std::reverse(out.begin(), out.end());
    return out;
}

}  // namespace oracle
