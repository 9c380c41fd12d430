#include "slicess/linalg.hpp"

#include <algorithm>
#include <bit>
#include <sstream>
#include <stdexcept>

namespace slicess {

BitVec& BitVec::operator^=(const BitVec& o)
{
    if (o.n_ != n_)
        throw std::invalid_argument("BitVec xor: length mismatch");
    for (std::size_t i = 0; i < w_.size(); ++i)
        w_[i] ^= o.w_[i];
    return *this;
}

bool BitVec::any() const
{
    return std::any_of(w_.begin(), w_.end(), [](std::uint64_t x) { return x != 0; });
}

std::size_t BitVec::popcount() const
{
    std::size_t c = 0;
    for (auto x : w_)
        c += static_cast<std::size_t>(std::popcount(x));
    return c;
}

std::size_t BitVec::first() const
{
    for (std::size_t i = 0; i < w_.size(); ++i)
        if (w_[i])
            return i * 64 + static_cast<std::size_t>(std::countr_zero(w_[i]));
    return n_;
}

std::size_t BitVec::last() const
{
    for (std::size_t i = w_.size(); i-- > 0;)
        if (w_[i])
            return i * 64 + 63 - static_cast<std::size_t>(std::countl_zero(w_[i]));
    return n_;
}

bool BitVec::operator<(const BitVec& o) const
{
    if (n_ != o.n_)
        return n_ < o.n_;
    for (std::size_t i = 0; i < n_; ++i)
        if (get(i) != o.get(i))
            return o.get(i);
    return false;
}

std::string BitVec::str() const
{
    std::string s;
    for (std::size_t i = 0; i < n_; ++i)
        s += get(i) ? '1' : '0';
    return s;
}

BitVec BitVec::from_bits(const std::vector<int>& bits)
{
    BitVec v(bits.size());
    for (std::size_t i = 0; i < bits.size(); ++i)
        v.set(i, bits[i] & 1);
    return v;
}

F2Matrix::F2Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows, BitVec(cols)) {}

F2Matrix F2Matrix::identity(std::size_t n)
{
    F2Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m.set(i, i);
    return m;
}

F2Matrix F2Matrix::from_rows(const std::vector<std::vector<int>>& rows, std::size_t cols)
{
    F2Matrix m(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != cols)
            throw std::invalid_argument("F2Matrix::from_rows: ragged input");
        for (std::size_t c = 0; c < cols; ++c)
            m.set(r, c, rows[r][c] & 1);
    }
    return m;
}

BitVec F2Matrix::apply(const BitVec& x) const
{
    if (x.size() != cols_)
        throw std::invalid_argument("F2Matrix::apply: dimension mismatch");
    BitVec y(rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        BitVec t = data_[r];
        // parity of the AND
        std::size_t c = 0;
        for (std::size_t i = 0; i < cols_; ++i)
            if (t.get(i) && x.get(i))
                ++c;
        y.set(r, c & 1);
    }
    return y;
}

F2Matrix F2Matrix::operator*(const F2Matrix& o) const
{
    if (cols_ != o.rows_)
        throw std::invalid_argument("F2Matrix product: shape mismatch");
    F2Matrix p(rows_, o.cols_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t k = 0; k < cols_; ++k)
            if (get(r, k))
                p.data_[r] ^= o.data_[k];
    return p;
}

F2Matrix F2Matrix::transpose() const
{
    F2Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            if (get(r, c))
                t.set(c, r);
    return t;
}

bool F2Matrix::is_zero() const
{
    return std::none_of(data_.begin(), data_.end(), [](const BitVec& v) { return v.any(); });
}

namespace {

// Fully reduced row echelon form with leftmost pivots; returns pivot columns.
std::vector<std::size_t> rref(std::vector<BitVec>& rows)
{
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    const std::size_t n = rows.empty() ? 0 : rows[0].size();
    for (std::size_t c = 0; c < n && r < rows.size(); ++c) {
        std::size_t sel = r;
        while (sel < rows.size() && !rows[sel].get(c))
            ++sel;
        if (sel == rows.size())
            continue;
        std::swap(rows[r], rows[sel]);
        for (std::size_t i = 0; i < rows.size(); ++i)
            if (i != r && rows[i].get(c))
                rows[i] ^= rows[r];
        pivots.push_back(c);
        ++r;
    }
    rows.resize(r);
    return pivots;
}

// Echelon basis where each vector owns its last set bit, fully reduced.
std::vector<BitVec> trailing_echelon(std::vector<BitVec> rows)
{
    std::vector<BitVec> basis;
    for (auto& v : rows) {
        for (const auto& b : basis)
            if (v.get(b.last()))
                v ^= b;
        if (!v.any())
            continue;
        const std::size_t piv = v.last();
        for (auto& b : basis)
            if (b.get(piv))
                b ^= v;
        basis.push_back(v);
    }
    std::sort(basis.begin(), basis.end(), [](const BitVec& a, const BitVec& b) { return a.last() < b.last(); });
    return basis;
}

}  // namespace

F2RankResult f2_rank_kernel_image(const F2Matrix& m)
{
    F2RankResult res;
    std::vector<BitVec> rows;
    for (std::size_t r = 0; r < m.rows(); ++r)
        rows.push_back(m.row(r));
    std::vector<std::size_t> piv = m.cols() ? rref(rows) : std::vector<std::size_t>{};
    res.rank = piv.size();

    std::vector<bool> is_piv(m.cols(), false);
    for (auto p : piv)
        is_piv[p] = true;
    for (std::size_t f = 0; f < m.cols(); ++f) {
        if (is_piv[f])
            continue;
        BitVec k(m.cols());
        k.set(f);
        for (std::size_t i = 0; i < piv.size(); ++i)
            if (rows[i].get(f))
                k.set(piv[i]);
        res.kernel.push_back(k);
    }

    std::vector<BitVec> cols;
    F2Matrix t = m.transpose();
    for (std::size_t c = 0; c < t.rows(); ++c)
        cols.push_back(t.row(c));
    if (m.rows())
        rref(cols);
    else
        cols.clear();
    res.image = cols;
    return res;
}

F2Homology f2_homology(const F2Matrix& f, const F2Matrix& g)
{
    if (g.cols() != f.rows())
        throw std::invalid_argument("f2_homology: maps are not composable");
    if (!(g * f).is_zero())
        throw std::logic_error("f2_homology: g*f != 0");
    const auto kf = f2_rank_kernel_image(f);
    const auto kg = f2_rank_kernel_image(g);
    const auto img = trailing_echelon(kf.image);

    std::vector<BitVec> rem;
    for (BitVec v : kg.kernel) {
        for (const auto& b : img)
            if (v.get(b.last()))
                v ^= b;
        if (v.any())
            rem.push_back(v);
    }
    F2Homology h;
    if (!rem.empty())
        rref(rem);
    h.reps = rem;
    h.dim = rem.size();
    if (h.dim != kg.kernel.size() - kf.rank)
        throw std::logic_error("f2_homology: dimension bookkeeping failed");
    return h;
}

IntMatrix IntMatrix::identity(std::size_t n)
{
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<long long>>& rows, std::size_t cols)
{
    IntMatrix m(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != cols)
            throw std::invalid_argument("IntMatrix::from_rows: ragged input");
        for (std::size_t c = 0; c < cols; ++c)
            m(r, c) = rows[r][c];
    }
    return m;
}

IntMatrix IntMatrix::diag(const std::vector<BigInt>& d)
{
    IntMatrix m(d.size(), d.size());
    for (std::size_t i = 0; i < d.size(); ++i)
        m(i, i) = d[i];
    return m;
}

IntMatrix IntMatrix::operator*(const IntMatrix& o) const
{
    if (cols_ != o.rows_)
        throw std::invalid_argument("IntMatrix product: shape mismatch");
    IntMatrix p(rows_, o.cols_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t k = 0; k < cols_; ++k) {
            const BigInt& a = (*this)(r, k);
            if (a == 0)
                continue;
            for (std::size_t c = 0; c < o.cols_; ++c)
                p(r, c) += a * o(k, c);
        }
    return p;
}

bool IntMatrix::is_zero() const
{
    return std::all_of(e_.begin(), e_.end(), [](const BigInt& x) { return x == 0; });
}

std::vector<BigInt> IntMatrix::apply(const std::vector<BigInt>& x) const
{
    if (x.size() != cols_)
        throw std::invalid_argument("IntMatrix::apply: dimension mismatch");
    std::vector<BigInt> y(rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            y[r] += (*this)(r, c) * x[c];
    return y;
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b)
{
    if (a == b)
        return;
    for (std::size_t c = 0; c < cols_; ++c)
        std::swap((*this)(a, c), (*this)(b, c));
}

void IntMatrix::swap_cols(std::size_t a, std::size_t b)
{
    if (a == b)
        return;
    for (std::size_t r = 0; r < rows_; ++r)
        std::swap((*this)(r, a), (*this)(r, b));
}

void IntMatrix::add_row(std::size_t a, std::size_t b, const BigInt& k)
{
    if (k == 0)
        return;
    for (std::size_t c = 0; c < cols_; ++c)
        (*this)(a, c) += k * (*this)(b, c);
}

void IntMatrix::add_col(std::size_t a, std::size_t b, const BigInt& k)
{
    if (k == 0)
        return;
    for (std::size_t r = 0; r < rows_; ++r)
        (*this)(r, a) += k * (*this)(r, b);
}

void IntMatrix::negate_row(std::size_t a)
{
    for (std::size_t c = 0; c < cols_; ++c)
        (*this)(a, c) = -(*this)(a, c);
}

std::string IntMatrix::str() const
{
    std::ostringstream os;
    os << '[';
    for (std::size_t r = 0; r < rows_; ++r) {
        os << (r ? ",[" : "[");
        for (std::size_t c = 0; c < cols_; ++c)
            os << (c ? "," : "") << (*this)(r, c);
        os << ']';
    }
    os << ']';
    return os.str();
}

namespace {

BigInt floor_div(const BigInt& a, const BigInt& b)
{
    BigInt q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0)))
        --q;
    return q;
}

}  // namespace

SmithForm smith_normal_form(const IntMatrix& m)
{
    const std::size_t R = m.rows(), C = m.cols();
    SmithForm s{IntMatrix::identity(R), m, IntMatrix::identity(C), 0};
    IntMatrix& D = s.D;
    std::size_t t = 0;
    while (t < R && t < C) {
        // smallest nonzero entry in the trailing block becomes the pivot
        bool found = false;
        std::size_t pr = t, pc = t;
        BigInt best;
        for (std::size_t r = t; r < R; ++r)
            for (std::size_t c = t; c < C; ++c) {
                if (D(r, c) == 0)
                    continue;
                BigInt a = abs(D(r, c));
                if (!found || a < best) {
                    found = true;
                    best = a;
                    pr = r;
                    pc = c;
                }
            }
        if (!found)
            break;
        D.swap_rows(t, pr);
        s.U.swap_rows(t, pr);
        D.swap_cols(t, pc);
        s.V.swap_cols(t, pc);

        bool dirty = false;
        for (std::size_t r = t + 1; r < R; ++r) {
            if (D(r, t) == 0)
                continue;
            BigInt q = floor_div(D(r, t), D(t, t));
            D.add_row(r, t, -q);
            s.U.add_row(r, t, -q);
            if (D(r, t) != 0)
                dirty = true;
        }
        for (std::size_t c = t + 1; c < C; ++c) {
            if (D(t, c) == 0)
                continue;
            BigInt q = floor_div(D(t, c), D(t, t));
            D.add_col(c, t, -q);
            s.V.add_col(c, t, -q);
            if (D(t, c) != 0)
                dirty = true;
        }
        if (dirty)
            continue;
        // the pivot must divide the whole trailing block
        bool fixed = false;
        for (std::size_t r = t + 1; r < R && !fixed; ++r)
            for (std::size_t c = t + 1; c < C; ++c)
                if (D(r, c) % D(t, t) != 0) {
                    D.add_row(t, r, 1);
                    s.U.add_row(t, r, 1);
                    fixed = true;
                    break;
                }
        if (fixed)
            continue;
        if (D(t, t) < 0) {
            D.negate_row(t);
            s.U.negate_row(t);
        }
        ++t;
    }
    s.rank = t;
    return s;
}

FgAbGroup FgAbGroup::from_orders(const std::vector<BigInt>& orders)
{
    FgAbGroup g;
    std::vector<BigInt> finite;
    for (const auto& o : orders) {
        if (o == 0)
            ++g.free_rank;
        else if (abs(o) >= 2)
            finite.push_back(abs(o));
    }
    if (finite.empty())
        return g;
    SmithForm s = smith_normal_form(IntMatrix::diag(finite));
    for (std::size_t i = 0; i < finite.size(); ++i)
        if (s.D(i, i) >= 2)
            g.torsion.push_back(s.D(i, i));
    return g;
}

FgAbGroup FgAbGroup::elementary2(std::size_t dim)
{
    return from_orders(std::vector<BigInt>(dim, BigInt(2)));
}

std::vector<BigInt> FgAbGroup::orders() const
{
    std::vector<BigInt> o(free_rank, BigInt(0));
    o.insert(o.end(), torsion.begin(), torsion.end());
    return o;
}

std::string FgAbGroup::str() const
{
    if (trivial())
        return "0";
    std::vector<std::string> parts;
    if (free_rank == 1)
        parts.push_back("Z");
    else if (free_rank > 1)
        parts.push_back("Z^" + std::to_string(free_rank));
    for (std::size_t i = 0; i < torsion.size();) {
        std::size_t j = i;
        while (j < torsion.size() && torsion[j] == torsion[i])
            ++j;
        std::string t = "Z/" + torsion[i].str();
        if (j - i > 1)
            t = "(" + t + ")^" + std::to_string(j - i);
        parts.push_back(t);
        i = j;
    }
    std::string s;
    for (std::size_t i = 0; i < parts.size(); ++i)
        s += (i ? " + " : "") + parts[i];
    return s;
}

namespace {

void check_well_defined(const std::vector<BigInt>& src, const IntMatrix& f, const std::vector<BigInt>& tgt,
                        const char* what)
{
    if (f.cols() != src.size() || f.rows() != tgt.size())
        throw std::invalid_argument(std::string("fgab_homology: shape mismatch in ") + what);
    for (std::size_t c = 0; c < src.size(); ++c)
        for (std::size_t r = 0; r < tgt.size(); ++r) {
            BigInt v = f(r, c) * src[c];
            if (tgt[r] == 0 ? v != 0 : v % tgt[r] != 0)
                throw std::invalid_argument(std::string("fgab_homology: map not well defined on relations in ") + what);
        }
}

}  // namespace

FgAbGroup fgab_homology(const std::vector<BigInt>& a_orders, const IntMatrix& f, const std::vector<BigInt>& b_orders,
                        const IntMatrix& g, const std::vector<BigInt>& c_orders)
{
    check_well_defined(a_orders, f, b_orders, "f");
    check_well_defined(b_orders, g, c_orders, "g");
    const IntMatrix gf = g * f;
    for (std::size_t r = 0; r < gf.rows(); ++r)
        for (std::size_t c = 0; c < gf.cols(); ++c)
            if (c_orders[r] == 0 ? gf(r, c) != 0 : gf(r, c) % c_orders[r] != 0)
                throw std::logic_error("fgab_homology: g*f != 0");

    const std::size_t nB = b_orders.size();
    // K = { x : g x lies in the relation lattice of C }
    std::vector<std::size_t> crel;
    for (std::size_t r = 0; r < c_orders.size(); ++r)
        if (c_orders[r] != 0)
            crel.push_back(r);
    IntMatrix M(c_orders.size(), nB + crel.size());
    for (std::size_t r = 0; r < c_orders.size(); ++r)
        for (std::size_t c = 0; c < nB; ++c)
            M(r, c) = g(r, c);
    for (std::size_t k = 0; k < crel.size(); ++k)
        M(crel[k], nB + k) = -c_orders[crel[k]];
    SmithForm sm = smith_normal_form(M);
    std::vector<std::vector<BigInt>> kb;
    for (std::size_t j = sm.rank; j < M.cols(); ++j) {
        std::vector<BigInt> v(nB);
        for (std::size_t i = 0; i < nB; ++i)
            v[i] = sm.V(i, j);
        kb.push_back(v);
    }
    const std::size_t k = kb.size();
    if (k == 0)
        return {};

    // N = im f + relations of B, expressed in the basis of K
    std::vector<std::vector<BigInt>> ncols;
    for (std::size_t c = 0; c < f.cols(); ++c) {
        std::vector<BigInt> v(nB);
        for (std::size_t r = 0; r < nB; ++r)
            v[r] = f(r, c);
        ncols.push_back(v);
    }
    for (std::size_t r = 0; r < nB; ++r)
        if (b_orders[r] != 0) {
            std::vector<BigInt> v(nB);
            v[r] = b_orders[r];
            ncols.push_back(v);
        }
    IntMatrix Kb(nB, k);
    for (std::size_t j = 0; j < k; ++j)
        for (std::size_t i = 0; i < nB; ++i)
            Kb(i, j) = kb[j][i];
    SmithForm sk = smith_normal_form(Kb);
    if (sk.rank != k)
        throw std::logic_error("fgab_homology: kernel basis is not independent");
    IntMatrix Z(k, ncols.size());
    for (std::size_t c = 0; c < ncols.size(); ++c) {
        std::vector<BigInt> un = sk.U.apply(ncols[c]);
        for (std::size_t i = 0; i < nB; ++i) {
            if (i < k) {
                if (un[i] % sk.D(i, i) != 0)
                    throw std::logic_error("fgab_homology: boundary not contained in cycles");
                Z(i, c) = un[i] / sk.D(i, i);
            } else if (un[i] != 0) {
                throw std::logic_error("fgab_homology: boundary not contained in cycles");
            }
        }
    }
    SmithForm sz = smith_normal_form(Z);
    std::vector<BigInt> orders;
    for (std::size_t i = 0; i < k; ++i)
        orders.push_back(i < sz.rank ? sz.D(i, i) : BigInt(0));
    return FgAbGroup::from_orders(orders);
}

FgAbGroup multiple_subgroup(const FgAbGroup& g, const BigInt& k)
{
    std::vector<BigInt> orders;
    for (std::size_t i = 0; i < g.free_rank; ++i)
        orders.push_back(k == 0 ? BigInt(1) : BigInt(0));
    for (const auto& d : g.torsion)
        orders.push_back(d / gcd(d, abs(k)));
    return FgAbGroup::from_orders(orders);
}

}  // namespace slicess
