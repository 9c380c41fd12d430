#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace slicess {

using BigInt = boost::multiprecision::cpp_int;

// Bit vector over GF(2), 64 entries per word.
class BitVec {
public:
    BitVec() = default;
    explicit BitVec(std::size_t n) : n_(n), w_((n + 63) / 64, 0) {}

    std::size_t size() const { return n_; }
    bool get(std::size_t i) const { return (w_[i >> 6] >> (i & 63)) & 1u; }
    void set(std::size_t i, bool v = true)
    {
        if (v)
            w_[i >> 6] |= (std::uint64_t{1} << (i & 63));
        else
            w_[i >> 6] &= ~(std::uint64_t{1} << (i & 63));
    }
    void flip(std::size_t i) { w_[i >> 6] ^= (std::uint64_t{1} << (i & 63)); }
    BitVec& operator^=(const BitVec& o);
    bool any() const;
    std::size_t popcount() const;
    // index of the first / last set bit, or size() when zero
    std::size_t first() const;
    std::size_t last() const;
    bool operator==(const BitVec& o) const { return n_ == o.n_ && w_ == o.w_; }
    bool operator<(const BitVec& o) const;
    std::string str() const;

    static BitVec from_bits(const std::vector<int>& bits);

private:
    std::size_t n_ = 0;
    std::vector<std::uint64_t> w_;
};

// Dense GF(2) matrix; acts on column vectors (cols = source dim, rows = target dim).
class F2Matrix {
public:
    F2Matrix() = default;
    F2Matrix(std::size_t rows, std::size_t cols);

    static F2Matrix identity(std::size_t n);
    static F2Matrix from_rows(const std::vector<std::vector<int>>& rows, std::size_t cols);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool get(std::size_t r, std::size_t c) const { return data_[r].get(c); }
    void set(std::size_t r, std::size_t c, bool v = true) { data_[r].set(c, v); }
    const BitVec& row(std::size_t r) const { return data_[r]; }
    BitVec& row(std::size_t r) { return data_[r]; }

    BitVec apply(const BitVec& x) const;
    F2Matrix operator*(const F2Matrix& o) const;
    F2Matrix transpose() const;
    bool is_zero() const;
    bool operator==(const F2Matrix& o) const = default;

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<BitVec> data_;
};

struct F2RankResult {
    std::size_t rank = 0;
    std::vector<BitVec> kernel;  // vectors of length cols
    std::vector<BitVec> image;   // vectors of length rows, reduced echelon form
};

F2RankResult f2_rank_kernel_image(const F2Matrix& m);

struct F2Homology {
    std::size_t dim = 0;
    std::vector<BitVec> reps;
};

// Homology at B of A --f--> B --g--> C. Representatives avoid the trailing
// pivots of im f, so they sit as far toward low coordinates as possible.
F2Homology f2_homology(const F2Matrix& f, const F2Matrix& g);

class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), e_(rows * cols) {}

    static IntMatrix identity(std::size_t n);
    static IntMatrix from_rows(const std::vector<std::vector<long long>>& rows, std::size_t cols);
    static IntMatrix diag(const std::vector<BigInt>& d);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    BigInt& operator()(std::size_t r, std::size_t c) { return e_[r * cols_ + c]; }
    const BigInt& operator()(std::size_t r, std::size_t c) const { return e_[r * cols_ + c]; }

    IntMatrix operator*(const IntMatrix& o) const;
    bool operator==(const IntMatrix& o) const = default;
    bool is_zero() const;
    std::vector<BigInt> apply(const std::vector<BigInt>& x) const;

    void swap_rows(std::size_t a, std::size_t b);
    void swap_cols(std::size_t a, std::size_t b);
    // row a += k * row b
    void add_row(std::size_t a, std::size_t b, const BigInt& k);
    void add_col(std::size_t a, std::size_t b, const BigInt& k);
    void negate_row(std::size_t a);

    std::string str() const;

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<BigInt> e_;
};

struct SmithForm {
    IntMatrix U, D, V;  // U * M * V == D
    std::size_t rank = 0;
};

SmithForm smith_normal_form(const IntMatrix& m);

// Finitely generated abelian group Z^r + Z/d1 + ... + Z/dk with d1 | d2 | ... | dk, di >= 2.
struct FgAbGroup {
    std::size_t free_rank = 0;
    std::vector<BigInt> torsion;

    // canonical form of Z^r + (+) Z/o for the given cyclic orders (0 = free, 1 = trivial)
    static FgAbGroup from_orders(const std::vector<BigInt>& orders);
    static FgAbGroup cyclic(const BigInt& n) { return from_orders({n}); }
    static FgAbGroup elementary2(std::size_t dim);

    bool trivial() const { return free_rank == 0 && torsion.empty(); }
    std::size_t generators() const { return free_rank + torsion.size(); }
    // per-generator orders, free generators first (0 = infinite order)
    std::vector<BigInt> orders() const;
    bool operator==(const FgAbGroup& o) const = default;
    std::string str() const;
};

// A --f--> B --g--> C where each group is presented as Z^n modulo the
// diagonal relations given by per-generator orders (0 = free). Maps are
// integer matrices on generator coordinates.
FgAbGroup fgab_homology(const std::vector<BigInt>& a_orders, const IntMatrix& f,
                        const std::vector<BigInt>& b_orders, const IntMatrix& g,
                        const std::vector<BigInt>& c_orders);

// Image of multiplication by k on G, in canonical form.
FgAbGroup multiple_subgroup(const FgAbGroup& g, const BigInt& k);

}  // namespace slicess
