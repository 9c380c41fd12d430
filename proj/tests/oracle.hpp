#pragma once

// Brute-force reference computations, sharing no code with the library.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <random>
#include <vector>

namespace oracle {

using Int = boost::multiprecision::cpp_int;

// GF(p) or GF(p^2) = GF(p)[i]/(i^2 - nonresidue); elements encoded as a + p*b.
class FiniteField {
public:
    explicit FiniteField(int q);

    int order() const { return q_; }
    int add(int x, int y) const;
    int neg(int x) const;
    int sub(int x, int y) const { return add(x, neg(y)); }
    int mul(int x, int y) const;
    int inv(int x) const;
    int from_int(long long n) const;
    bool is_square(int x) const;

private:
    int q_, p_, deg_, nr_ = 0;
};

// Witt ring of a finite field from diagonal forms: classes are anisotropic
// kernels up to isometry, found by splitting off hyperbolic planes.
struct WittOracle {
    int classes = 0;                  // |W|
    std::vector<int> ideal_power_sizes;  // |I^q| for q = 0..qmax+1
};

WittOracle witt_ring(int q, int qmax);

// Hilbert symbol over Q_p (p odd) for a = p^i u^j and b = p^k u^l, u a unit
// non-residue: +1 when a x^2 + b y^2 = z^2 has a primitive solution mod p^3.
int hilbert_symbol(int p, int a_pi, int a_u, int b_pi, int b_u);
bool minus_one_is_square_mod(int p);

// ranks and invariant factors by methods independent of the library
std::size_t f2_rank(std::vector<std::vector<int>> rows);
// d_k = D_k / D_{k-1}, D_k the gcd of the k x k minors
std::vector<Int> invariant_factors(const std::vector<std::vector<long long>>& m);

// invariant factors (ascending, each > 1) of a finite abelian group, given the
// order of every one of its elements
std::vector<Int> invariants_from_element_orders(const std::vector<long long>& element_orders);
// elements of Z/n1 x ... x Z/nk, all ni > 0, in lexicographic order
std::vector<std::vector<long long>> enumerate_group(const std::vector<long long>& cyclic_orders);
long long element_order(const std::vector<long long>& x, const std::vector<long long>& cyclic_orders);

}  // namespace oracle
