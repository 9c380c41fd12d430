#pragma once

#include "slicess/field.hpp"
#include "slicess/slices.hpp"

#include <optional>
#include <set>
#include <string>
#include <vector>

namespace slicess {

// Coefficient letters sort first among themselves: tau < rho < phi.
enum class Letter : std::uint8_t { Delta, Tau, Rho, Phi, Sq1, Sq2, Sq3, Sq4, Sq5, Pr };

using Word = std::vector<Letter>;  // leftmost letter is applied last

struct OpError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

bool is_sq(Letter l);
bool is_coefficient(Letter l);
int sq_index(Letter l);
Letter sq_letter(int i);
std::string letter_str(Letter l);
std::string word_str(const Word& w);
std::pair<int, int> word_bidegree(const Word& w);  // (degree, weight)

// Formal GF(2)-sum of words between coefficient types.
struct OpWord {
    Coeff src = Coeff::Z2;
    Coeff tgt = Coeff::Z2;
    std::set<Word> terms;

    bool is_zero() const { return terms.empty(); }
    bool operator==(const OpWord& o) const = default;
    std::string str() const;
};

OpWord op_zero(Coeff src = Coeff::Z2, Coeff tgt = Coeff::Z2);
OpWord op_identity(Coeff c = Coeff::Z2);
OpWord op_word(const Word& w);
OpWord op_sum(const OpWord& a, const OpWord& b);
// a after b
OpWord op_compose(const OpWord& a, const OpWord& b);
// "Sq2 + rho Sq1", "δSq2Sq1", "tau pr", "0"
OpWord parse_op(const std::string& text);

struct Normalized {
    OpWord result;
    std::vector<std::string> trace;
};

Normalized op_normalize_traced(const OpWord& w);
OpWord op_normalize(const OpWord& w);
bool is_normal_word(const Word& w);

// d1 rows: target offset = source offset + shift
enum class D1Case { KT0, KT2, KQTop0, KQTop1, KQTop2, KQTop3, KGL2 };

struct D1Entry {
    int shift;
    OpWord op;
    std::string kind;  // chart legend key
};

std::string d1_case_name(D1Case c);
std::vector<D1Entry> d1_symbolic(D1Case c);
// which row applies to a summand of s_q(E); throws for display-only spectra
D1Case d1_case_for(Spectrum e, int q, const SummandDesc& s);

struct D1SquareEntry {
    int q = 0;
    int src_offset = 0;
    int tgt_offset = 0;
    std::string composite;
    std::string normal;
    std::vector<std::string> trace;
};

struct D1SquareReport {
    Spectrum spectrum;
    std::vector<D1SquareEntry> entries;
    std::vector<std::string> span_failures;
    bool ok() const;
};

D1SquareReport verify_d1_squared(Spectrum e);

struct AdemCheck {
    std::string relation;
    std::string lhs;
    std::string expected;
    std::string normal;
    std::vector<std::string> trace;
    bool ok = false;
};

std::vector<AdemCheck> verify_adem();

struct HomBasisEntry {
    std::string listed;   // as tabulated, e.g. "Sq1Sq2"
    OpWord normal;
    bool h11_coefficient = false;  // entry is a copy of h^{1,1}
};

struct HomTable {
    Coeff src, tgt;
    int degree = 0, weight = 0;
    std::vector<HomBasisEntry> entries;
    int relations = 0;  // independent relations among the listed generators

    int dim(int h11_dim) const;
};

HomTable hom_basis_table(Coeff src, Coeff tgt, int degree, int weight);
// is every term of the normal form in the span of the tabulated generators
bool in_tabulated_span(const OpWord& normal);

// Numeric evaluation of mod-2 operations on h^{p,q}; phi is the h^{1,1} class for Phi letters.
MotClass eval_word_letters(const FieldPresentation& f, const Word& w, const MotClass& x, const MotClass* phi = nullptr);
// bidegree places the result of a zero operation
MotClass eval_op_letters(const FieldPresentation& f, const OpWord& op, const MotClass& x, const MotClass* phi = nullptr,
                         std::optional<std::pair<int, int>> bidegree = std::nullopt);
// evaluates a normal form with the closed forms for admissible pairs
MotClass eval_normal(const FieldPresentation& f, const OpWord& normal, const MotClass& x, const MotClass* phi = nullptr,
                     std::optional<std::pair<int, int>> bidegree = std::nullopt);

}  // namespace slicess
