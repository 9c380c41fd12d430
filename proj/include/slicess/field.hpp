#pragma once

#include "slicess/linalg.hpp"

#include <json.hpp>

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace slicess {

struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

using Coords = std::vector<std::uint8_t>;

// Integral motivic cohomology H^{p,q} as supplied by a field document.
struct IntegralCell {
    int p = 0, q = 0;
    FgAbGroup group;
    IntMatrix pr;                      // dims[p] x generators, read mod 2
    bool divisible = false;            // an extra uniquely divisible summand
    std::optional<IntMatrix> delta;    // generators x dims[p-1]: Bockstein h^{p-1,q} -> H^{p,q}

    bool operator==(const IntegralCell& o) const;
};

// How an integral cell came to be known.
enum class CellSource { Data, Vanishing, ZeroList, BeilinsonSoule };

struct ResolvedCell {
    int p = 0, q = 0;
    FgAbGroup group;
    IntMatrix pr;
    bool divisible = false;
    std::optional<IntMatrix> delta;
    CellSource source = CellSource::Data;

    bool zero() const { return group.trivial() && !divisible; }
    bool conditional() const { return source == CellSource::BeilinsonSoule; }
};

class FieldPresentation {
public:
    std::string name;
    int truncation = 12;
    std::vector<int> dims;                             // dims[n] = dim k^M_n
    std::vector<std::vector<std::string>> basis;       // labels per degree
    Coords rho;                                        // degree-1 coordinates of [-1]
    // (a,b) with 1 <= a <= b, a+b <= N: table[(i*dims[b] + j)*dims[a+b] + k]
    std::map<std::pair<int, int>, std::vector<std::uint8_t>> mult;
    std::vector<IntegralCell> cells;
    bool has_integral = false;
    bool beilinson_soule = false;
    std::vector<std::pair<int, int>> zero_cells;

    int dim(int n) const { return (n >= 0 && n <= truncation) ? dims[n] : 0; }
    // product of basis element i of degree a with basis element j of degree b
    Coords basis_product(int a, std::size_t i, int b, std::size_t j) const;
    Coords multiply(int a, const Coords& x, int b, const Coords& y) const;

    const IntegralCell* find_cell(int p, int q) const;
    ResolvedCell resolve_integral(int p, int q) const;

    bool operator==(const FieldPresentation& o) const;
};

FieldPresentation load_field(const nlohmann::json& doc);
FieldPresentation load_field_file(const std::string& path);
nlohmann::json emit_field(const FieldPresentation& f);

// Validates every ring axiom; throws InputError naming the failing basis triple.
void validate_field(const FieldPresentation& f);

// kind: quadratically_closed | real_closed | finite | local
FieldPresentation preset_field(const std::string& kind, int param = 0, int truncation = 12);
// Parses "real", "real_closed", "qc", "finite(5)", "finite:5", "local(7)", ...
FieldPresentation preset_by_name(const std::string& text, int truncation = 12);
std::vector<std::string> preset_names();

// h^{p,q}: dims[p] for 0 <= p <= q, else 0; q must lie within the truncation.
int h_dim(const FieldPresentation& f, int p, int q);

struct MotClass {
    int p = 0, q = 0;
    Coords coords;  // length h_dim(p,q)

    bool is_zero() const;
    bool operator==(const MotClass& o) const = default;
};

MotClass zero_class(const FieldPresentation& f, int p, int q);
MotClass basis_class(const FieldPresentation& f, int p, int q, std::size_t i);
MotClass tau_class(const FieldPresentation& f);
MotClass rho_class(const FieldPresentation& f);
MotClass add(const MotClass& x, const MotClass& y);
MotClass cup(const FieldPresentation& f, const MotClass& x, const MotClass& y);

// "τ^2ρ^3", "τ[u]", "1"
std::string h_basis_label(const FieldPresentation& f, int p, int q, std::size_t i);
std::string class_label(const FieldPresentation& f, const MotClass& x);

}  // namespace slicess
