#pragma once

#include "slicess/field.hpp"

#include <optional>
#include <string>
#include <vector>

namespace slicess {

enum class Coeff { Z, Z2 };
enum class Spectrum { KT, KQ, KGL, KGL2, KGLhC2 };

std::string spectrum_name(Spectrum e);
Spectrum parse_spectrum(const std::string& s);
bool has_differential(Spectrum e);

// Σ^{s,w} MZ or Σ^{s,w} MZ/2; offset s - w is the index used by the d1 rows.
struct SummandDesc {
    Coeff coeff = Coeff::Z2;
    int s = 0, w = 0;

    int offset() const { return s - w; }
    std::string str() const;
    bool operator==(const SummandDesc& o) const = default;
};

// Summands of s_q(E) with offset in [lo, hi], descending offset.
std::vector<SummandDesc> slice_summands(Spectrum e, int q, int lo, int hi);
// Summands with a possibly nonzero contribution to π_{p,0} s_q(E).
std::vector<SummandDesc> column_summands(Spectrum e, int q, int p);

struct Component {
    enum class Kind { F2, Z, Div };
    Kind kind = Kind::F2;
    Coeff coeff = Coeff::Z2;
    int offset = 0;
    int a = 0, w = 0;                 // the component is h^{a,w} or H^{a,w}
    int dim = 0;                      // F2
    std::vector<std::string> labels;  // F2 basis labels
    FgAbGroup group;                  // Z
    IntMatrix pr;                     // Z: reduction onto h^{a,w}
    std::optional<ResolvedCell> cell;
    bool conditional = false;
    std::string name;                 // "h^{1,3}", "H^{2,2}", "E2"

    std::vector<BigInt> orders() const;  // presented generator orders; empty for Div
    std::string value_str() const;       // "F2^2", "Z/24", "D"
};

struct GroupObject {
    int p = 0, q = 0;
    std::vector<Component> comps;
    bool conditional = false;  // some cell was zeroed by the Beilinson-Soule flag

    bool zero() const { return comps.empty(); }
    std::vector<BigInt> orders() const;
    std::size_t generators() const { return orders().size(); }
    std::size_t gen_start(std::size_t comp) const;
    int find(int offset, Coeff coeff) const;  // component index or -1
    int f2_dim() const;                       // total dim when every component is F2
    bool pure_mod2() const;
    std::string str() const;
};

struct GroupHom {
    struct Block {
        std::size_t src_index = 0, tgt_index = 0;
        std::string op, kind;
        IntMatrix matrix;  // target generators x source generators
    };
    GroupObject source, target;
    std::vector<Block> blocks;

    IntMatrix total() const;
};

GroupObject e1_group(Spectrum e, const FieldPresentation& f, int p, int q);

}  // namespace slicess
