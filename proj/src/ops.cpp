#include "slicess/ops.hpp"
#include "slicess/steenrod.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <optional>

namespace slicess {

bool is_sq(Letter l) { return l >= Letter::Sq1 && l <= Letter::Sq5; }
bool is_coefficient(Letter l) { return l == Letter::Tau || l == Letter::Rho || l == Letter::Phi; }
int sq_index(Letter l) { return is_sq(l) ? static_cast<int>(l) - static_cast<int>(Letter::Sq1) + 1 : 0; }

Letter sq_letter(int i)
{
    if (i < 1 || i > 5)
        throw OpError("no letter Sq" + std::to_string(i));
    return static_cast<Letter>(static_cast<int>(Letter::Sq1) + i - 1);
}

std::string letter_str(Letter l)
{
    switch (l) {
    case Letter::Delta: return "δ";
    case Letter::Tau: return "τ";
    case Letter::Rho: return "ρ";
    case Letter::Phi: return "φ";
    case Letter::Pr: return "pr";
    default: return "Sq" + std::to_string(sq_index(l));
    }
}

std::string word_str(const Word& w)
{
    if (w.empty())
        return "1";
    std::string s;
    for (std::size_t i = 0; i < w.size();) {
        std::size_t j = i;
        while (j < w.size() && w[j] == w[i] && is_coefficient(w[i]))
            ++j;
        if (j - i > 1) {
            s += letter_str(w[i]) + "^" + std::to_string(j - i);
            i = j;
        } else {
            s += letter_str(w[i]);
            ++i;
        }
    }
    return s;
}

std::pair<int, int> word_bidegree(const Word& w)
{
    int d = 0, t = 0;
    for (Letter l : w) {
        switch (l) {
        case Letter::Delta: d += 1; break;
        case Letter::Pr: break;
        case Letter::Tau: t += 1; break;
        case Letter::Rho:
        case Letter::Phi: d += 1, t += 1; break;
        default: {
            int i = sq_index(l);
            d += i;
            t += i / 2;
        }
        }
    }
    return {d, t};
}

namespace {

Coeff letter_src(Letter l) { return l == Letter::Pr ? Coeff::Z : Coeff::Z2; }
Coeff letter_tgt(Letter l) { return l == Letter::Delta ? Coeff::Z : Coeff::Z2; }

const char* coeff_name(Coeff c) { return c == Coeff::Z ? "MZ" : "MZ/2"; }

void check_word(const Word& w)
{
    for (std::size_t i = 0; i + 1 < w.size(); ++i)
        if (letter_src(w[i]) != letter_tgt(w[i + 1]))
            throw OpError("incompatible coefficients: " + letter_str(w[i]) + " after " + letter_str(w[i + 1]));
}

void toggle(std::set<Word>& s, const Word& w)
{
    auto it = s.find(w);
    if (it == s.end())
        s.insert(w);
    else
        s.erase(it);
}

}  // namespace

std::string OpWord::str() const
{
    if (terms.empty())
        return "0";
    std::string s;
    for (const auto& w : terms)
        s += (s.empty() ? "" : " + ") + word_str(w);
    return s;
}

OpWord op_zero(Coeff src, Coeff tgt) { return OpWord{src, tgt, {}}; }

OpWord op_identity(Coeff c) { return OpWord{c, c, {Word{}}}; }

OpWord op_word(const Word& w)
{
    if (w.empty())
        return op_identity();
    check_word(w);
    return OpWord{letter_src(w.back()), letter_tgt(w.front()), {w}};
}

OpWord op_sum(const OpWord& a, const OpWord& b)
{
    if (a.is_zero())
        return b;
    if (b.is_zero())
        return a;
    if (a.src != b.src || a.tgt != b.tgt)
        throw OpError("cannot add operations of different coefficient types");
    OpWord out = a;
    for (const auto& w : b.terms)
        toggle(out.terms, w);
    return out;
}

OpWord op_compose(const OpWord& a, const OpWord& b)
{
    if (a.src != b.tgt)
        throw OpError(std::string("incompatible coefficients: ") + coeff_name(a.src) + " source after " +
                      coeff_name(b.tgt) + " target");
    OpWord out{b.src, a.tgt, {}};
    for (const auto& x : a.terms)
        for (const auto& y : b.terms) {
            Word w = x;
            w.insert(w.end(), y.begin(), y.end());
            check_word(w);
            toggle(out.terms, w);
        }
    return out;
}

OpWord parse_op(const std::string& text)
{
    static const std::vector<std::pair<std::string, Letter>> tokens = {
        {"Sq1", Letter::Sq1}, {"Sq2", Letter::Sq2}, {"Sq3", Letter::Sq3}, {"Sq4", Letter::Sq4},
        {"Sq5", Letter::Sq5}, {"δ", Letter::Delta}, {"delta", Letter::Delta}, {"pr", Letter::Pr},
        {"τ", Letter::Tau},   {"tau", Letter::Tau}, {"ρ", Letter::Rho},     {"rho", Letter::Rho},
        {"φ", Letter::Phi},   {"phi", Letter::Phi}};
    std::vector<Word> words;
    Word cur;
    bool zero_term = false, have = false;
    std::size_t i = 0;
    auto flush = [&] {
        if (!have)
            throw OpError("empty term in \"" + text + "\"");
        if (!zero_term)
            words.push_back(cur);
        cur.clear();
        zero_term = false;
        have = false;
    };
    while (i < text.size()) {
        char c = text[i];
        if (c == ' ' || c == '*' || c == '.') {
            ++i;
            continue;
        }
        if (text.compare(i, 3, "∘") == 0) {
            i += 3;
            continue;
        }
        if (c == '+') {
            flush();
            ++i;
            continue;
        }
        if (c == '0' || c == '1') {
            if (c == '0')
                zero_term = true;
            have = true;
            ++i;
            continue;
        }
        if (c == '^') {
            std::size_t j = i + 1;
            while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j])))
                ++j;
            if (cur.empty() || j == i + 1)
                throw OpError("bad exponent in \"" + text + "\"");
            int n = std::stoi(text.substr(i + 1, j - i - 1));
            Letter l = cur.back();
            for (int k = 1; k < n; ++k)
                cur.push_back(l);
            i = j;
            continue;
        }
        bool matched = false;
        for (const auto& [tok, l] : tokens) {
            if (text.compare(i, tok.size(), tok) == 0) {
                cur.push_back(l);
                i += tok.size();
                matched = have = true;
                break;
            }
        }
        if (!matched)
            throw OpError("cannot parse operation \"" + text + "\" at position " + std::to_string(i));
    }
    flush();
    OpWord out;
    bool typed = false;
    for (const auto& w : words) {
        OpWord t = (w.empty() && typed) ? op_identity(out.src) : op_word(w);
        if (!typed) {
            out = op_zero(t.src, t.tgt);
            typed = true;
        }
        out = op_sum(out, t);
    }
    return out;
}

namespace {

using Terms = std::vector<Word>;

Word splice(const Word& w, std::size_t pos, std::size_t len, const Word& mid)
{
    Word out(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(pos));
    out.insert(out.end(), mid.begin(), mid.end());
    out.insert(out.end(), w.begin() + static_cast<std::ptrdiff_t>(pos + len), w.end());
    return out;
}

struct Step {
    std::size_t pos, len;
    Terms replacement;
    std::string rule;
};

using L = Letter;

// coefficient moves and Bockstein identities, leftmost first
std::optional<Step> coefficient_step(const Word& w)
{
    for (std::size_t i = 0; i + 1 < w.size(); ++i) {
        const L a = w[i], b = w[i + 1];
        if (is_sq(a) && is_coefficient(b)) {
            const int n = sq_index(a);
            if (n == 1 && b == L::Tau)
                return Step{i, 2, {{L::Tau, L::Sq1}, {L::Rho}}, "Sq1τ = τSq1 + ρ"};
            if (n == 1)
                return Step{i, 2, {{b, L::Sq1}}, "Sq1" + letter_str(b) + " = " + letter_str(b) + "Sq1"};
            if (n == 2 && b == L::Tau)
                return Step{i, 2, {{L::Tau, L::Sq2}, {L::Tau, L::Rho, L::Sq1}}, "Sq2τ = τSq2 + τρSq1"};
            if (n == 2)
                return Step{i, 2, {{b, L::Sq2}}, "Sq2" + letter_str(b) + " = " + letter_str(b) + "Sq2"};
            if (n == 3)
                return Step{i, 1, {{L::Sq1, L::Sq2}}, "Sq3 = Sq1Sq2"};
            throw OpError("outside supported weight: no relation moves " + letter_str(b) + " past " + letter_str(a) +
                          " in " + word_str(w));
        }
        if (is_coefficient(a) && is_coefficient(b) && b < a)
            return Step{i, 2, {{b, a}}, "coefficients commute"};
        if (a == L::Pr && b == L::Delta)
            return Step{i, 2, {{L::Sq1}}, "pr∘δ = Sq1"};
        if (a == L::Delta && b == L::Pr)
            return Step{i, 2, {}, "δ∘pr = 0"};
        if (a == L::Delta && (b == L::Sq1 || b == L::Sq3 || b == L::Sq5))
            return Step{i, 2, {}, "δ" + letter_str(b) + " = 0"};
        if (a == L::Sq1 && b == L::Pr)
            return Step{i, 2, {}, "Sq1∘pr = 0"};
    }
    return std::nullopt;
}

// leftmost inadmissible pair of squares
std::optional<Step> adem_step(const Word& w)
{
    for (std::size_t i = 0; i + 1 < w.size(); ++i) {
        if (!is_sq(w[i]) || !is_sq(w[i + 1]))
            continue;
        const int a = sq_index(w[i]), b = sq_index(w[i + 1]);
        if (a >= 2 * b)
            continue;
        const std::string lhs = "Sq" + std::to_string(a) + "Sq" + std::to_string(b);
        if (a == 1 && b % 2 == 1)
            return Step{i, 2, {}, lhs + " = 0"};
        if (a == 1 && b == 2)
            return Step{i, 2, {{L::Sq3}}, "Sq1Sq2 = Sq3"};
        if (a == 1 && b == 4)
            return Step{i, 2, {{L::Sq5}}, "Sq1Sq4 = Sq5"};
        if (a == 2 && b == 2)
            return Step{i, 2, {{L::Tau, L::Sq3, L::Sq1}}, "Sq2Sq2 = τSq3Sq1"};
        if (a == 2 && b == 3)
            return Step{i, 2, {{L::Sq5}, {L::Sq4, L::Sq1}}, "Sq2Sq3 = Sq5 + Sq4Sq1"};
        if (a == 3 && b == 3)
            return Step{i, 2, {{L::Sq5, L::Sq1}}, "Sq3Sq3 = Sq5Sq1"};
        if (a == 3 && b == 2)
            return Step{i, 2, {{L::Rho, L::Sq3, L::Sq1}}, "Sq3Sq2 = ρSq3Sq1"};
        throw OpError("outside supported weight: no relation for " + lhs + " in " + word_str(w));
    }
    return std::nullopt;
}

bool admissible_sq_word(const Word& sq)
{
    static const std::set<Word> ok = {{},
                                      {L::Sq1},
                                      {L::Sq2},
                                      {L::Sq2, L::Sq1},
                                      {L::Sq3},
                                      {L::Sq3, L::Sq1},
                                      {L::Sq4},
                                      {L::Sq4, L::Sq1},
                                      {L::Sq5},
                                      {L::Sq5, L::Sq1}};
    return ok.count(sq) > 0;
}

// [δ] coefficients Sq-word [pr]
bool normal_shape(const Word& w)
{
    std::size_t i = 0, n = w.size();
    if (i < n && w[i] == L::Delta)
        ++i;
    L last = L::Delta;
    bool first = true;
    while (i < n && is_coefficient(w[i])) {
        if (!first && w[i] < last)
            return false;
        last = w[i];
        first = false;
        ++i;
    }
    Word sq;
    while (i < n && is_sq(w[i]))
        sq.push_back(w[i++]);
    if (i < n && w[i] == L::Pr)
        ++i;
    return i == n && admissible_sq_word(sq);
}

}  // namespace

bool is_normal_word(const Word& w)
{
    return !coefficient_step(w) && !adem_step(w) && normal_shape(w);
}

Normalized op_normalize_traced(const OpWord& input)
{
    constexpr int step_cap = 100000;
    Normalized out;
    std::set<Word> cur = input.terms;
    for (int steps = 0;; ++steps) {
        if (steps > step_cap)
            throw OpError("normalization did not terminate on " + input.str());
        std::optional<Step> st;
        const Word* hit = nullptr;
        for (const auto& w : cur) {
            st = coefficient_step(w);
            if (!st)
                st = adem_step(w);
            if (st) {
                hit = &w;
                break;
            }
            if (!normal_shape(w))
                throw OpError("outside supported weight: " + word_str(w) + " has no admissible form");
        }
        if (!st)
            break;
        const Word w = *hit;
        OpWord before{input.src, input.tgt, cur};
        cur.erase(w);
        std::string rhs;
        for (const auto& mid : st->replacement) {
            Word nw = splice(w, st->pos, st->len, mid);
            rhs += (rhs.empty() ? "" : " + ") + word_str(nw);
            toggle(cur, nw);
        }
        out.trace.push_back(word_str(w) + " -> " + (rhs.empty() ? "0" : rhs) + "   [" + st->rule + "]");
    }
    out.result = OpWord{input.src, input.tgt, cur};
    return out;
}

OpWord op_normalize(const OpWord& w) { return op_normalize_traced(w).result; }

std::string d1_case_name(D1Case c)
{
    switch (c) {
    case D1Case::KT0: return "KT offset ≡ 0 (mod 4)";
    case D1Case::KT2: return "KT offset ≡ 2 (mod 4)";
    case D1Case::KQTop0: return "KQ top, q ≡ 0 (mod 4)";
    case D1Case::KQTop1: return "KQ top, q ≡ 1 (mod 4)";
    case D1Case::KQTop2: return "KQ top, q ≡ 2 (mod 4)";
    case D1Case::KQTop3: return "KQ top, q ≡ 3 (mod 4)";
    case D1Case::KGL2: return "KGL2";
    }
    return "?";
}

std::vector<D1Entry> d1_symbolic(D1Case c)
{
    const OpWord sq3sq1 = parse_op("Sq3Sq1");
    const OpWord sq2 = parse_op("Sq2");
    const OpWord sq2rho = parse_op("Sq2 + ρSq1");
    const OpWord tau = parse_op("τ");
    const OpWord zero = op_zero();
    switch (c) {
    case D1Case::KT0: return {{2, sq3sq1, "Sq3Sq1"}, {0, sq2, "Sq2"}, {-2, zero, "0"}};
    case D1Case::KT2: return {{2, sq3sq1, "Sq3Sq1"}, {0, sq2rho, "Sq2+ρSq1"}, {-2, tau, "τ"}};
    case D1Case::KQTop0:
        return {{2, op_zero(Coeff::Z, Coeff::Z2), "0"}, {0, parse_op("Sq2pr"), "Sq2∘pr"}, {-2, op_zero(Coeff::Z, Coeff::Z2), "0"}};
    case D1Case::KQTop2:
        return {{2, op_zero(Coeff::Z, Coeff::Z2), "0"}, {0, parse_op("Sq2pr"), "Sq2∘pr"}, {-2, parse_op("τpr"), "τ∘pr"}};
    case D1Case::KQTop1: return {{2, parse_op("δSq2Sq1"), "δSq2Sq1"}, {0, sq2, "Sq2"}, {-2, zero, "0"}};
    case D1Case::KQTop3: return {{2, parse_op("δSq2Sq1"), "δSq2Sq1"}, {0, sq2rho, "Sq2+ρSq1"}, {-2, tau, "τ"}};
    case D1Case::KGL2: return {{1, parse_op("Sq3 + Sq2Sq1"), "Q1"}};
    }
    throw OpError("unknown d1 case");
}

D1Case d1_case_for(Spectrum e, int q, const SummandDesc& s)
{
    const int off = s.offset();
    auto kt = [&] {
        if (off % 2 != 0)
            throw OpError("odd offset " + std::to_string(off) + " has no KT row");
        return ((off % 4) + 4) % 4 == 0 ? D1Case::KT0 : D1Case::KT2;
    };
    switch (e) {
    case Spectrum::KT: return kt();
    case Spectrum::KQ: {
        const bool top = (q % 2 == 0 && off == q) || (q % 2 == 1 && off == q - 1);
        if (!top)
            return kt();
        switch (q % 4) {
        case 0: return D1Case::KQTop0;
        case 1: return D1Case::KQTop1;
        case 2: return D1Case::KQTop2;
        default: return D1Case::KQTop3;
        }
    }
    case Spectrum::KGL2: return D1Case::KGL2;
    default: throw InputError("no differential defined for " + spectrum_name(e));
    }
}

bool D1SquareReport::ok() const
{
    return span_failures.empty() &&
           std::all_of(entries.begin(), entries.end(), [](const D1SquareEntry& e) { return e.normal == "0"; });
}

D1SquareReport verify_d1_squared(Spectrum e)
{
    if (!has_differential(e))
        throw InputError("no differential defined for " + spectrum_name(e));
    D1SquareReport rep{e, {}, {}};
    const int lo_q = 0, hi_q = 8;
    std::set<std::string> span_checked;
    for (int q = lo_q; q <= hi_q; ++q) {
        const int top = q + 2;
        auto layer = [&](int w) { return slice_summands(e, w, q - 10, top + 4); };
        const auto s0 = layer(q), s1 = layer(q + 1), s2 = layer(q + 2);
        for (const auto& src : s0) {
            if (src.offset() < q - 6 || src.offset() > top)
                continue;  // keep every intermediate summand inside the layers
            // composite into each second-step summand
            std::map<int, OpWord> acc;
            std::map<int, std::string> shown;
            for (const auto& r1 : d1_symbolic(d1_case_for(e, q, src))) {
                const int j = src.offset() + r1.shift;
                auto mid = std::find_if(s1.begin(), s1.end(), [&](const SummandDesc& d) { return d.offset() == j; });
                if (mid == s1.end())
                    continue;
                if (!r1.op.is_zero()) {
                    OpWord nf = op_normalize(r1.op);
                    if (!span_checked.count(nf.str() + coeff_name(nf.src) + coeff_name(nf.tgt))) {
                        span_checked.insert(nf.str() + coeff_name(nf.src) + coeff_name(nf.tgt));
                        if (!in_tabulated_span(nf))
                            rep.span_failures.push_back(nf.str());
                    }
                }
                for (const auto& r2 : d1_symbolic(d1_case_for(e, q + 1, *mid))) {
                    const int k = j + r2.shift;
                    if (std::none_of(s2.begin(), s2.end(), [&](const SummandDesc& d) { return d.offset() == k; }))
                        continue;
                    OpWord term = op_compose(r2.op, r1.op);
                    OpWord& slot = acc.try_emplace(k, op_zero(term.src, term.tgt)).first->second;
                    slot = op_sum(slot, term);
                    std::string part = "(" + r2.op.str() + ")(" + r1.op.str() + ")";
                    shown[k] += (shown[k].empty() ? "" : " + ") + part;
                }
            }
            for (const auto& [k, op] : acc) {
                Normalized n = op_normalize_traced(op);
                rep.entries.push_back({q, src.offset(), k, shown[k], n.result.str(), n.trace});
            }
        }
    }
    return rep;
}

std::vector<AdemCheck> verify_adem()
{
    const std::vector<std::pair<std::string, std::string>> rel = {
        {"Sq1Sq1", "0"},
        {"Sq1τ", "τSq1 + ρ"},
        {"Sq1φ", "φSq1"},
        {"Sq1Sq2", "Sq3"},
        {"Sq1Sq3", "0"},
        {"Sq2τ", "τSq2 + τρSq1"},
        {"Sq2φ", "φSq2"},
        {"Sq2Sq2", "τSq3Sq1"},
        {"Sq2Sq3", "Sq5 + Sq4Sq1"},
        {"Sq3Sq3", "Sq5Sq1"},
        {"Sq3τ", "τSq3 + ρSq2 + ρ^2Sq1"},
    };
    std::vector<AdemCheck> out;
    for (const auto& [lhs, rhs] : rel) {
        AdemCheck c;
        c.relation = lhs + " = " + rhs;
        c.lhs = lhs;
        c.expected = op_normalize(parse_op(rhs)).str();
        Normalized n = op_normalize_traced(parse_op(lhs));
        c.normal = n.result.str();
        c.trace = n.trace;
        c.ok = c.normal == c.expected && !n.trace.empty();
        out.push_back(std::move(c));
    }
    return out;
}

int HomTable::dim(int h11_dim) const
{
    int d = -relations;
    for (const auto& e : entries)
        d += e.h11_coefficient ? h11_dim : 1;
    return d;
}

HomTable hom_basis_table(Coeff src, Coeff tgt, int degree, int weight)
{
    if (weight < 0 || weight > 1)
        throw OpError("hom table requested outside weights 0 and 1");
    HomTable t{src, tgt, degree, weight, {}, 0};
    auto add = [&](const std::string& listed, bool h11 = false) {
        t.entries.push_back({listed, op_normalize(parse_op(listed)), h11});
    };
    const bool m2 = src == Coeff::Z2, t2 = tgt == Coeff::Z2;
    if (weight == 0) {
        if (m2 && t2) {
            if (degree == 0)
                add("1");
            if (degree == 1)
                add("Sq1");
        } else if (!m2 && t2) {
            if (degree == 0)
                add("pr");
        } else if (m2 && !t2) {
            if (degree == 1)
                add("δ");
        }
        return t;
    }
    if (m2 && t2) {
        switch (degree) {
        case 0: add("τ"); break;
        case 1: add("φ", true), add("τSq1"); break;
        case 2: add("φSq1", true), add("Sq2"); break;
        case 3: add("Sq2Sq1"), add("Sq1Sq2"); break;
        case 4: add("Sq1Sq2Sq1"); break;
        default: break;
        }
    } else if (!m2 && t2) {
        switch (degree) {
        case 0: add("τpr"); break;
        case 1: add("φpr", true); break;
        case 2: add("Sq2pr"); break;
        case 3: add("Sq1Sq2pr"); break;
        default: break;
        }
    } else if (m2 && !t2) {
        switch (degree) {
        case 1: add("δτ"); break;
        case 2:
            add("δφ", true), add("δτSq1");
            t.relations = 1;  // δρ = δτSq1
            break;
        case 3: add("δSq2"); break;
        case 4: add("δSq2Sq1"); break;
        default: break;
        }
    }
    return t;
}

bool in_tabulated_span(const OpWord& normal)
{
    auto generic = [](Word w) {
        for (auto& l : w)
            if (l == Letter::Rho)
                l = Letter::Phi;
        return w;
    };
    for (const auto& w : normal.terms) {
        auto [deg, wt] = word_bidegree(w);
        HomTable t = hom_basis_table(normal.src, normal.tgt, deg, wt);
        bool found = false;
        for (const auto& e : t.entries)
            for (const auto& ew : e.normal.terms)
                if (generic(ew) == generic(w))
                    found = true;
        if (!found)
            return false;
    }
    return true;
}

namespace {

MotClass apply_letter(const FieldPresentation& f, Letter l, const MotClass& x, const MotClass* phi)
{
    switch (l) {
    case Letter::Sq1: return sq1(f, x);
    case Letter::Sq2: return sq2(f, x);
    case Letter::Sq3: return sq3(f, x);
    case Letter::Tau: return tau_times(f, x);
    case Letter::Rho: return rho_times(f, x);
    case Letter::Phi:
        if (!phi)
            throw OpError("φ needs an h^{1,1} class to evaluate");
        return cup(f, *phi, x);
    default: throw OpError("no numeric evaluation for letter " + letter_str(l) + " on mod-2 classes");
    }
}

MotClass zero_like(const FieldPresentation& f, const OpWord& op, const MotClass& x,
                   std::optional<std::pair<int, int>> bidegree)
{
    if (op.terms.empty() && !bidegree)
        throw OpError("cannot place the zero operation without a bidegree");
    auto [d, w] = op.terms.empty() ? *bidegree : word_bidegree(*op.terms.begin());
    return zero_class(f, x.p + d, x.q + w);
}

}  // namespace

MotClass eval_word_letters(const FieldPresentation& f, const Word& w, const MotClass& x, const MotClass* phi)
{
    MotClass y = x;
    for (auto it = w.rbegin(); it != w.rend(); ++it)
        y = apply_letter(f, *it, y, phi);
    return y;
}

MotClass eval_op_letters(const FieldPresentation& f, const OpWord& op, const MotClass& x, const MotClass* phi,
                         std::optional<std::pair<int, int>> bidegree)
{
    if (op.src != Coeff::Z2 || op.tgt != Coeff::Z2)
        throw OpError("letter evaluation covers mod-2 operations only");
    MotClass out = zero_like(f, op, x, bidegree);
    for (const auto& w : op.terms)
        out = add(out, eval_word_letters(f, w, x, phi));
    return out;
}

MotClass eval_normal(const FieldPresentation& f, const OpWord& normal, const MotClass& x, const MotClass* phi,
                     std::optional<std::pair<int, int>> bidegree)
{
    if (normal.src != Coeff::Z2 || normal.tgt != Coeff::Z2)
        throw OpError("closed-form evaluation covers mod-2 operations only");
    MotClass out = zero_like(f, normal, x, bidegree);
    for (const auto& w : normal.terms) {
        if (!is_normal_word(w))
            throw OpError(word_str(w) + " is not a normal form");
        std::size_t k = 0;
        while (k < w.size() && is_coefficient(w[k]))
            ++k;
        const Word sq(w.begin() + static_cast<std::ptrdiff_t>(k), w.end());
        MotClass y;
        if (sq == Word{Letter::Sq2, Letter::Sq1})
            y = sq2sq1(f, x);
        else if (sq == Word{Letter::Sq3, Letter::Sq1})
            y = sq3sq1(f, x);
        else
            y = eval_word_letters(f, sq, x, phi);
        for (std::size_t i = k; i-- > 0;)
            y = apply_letter(f, w[i], y, phi);
        out = add(out, y);
    }
    return out;
}

}  // namespace slicess
