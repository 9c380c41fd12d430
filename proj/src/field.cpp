#include "slicess/field.hpp"
#include "slicess/steenrod.hpp"

#include <algorithm>
#include <fstream>
#include <limits>
#include <regex>
#include <set>

namespace slicess {

using json = nlohmann::json;

bool IntegralCell::operator==(const IntegralCell& o) const = default;

namespace {

std::string hname(const char* letter, int p, int q)
{
    return std::string(letter) + "^{" + std::to_string(p) + "," + std::to_string(q) + "}";
}

std::size_t mult_index(const FieldPresentation& f, int a, int b, std::size_t i, std::size_t j, std::size_t k)
{
    return (i * static_cast<std::size_t>(f.dims[b]) + j) * static_cast<std::size_t>(f.dims[a + b]) + k;
}

}  // namespace

Coords FieldPresentation::basis_product(int a, std::size_t i, int b, std::size_t j) const
{
    if (a + b > truncation)
        throw InputError("product beyond truncation: degree " + std::to_string(a + b));
    const int c = a + b;
    Coords out(static_cast<std::size_t>(dim(c)), 0);
    if (out.empty())
        return out;
    if (a == 0) {
        out[j] = 1;
        return out;
    }
    if (b == 0) {
        out[i] = 1;
        return out;
    }
    int lo = a, hi = b;
    std::size_t li = i, hj = j;
    if (a > b) {
        std::swap(lo, hi);
        std::swap(li, hj);
    }
    auto it = mult.find({lo, hi});
    if (it == mult.end())
        throw InputError("missing multiplication table for degrees (" + std::to_string(lo) + "," + std::to_string(hi) + ")");
    for (std::size_t k = 0; k < out.size(); ++k)
        out[k] = it->second[mult_index(*this, lo, hi, li, hj, k)];
    return out;
}

Coords FieldPresentation::multiply(int a, const Coords& x, int b, const Coords& y) const
{
    Coords out(static_cast<std::size_t>(dim(a + b)), 0);
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (!x[i])
            continue;
        for (std::size_t j = 0; j < y.size(); ++j) {
            if (!y[j])
                continue;
            Coords p = basis_product(a, i, b, j);
            for (std::size_t k = 0; k < out.size(); ++k)
                out[k] ^= p[k];
        }
    }
    return out;
}

const IntegralCell* FieldPresentation::find_cell(int p, int q) const
{
    for (const auto& c : cells)
        if (c.p == p && c.q == q)
            return &c;
    return nullptr;
}

ResolvedCell FieldPresentation::resolve_integral(int p, int q) const
{
    ResolvedCell r;
    r.p = p;
    r.q = q;
    const int hd = h_dim(*this, p, q);
    if (const IntegralCell* c = find_cell(p, q)) {
        r.group = c->group;
        r.pr = c->pr;
        r.divisible = c->divisible;
        r.delta = c->delta;
        r.source = CellSource::Data;
        return r;
    }
    r.pr = IntMatrix(static_cast<std::size_t>(hd), 0);
    if (p == 0 && q == 0) {
        r.group.free_rank = 1;
        r.pr = IntMatrix(1, 1);
        r.pr(0, 0) = 1;
        r.source = CellSource::Vanishing;
        return r;
    }
    if (p > q || q <= 0) {
        r.source = CellSource::Vanishing;
        return r;
    }
    if (std::find(zero_cells.begin(), zero_cells.end(), std::make_pair(p, q)) != zero_cells.end()) {
        r.source = CellSource::ZeroList;
        return r;
    }
    if (p < 0 && beilinson_soule) {
        r.source = CellSource::BeilinsonSoule;
        return r;
    }
    throw InputError("integral cell required: " + hname("H", p, q) + " for field " + name);
}

bool FieldPresentation::operator==(const FieldPresentation& o) const
{
    return name == o.name && truncation == o.truncation && dims == o.dims && basis == o.basis && rho == o.rho &&
           mult == o.mult && cells == o.cells && has_integral == o.has_integral &&
           beilinson_soule == o.beilinson_soule && zero_cells == o.zero_cells;
}

int h_dim(const FieldPresentation& f, int p, int q)
{
    if (q > f.truncation)
        throw InputError("weight " + std::to_string(q) + " beyond truncation " + std::to_string(f.truncation) +
                         " of field " + f.name);
    if (p < 0 || p > q)
        return 0;
    return f.dims[static_cast<std::size_t>(p)];
}

bool MotClass::is_zero() const
{
    return std::all_of(coords.begin(), coords.end(), [](std::uint8_t c) { return c == 0; });
}

MotClass zero_class(const FieldPresentation& f, int p, int q)
{
    return MotClass{p, q, Coords(static_cast<std::size_t>(h_dim(f, p, q)), 0)};
}

MotClass basis_class(const FieldPresentation& f, int p, int q, std::size_t i)
{
    MotClass x = zero_class(f, p, q);
    if (i >= x.coords.size())
        throw std::out_of_range("basis_class: index out of range");
    x.coords[i] = 1;
    return x;
}

MotClass tau_class(const FieldPresentation& f) { return basis_class(f, 0, 1, 0); }

MotClass rho_class(const FieldPresentation& f)
{
    MotClass r = zero_class(f, 1, 1);
    r.coords = f.rho;
    return r;
}

MotClass add(const MotClass& x, const MotClass& y)
{
    if (x.p != y.p || x.q != y.q || x.coords.size() != y.coords.size())
        throw std::logic_error("add: bidegree mismatch");
    MotClass s = x;
    for (std::size_t i = 0; i < s.coords.size(); ++i)
        s.coords[i] ^= y.coords[i];
    return s;
}

MotClass cup(const FieldPresentation& f, const MotClass& x, const MotClass& y)
{
    const int p = x.p + y.p, q = x.q + y.q;
    MotClass out = zero_class(f, p, q);
    if (out.coords.empty() || x.coords.empty() || y.coords.empty())
        return out;
    out.coords = f.multiply(x.p, x.coords, y.p, y.coords);
    return out;
}

std::string h_basis_label(const FieldPresentation& f, int p, int q, std::size_t i)
{
    const std::string& lab = f.basis.at(static_cast<std::size_t>(p)).at(i);
    const int n = q - p;
    if (n == 0)
        return lab;
    const std::string tau = n == 1 ? "τ" : "τ^" + std::to_string(n);
    return lab == "1" ? tau : tau + lab;
}

std::string class_label(const FieldPresentation& f, const MotClass& x)
{
    std::string s;
    for (std::size_t i = 0; i < x.coords.size(); ++i)
        if (x.coords[i])
            s += (s.empty() ? "" : " + ") + h_basis_label(f, x.p, x.q, i);
    return s.empty() ? "0" : s;
}

void validate_field(const FieldPresentation& f)
{
    const int N = f.truncation;
    if (N < 2)
        throw InputError("truncation must be at least 2");
    if (f.dims.size() != static_cast<std::size_t>(N) + 1)
        throw InputError("dims must list degrees 0.." + std::to_string(N));
    if (f.dims[0] != 1)
        throw InputError("dims[0] must be 1");
    if (f.basis.size() != f.dims.size())
        throw InputError("basis must list labels for degrees 0.." + std::to_string(N));
    for (int n = 0; n <= N; ++n) {
        if (f.dims[n] < 0)
            throw InputError("negative dimension in degree " + std::to_string(n));
        if (f.basis[n].size() != static_cast<std::size_t>(f.dims[n]))
            throw InputError("degree " + std::to_string(n) + " has " + std::to_string(f.basis[n].size()) +
                             " labels for dimension " + std::to_string(f.dims[n]));
    }
    if (f.rho.size() != static_cast<std::size_t>(f.dims[1]))
        throw InputError("rho must have length dims[1]");
    for (auto v : f.rho)
        if (v > 1)
            throw InputError("rho entries must be 0 or 1");
    for (const auto& [key, t] : f.mult) {
        auto [a, b] = key;
        if (a < 1 || b < a || a + b > N)
            throw InputError("multiplication table for degrees (" + std::to_string(a) + "," + std::to_string(b) +
                             ") outside 1 <= a <= b, a+b <= truncation");
        if (t.size() != static_cast<std::size_t>(f.dims[a] * f.dims[b] * f.dims[a + b]))
            throw InputError("multiplication table (" + std::to_string(a) + "," + std::to_string(b) + ") has wrong shape");
        for (auto v : t)
            if (v > 1)
                throw InputError("multiplication entries must be 0 or 1");
    }
    for (int a = 1; a <= N; ++a)
        for (int b = a; a + b <= N; ++b)
            if (f.dims[a] * f.dims[b] * f.dims[a + b] > 0 && !f.mult.count({a, b}))
                throw InputError("missing multiplication table for degrees (" + std::to_string(a) + "," +
                                 std::to_string(b) + ")");

    auto lab = [&](int d, std::size_t i) { return f.basis[d][i]; };
    for (int a = 1; 2 * a <= N; ++a)
        for (std::size_t i = 0; i < static_cast<std::size_t>(f.dims[a]); ++i)
            for (std::size_t j = 0; j < static_cast<std::size_t>(f.dims[a]); ++j)
                if (f.basis_product(a, i, a, j) != f.basis_product(a, j, a, i))
                    throw InputError("commutativity fails on basis pair (" + lab(a, i) + ", " + lab(a, j) + ")");
    for (int a = 1; a <= N; ++a)
        for (int b = 1; a + b <= N; ++b)
            for (int c = 1; a + b + c <= N; ++c)
                for (std::size_t i = 0; i < static_cast<std::size_t>(f.dims[a]); ++i)
                    for (std::size_t j = 0; j < static_cast<std::size_t>(f.dims[b]); ++j)
                        for (std::size_t k = 0; k < static_cast<std::size_t>(f.dims[c]); ++k) {
                            Coords xk(static_cast<std::size_t>(f.dims[c]), 0);
                            xk[k] = 1;
                            Coords xi(static_cast<std::size_t>(f.dims[a]), 0);
                            xi[i] = 1;
                            Coords left = f.multiply(a + b, f.basis_product(a, i, b, j), c, xk);
                            Coords right = f.multiply(a, xi, b + c, f.basis_product(b, j, c, k));
                            if (left != right)
                                throw InputError("associativity fails on basis triple (" + lab(a, i) + ", " +
                                                 lab(b, j) + ", " + lab(c, k) + ")");
                        }
    for (std::size_t i = 0; i < static_cast<std::size_t>(f.dims[1]); ++i) {
        Coords xi(static_cast<std::size_t>(f.dims[1]), 0);
        xi[i] = 1;
        if (f.basis_product(1, i, 1, i) != f.multiply(1, f.rho, 1, xi))
            throw InputError("x*x = rho*x fails on basis triple (" + lab(1, i) + ", " + lab(1, i) + ", rho)");
    }

    std::set<std::pair<int, int>> seen;
    for (const auto& c : f.cells) {
        const std::string where = hname("H", c.p, c.q);
        if (c.q < 0 || c.q > N)
            throw InputError(where + ": weight outside 0..truncation");
        if (!seen.insert({c.p, c.q}).second)
            throw InputError(where + ": duplicate integral cell");
        const FgAbGroup canon = FgAbGroup::from_orders(c.group.orders());
        if (!(canon == c.group))
            throw InputError(where + ": torsion must be a divisibility chain of factors >= 2");
        const auto hd = static_cast<std::size_t>(h_dim(f, c.p, c.q));
        const auto orders = c.group.orders();
        if (c.pr.rows() != hd || c.pr.cols() != orders.size())
            throw InputError(where + ": pr_matrix shape must be dim h x generators");
        for (std::size_t g = 0; g < orders.size(); ++g)
            if (orders[g] != 0 && orders[g] % 2 != 0)
                for (std::size_t r = 0; r < hd; ++r)
                    if (c.pr(r, g) % 2 != 0)
                        throw InputError(where + ": pr is nonzero on a generator of odd order");
        if (c.p == c.q && hd > 0) {
            F2Matrix m(hd, orders.size());
            for (std::size_t r = 0; r < hd; ++r)
                for (std::size_t g = 0; g < orders.size(); ++g)
                    m.set(r, g, c.pr(r, g) % 2 != 0);
            if (f2_rank_kernel_image(m).rank != hd)
                throw InputError(where + ": pr must be onto the diagonal k^M");
        }
        if (c.delta) {
            const auto sd = static_cast<std::size_t>(h_dim(f, c.p - 1, c.q));
            if (c.delta->rows() != orders.size() || c.delta->cols() != sd)
                throw InputError(where + ": delta_matrix shape must be generators x dim h^{p-1,q}");
        }
    }
    for (const auto& [p, q] : f.zero_cells)
        if (f.find_cell(p, q))
            throw InputError(hname("H", p, q) + " is both listed as zero and given as data");

    // pr(delta x) = Sq1 x wherever both sides are defined
    for (const auto& c : f.cells) {
        if (c.p - 1 < 0 || c.q < 1)
            continue;
        ResolvedCell rc = f.resolve_integral(c.p, c.q);
        const int sd = h_dim(f, c.p - 1, c.q);
        for (int i = 0; i < sd; ++i) {
            MotClass x = basis_class(f, c.p - 1, c.q, static_cast<std::size_t>(i));
            IntClass d = bockstein(f, rc, x);
            if (!(reduce_mod2(f, rc, d) == sq1(f, x)))
                throw InputError(hname("H", c.p, c.q) + ": pr(delta x) != Sq1 x on basis class " + class_label(f, x));
        }
    }
}

namespace {

BigInt json_bigint(const json& v)
{
    if (v.is_number_integer())
        return BigInt(v.get<long long>());
    if (v.is_string())
        return BigInt(v.get<std::string>());
    throw InputError("expected an integer");
}

json bigint_json(const BigInt& b)
{
    if (b <= std::numeric_limits<long long>::max() && b >= std::numeric_limits<long long>::min())
        return json(static_cast<long long>(b));
    return json(b.str());
}

IntMatrix json_matrix(const json& m, std::size_t rows, std::size_t cols, const std::string& what)
{
    if (!m.is_array() || m.size() != rows)
        throw InputError(what + ": expected " + std::to_string(rows) + " rows");
    IntMatrix out(rows, cols);
    for (std::size_t r = 0; r < rows; ++r) {
        if (!m[r].is_array() || m[r].size() != cols)
            throw InputError(what + ": expected " + std::to_string(cols) + " columns");
        for (std::size_t c = 0; c < cols; ++c)
            out(r, c) = json_bigint(m[r][c]);
    }
    return out;
}

json matrix_json(const IntMatrix& m)
{
    json a = json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        json row = json::array();
        for (std::size_t c = 0; c < m.cols(); ++c)
            row.push_back(bigint_json(m(r, c)));
        a.push_back(row);
    }
    return a;
}

}  // namespace

FieldPresentation load_field(const json& doc)
{
    try {
        FieldPresentation f;
        f.name = doc.at("name").get<std::string>();
        f.truncation = doc.at("truncation").get<int>();
        if (f.truncation < 2)
            throw InputError("truncation must be at least 2");
        const json& m = doc.at("milnor");
        f.dims = m.at("dims").get<std::vector<int>>();
        f.basis = m.at("basis").get<std::vector<std::vector<std::string>>>();
        for (auto v : m.at("rho").get<std::vector<int>>())
            f.rho.push_back(static_cast<std::uint8_t>(v));
        if (f.dims.size() != static_cast<std::size_t>(f.truncation) + 1)
            throw InputError("dims must list degrees 0.." + std::to_string(f.truncation));
        for (int d : f.dims)
            if (d < 0)
                throw InputError("negative dimension in dims");
        for (const auto& e : m.at("mult")) {
            int a = e.at("deg_a").get<int>(), b = e.at("deg_b").get<int>();
            if (a < 1 || b < 1 || a + b > f.truncation)
                throw InputError("multiplication table degrees out of range");
            const auto& t = e.at("table");
            const auto da = static_cast<std::size_t>(f.dims[a]), db = static_cast<std::size_t>(f.dims[b]),
                       dc = static_cast<std::size_t>(f.dims[a + b]);
            if (t.size() != da)
                throw InputError("multiplication table (" + std::to_string(a) + "," + std::to_string(b) + ") has wrong shape");
            std::vector<std::uint8_t> flat(da * db * dc);
            for (std::size_t i = 0; i < da; ++i) {
                if (t[i].size() != db)
                    throw InputError("multiplication table (" + std::to_string(a) + "," + std::to_string(b) + ") has wrong shape");
                for (std::size_t j = 0; j < db; ++j) {
                    if (t[i][j].size() != dc)
                        throw InputError("multiplication table (" + std::to_string(a) + "," + std::to_string(b) + ") has wrong shape");
                    for (std::size_t k = 0; k < dc; ++k) {
                        int v = t[i][j][k].get<int>();
                        if (v != 0 && v != 1)
                            throw InputError("multiplication entries must be 0 or 1");
                        // stored with the lower degree first
                        std::size_t idx = a <= b ? (i * db + j) * dc + k : (j * da + i) * dc + k;
                        flat[idx] = static_cast<std::uint8_t>(v);
                    }
                }
            }
            std::pair<int, int> key{std::min(a, b), std::max(a, b)};
            auto it = f.mult.find(key);
            if (it != f.mult.end() && it->second != flat)
                throw InputError("commutativity fails: tables (" + std::to_string(a) + "," + std::to_string(b) +
                                 ") and its transpose disagree");
            f.mult[key] = flat;
        }
        if (doc.contains("integral")) {
            f.has_integral = true;
            const json& in = doc.at("integral");
            if (in.contains("flags")) {
                const json& fl = in.at("flags");
                f.beilinson_soule = fl.value("beilinson_soule", false);
                if (fl.contains("zero_cells"))
                    for (const auto& z : fl.at("zero_cells"))
                        f.zero_cells.emplace_back(z.at(0).get<int>(), z.at(1).get<int>());
            }
            for (const auto& c : in.value("cells", json::array())) {
                IntegralCell cell;
                cell.p = c.at("p").get<int>();
                cell.q = c.at("q").get<int>();
                if (cell.q < 0 || cell.q > f.truncation)
                    throw InputError(hname("H", cell.p, cell.q) + ": weight outside 0..truncation");
                cell.group.free_rank = c.at("free_rank").get<std::size_t>();
                for (const auto& t : c.at("torsion"))
                    cell.group.torsion.push_back(json_bigint(t));
                cell.divisible = c.value("divisible", false);
                const std::size_t hd = (cell.p >= 0 && cell.p <= cell.q) ? static_cast<std::size_t>(f.dims[cell.p]) : 0;
                cell.pr = json_matrix(c.at("pr_matrix"), hd, cell.group.generators(), hname("H", cell.p, cell.q) + " pr_matrix");
                if (c.contains("delta_matrix")) {
                    const int sp = cell.p - 1;
                    const std::size_t sd = (sp >= 0 && sp <= cell.q) ? static_cast<std::size_t>(f.dims[sp]) : 0;
                    cell.delta = json_matrix(c.at("delta_matrix"), cell.group.generators(), sd,
                                             hname("H", cell.p, cell.q) + " delta_matrix");
                }
                f.cells.push_back(cell);
            }
        }
        validate_field(f);
        return f;
    } catch (const json::exception& e) {
        throw InputError(std::string("field document schema error: ") + e.what());
    }
}

FieldPresentation load_field_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw InputError("cannot open field document " + path);
    json doc;
    try {
        in >> doc;
    } catch (const json::exception& e) {
        throw InputError("field document " + path + " is not valid JSON: " + e.what());
    }
    return load_field(doc);
}

json emit_field(const FieldPresentation& f)
{
    json doc;
    doc["name"] = f.name;
    doc["truncation"] = f.truncation;
    json m;
    m["dims"] = f.dims;
    m["basis"] = f.basis;
    std::vector<int> rho(f.rho.begin(), f.rho.end());
    m["rho"] = rho;
    json mult = json::array();
    for (const auto& [key, t] : f.mult) {
        auto [a, b] = key;
        const auto da = static_cast<std::size_t>(f.dims[a]), db = static_cast<std::size_t>(f.dims[b]),
                   dc = static_cast<std::size_t>(f.dims[a + b]);
        json tab = json::array();
        for (std::size_t i = 0; i < da; ++i) {
            json row = json::array();
            for (std::size_t j = 0; j < db; ++j) {
                json v = json::array();
                for (std::size_t k = 0; k < dc; ++k)
                    v.push_back(static_cast<int>(t[(i * db + j) * dc + k]));
                row.push_back(v);
            }
            tab.push_back(row);
        }
        mult.push_back({{"deg_a", a}, {"deg_b", b}, {"table", tab}});
    }
    m["mult"] = mult;
    doc["milnor"] = m;
    if (f.has_integral) {
        json cells = json::array();
        for (const auto& c : f.cells) {
            json jc;
            jc["p"] = c.p;
            jc["q"] = c.q;
            jc["free_rank"] = c.group.free_rank;
            json tor = json::array();
            for (const auto& t : c.group.torsion)
                tor.push_back(bigint_json(t));
            jc["torsion"] = tor;
            jc["pr_matrix"] = matrix_json(c.pr);
            jc["divisible"] = c.divisible;
            if (c.delta)
                jc["delta_matrix"] = matrix_json(*c.delta);
            cells.push_back(jc);
        }
        json zc = json::array();
        for (const auto& [p, q] : f.zero_cells)
            zc.push_back({p, q});
        doc["integral"] = {{"cells", cells}, {"flags", {{"beilinson_soule", f.beilinson_soule}, {"zero_cells", zc}}}};
    }
    return doc;
}

namespace {

bool odd_prime(long long p)
{
    if (p < 3 || p % 2 == 0)
        return false;
    for (long long d = 3; d * d <= p; d += 2)
        if (p % d == 0)
            return false;
    return true;
}

bool odd_prime_power(long long q)
{
    if (q < 3 || q % 2 == 0)
        return false;
    long long p = 3;
    while (q % p != 0)
        p += 2;
    while (q % p == 0)
        q /= p;
    return q == 1 && odd_prime(p);
}

IntegralCell make_cell(const FieldPresentation& f, int p, int q, const std::vector<BigInt>& orders, bool divisible,
                       const std::vector<std::vector<long long>>& pr)
{
    IntegralCell c;
    c.p = p;
    c.q = q;
    c.group = FgAbGroup::from_orders(orders);
    c.divisible = divisible;
    const auto hd = static_cast<std::size_t>(h_dim(f, p, q));
    c.pr = IntMatrix(hd, c.group.generators());
    for (std::size_t r = 0; r < hd && r < pr.size(); ++r)
        for (std::size_t g = 0; g < c.group.generators() && g < pr[r].size(); ++g)
            c.pr(r, g) = pr[r][g];
    return c;
}

void fill_basic(FieldPresentation& f, const std::vector<int>& low_dims)
{
    f.dims.assign(static_cast<std::size_t>(f.truncation) + 1, 0);
    for (std::size_t i = 0; i < low_dims.size() && i < f.dims.size(); ++i)
        f.dims[i] = low_dims[i];
    f.basis.assign(f.dims.size(), {});
    f.basis[0] = {"1"};
}

}  // namespace

FieldPresentation preset_field(const std::string& kind, int param, int truncation)
{
    if (truncation < 2)
        throw InputError("truncation must be at least 2");
    FieldPresentation f;
    f.truncation = truncation;
    f.has_integral = true;
    f.beilinson_soule = true;
    const int N = truncation;
    if (kind == "quadratically_closed") {
        f.name = "quadratically_closed";
        fill_basic(f, {1});
        f.cells.push_back(make_cell(f, 0, 0, {0}, false, {{1}}));
        for (int b = 2; b <= N; b += 2) {
            f.cells.push_back(make_cell(f, 1, b, {}, true, {}));
            f.cells.push_back(make_cell(f, b, b, {}, true, {}));
            f.zero_cells.emplace_back(0, b);
            for (int a = 2; a < b; ++a)
                f.zero_cells.emplace_back(a, b);
        }
    } else if (kind == "real_closed") {
        f.name = "real_closed";
        fill_basic(f, std::vector<int>(static_cast<std::size_t>(N) + 1, 1));
        for (int n = 1; n <= N; ++n)
            f.basis[n] = {n == 1 ? "ρ" : "ρ^" + std::to_string(n)};
        f.rho = {1};
        for (int a = 1; a <= N; ++a)
            for (int b = a; a + b <= N; ++b)
                f.mult[{a, b}] = {1};
        f.cells.push_back(make_cell(f, 0, 0, {0}, false, {{1}}));
        for (int b = 2; b <= N; b += 2) {
            f.zero_cells.emplace_back(0, b);
            f.cells.push_back(make_cell(f, 1, b, {}, true, {}));
            for (int a = 2; a < b; ++a) {
                if (a % 2 == 0)
                    f.cells.push_back(make_cell(f, a, b, {2}, false, {{1}}));
                else
                    f.zero_cells.emplace_back(a, b);
            }
            f.cells.push_back(make_cell(f, b, b, {2}, true, {{1}}));
        }
    } else if (kind == "finite") {
        if (!odd_prime_power(param))
            throw InputError("finite field preset needs an odd prime power, got " + std::to_string(param));
        f.name = "finite(" + std::to_string(param) + ")";
        fill_basic(f, {1, 1});
        f.basis[1] = {"[u]"};
        f.rho = {static_cast<std::uint8_t>(param % 4 == 3 ? 1 : 0)};
        f.cells.push_back(make_cell(f, 0, 0, {0}, false, {{1}}));
        for (int b = 2; b <= N; b += 2) {
            BigInt order = pow(BigInt(param), static_cast<unsigned>(b)) - 1;
            IntegralCell c = make_cell(f, 1, b, {order}, false, {{1}});
            c.delta = IntMatrix(1, 1);
            (*c.delta)(0, 0) = order / 2;
            f.cells.push_back(c);
            f.zero_cells.emplace_back(0, b);
            for (int a = 2; a <= b; ++a)
                f.zero_cells.emplace_back(a, b);
        }
    } else if (kind == "local") {
        if (!odd_prime(param))
            throw InputError("local field preset needs an odd prime p (dyadic fields are not supported), got " +
                             std::to_string(param));
        f.name = "local(" + std::to_string(param) + ")";
        fill_basic(f, {1, 2, 1});
        f.basis[1] = {"[u]", "[π]"};
        f.basis[2] = {"[u][π]"};
        const bool three = param % 4 == 3;
        f.rho = {static_cast<std::uint8_t>(three ? 1 : 0), 0};
        // {u,u}, {u,π}, {π,u}, {π,π} via the Hilbert symbol
        f.mult[{1, 1}] = {0, 1, 1, static_cast<std::uint8_t>(three ? 1 : 0)};
        f.cells.push_back(make_cell(f, 0, 0, {0}, false, {{1}}));
        const long long w2 = param == 3 ? 24 : static_cast<long long>(param) * param - 1;
        IntegralCell h12 = make_cell(f, 1, 2, {w2}, true, {{1}, {0}});
        h12.delta = IntMatrix(1, 1);
        (*h12.delta)(0, 0) = w2 / 2;
        f.cells.push_back(h12);
        IntegralCell h22 = make_cell(f, 2, 2, {param - 1}, true, {{1}});
        h22.delta = IntMatrix(1, 2);
        (*h22.delta)(0, 1) = (param - 1) / 2;
        f.cells.push_back(h22);
        f.zero_cells.emplace_back(0, 2);
        for (int b = 4; b <= N; b += 2) {
            f.cells.push_back(make_cell(f, b, b, {}, true, {}));
            f.zero_cells.emplace_back(0, b);
        }
        if (N >= 4)
            f.zero_cells.emplace_back(3, 4);
    } else {
        throw InputError("unknown preset kind: " + kind);
    }
    validate_field(f);
    return f;
}

FieldPresentation preset_by_name(const std::string& text, int truncation)
{
    static const std::regex param_re(R"(^(finite|local)\s*[(:]\s*(\d+)\s*\)?$)");
    std::smatch m;
    if (text == "quadratically_closed" || text == "qc" || text == "complex")
        return preset_field("quadratically_closed", 0, truncation);
    if (text == "real_closed" || text == "real")
        return preset_field("real_closed", 0, truncation);
    if (std::regex_match(text, m, param_re))
        return preset_field(m[1].str(), std::stoi(m[2].str()), truncation);
    throw InputError("unknown field preset: " + text);
}

std::vector<std::string> preset_names()
{
    return {"quadratically_closed", "real_closed", "finite(q)", "local(p)"};
}

}  // namespace slicess
