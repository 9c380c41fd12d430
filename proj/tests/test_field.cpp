#include "oracle.hpp"

#include "slicess/field.hpp"

#include <doctest.h>

using namespace slicess;
using nlohmann::json;

namespace {

const std::vector<std::string> all_presets = {"quadratically_closed", "real_closed", "finite(5)", "finite(7)",
                                              "finite(9)", "local(5)", "local(7)"};

json real_document()
{
    return emit_field(preset_by_name("real_closed", 4));
}

}  // namespace

TEST_CASE("presets and hand-built documents validate")
{
    for (const auto& name : all_presets) {
        CAPTURE(name);
        CHECK_NOTHROW(validate_field(preset_by_name(name)));
    }
    const auto qc = preset_by_name("quadratically_closed");
    CHECK(qc.dims[0] == 1);
    for (int n = 1; n <= qc.truncation; ++n)
        CHECK(qc.dims[static_cast<std::size_t>(n)] == 0);
    const auto real = preset_by_name("real");
    for (int n = 0; n <= real.truncation; ++n)
        CHECK(real.dims[static_cast<std::size_t>(n)] == 1);
    // ρ^a ρ^b = ρ^{a+b}
    for (int a = 1; a <= 4; ++a)
        for (int b = 1; b <= 4; ++b)
            CHECK(real.basis_product(a, 0, b, 0) == Coords{1});
}

TEST_CASE("documents violating x*x = rho*x are rejected")
{
    json doc = real_document();
    doc["milnor"]["rho"] = json::array({0});
    CHECK_THROWS_AS(load_field(doc), InputError);
}

TEST_CASE("malformed documents are rejected")
{
    SUBCASE("rho of the wrong length")
    {
        json doc = real_document();
        doc["milnor"]["rho"] = json::array({1, 0});
        CHECK_THROWS_AS(load_field(doc), InputError);
    }
    SUBCASE("non-commutative product")
    {
        json doc = emit_field(preset_by_name("local(5)", 4));
        auto& t = doc["milnor"]["mult"][0]["table"];
        t[0][1][0] = 1 - t[0][1][0].get<int>();
        CHECK_THROWS_AS(load_field(doc), InputError);
    }
    SUBCASE("dims longer than the basis")
    {
        json doc = real_document();
        doc["milnor"]["dims"][1] = 2;
        CHECK_THROWS_AS(load_field(doc), InputError);
    }
    SUBCASE("missing milnor block")
    {
        json doc = real_document();
        doc.erase("milnor");
        CHECK_THROWS(load_field(doc));
    }
}

TEST_CASE("field documents round-trip")
{
    for (const auto& name : all_presets) {
        CAPTURE(name);
        const auto f = preset_by_name(name);
        const json doc = emit_field(f);
        const auto g = load_field(doc);
        CHECK(g == f);
        CHECK(emit_field(g).dump() == doc.dump());
    }
}

TEST_CASE("motivic cohomology dimensions")
{
    CHECK(h_dim(preset_by_name("real"), 2, 5) == 1);
    for (const auto& name : all_presets)
        CHECK(h_dim(preset_by_name(name), 3, 1) == 0);
    CHECK(h_dim(preset_by_name("finite(5)"), 2, 4) == 0);
    CHECK(h_dim(preset_by_name("finite(5)"), 1, 4) == 1);
    CHECK_THROWS_AS(h_dim(preset_by_name("real"), 0, 13), InputError);
    CHECK(h_dim(preset_by_name("real", 13), 0, 13) == 1);
}

TEST_CASE("cup products of tau and rho")
{
    const auto real = preset_by_name("real");
    const auto tt = cup(real, tau_class(real), tau_class(real));
    CHECK(tt.p == 0);
    CHECK(tt.q == 2);
    CHECK(tt.coords == Coords{1});
    CHECK_FALSE(cup(real, rho_class(real), rho_class(real)).is_zero());
    const auto f7 = preset_by_name("finite(7)");
    CHECK_FALSE(rho_class(f7).is_zero());
    CHECK(cup(f7, rho_class(f7), rho_class(f7)).is_zero());
    CHECK(rho_class(preset_by_name("finite(5)")).is_zero());
}

TEST_CASE("finite-field presets agree with brute-force square classes and symbols")
{
    for (int q : {5, 7, 9}) {
        CAPTURE(q);
        const oracle::FiniteField F(q);
        int squares = 0;
        for (int x = 1; x < q; ++x)
            squares += F.is_square(x) ? 1 : 0;
        const int classes = (q - 1) / squares;
        int dim1 = 0;
        while ((1 << dim1) < classes)
            ++dim1;
        // every symbol {a,b} vanishes: a x^2 + b y^2 = 1 always has a solution
        bool all_symbols_trivial = true;
        for (int a = 1; a < q; ++a)
            for (int b = 1; b < q; ++b) {
                bool solved = false;
                for (int x = 0; x < q && !solved; ++x)
                    for (int y = 0; y < q && !solved; ++y)
                        solved = F.add(F.mul(a, F.mul(x, x)), F.mul(b, F.mul(y, y))) == 1;
                all_symbols_trivial = all_symbols_trivial && solved;
            }
        const auto f = preset_by_name("finite(" + std::to_string(q) + ")");
        CHECK(f.dims[1] == dim1);
        CHECK(f.dims[2] == (all_symbols_trivial ? 0 : 1));
        CHECK(rho_class(f).is_zero() == F.is_square(F.neg(1)));
    }
}

TEST_CASE("local-field presets agree with the brute-force Hilbert symbol")
{
    for (int p : {5, 7}) {
        CAPTURE(p);
        const auto f = preset_by_name("local(" + std::to_string(p) + ")");
        REQUIRE(f.dims[1] == 2);
        REQUIRE(f.dims[2] == 1);
        CHECK(f.basis[1] == std::vector<std::string>{"[u]", "[π]"});
        // ρ = [-1] is [u] exactly when -1 is not a square mod p
        CHECK(rho_class(f).coords == Coords{static_cast<std::uint8_t>(oracle::minus_one_is_square_mod(p) ? 0 : 1), 0});
        // classes u^i π^j, (i,j) != (0,0)
        const std::vector<std::pair<int, int>> reps = {{1, 0}, {0, 1}, {1, 1}};
        for (auto [au, api] : reps)
            for (auto [bu, bpi] : reps) {
                const Coords x = {static_cast<std::uint8_t>(au), static_cast<std::uint8_t>(api)};
                const Coords y = {static_cast<std::uint8_t>(bu), static_cast<std::uint8_t>(bpi)};
                const bool nonzero = f.multiply(1, x, 1, y) != Coords{0};
                CAPTURE(au);
                CAPTURE(api);
                CAPTURE(bu);
                CAPTURE(bpi);
                CHECK(nonzero == (oracle::hilbert_symbol(p, api, au, bpi, bu) == -1));
            }
    }
}

TEST_CASE("property: ring axioms on every basis triple of every preset")
{
    for (const auto& name : all_presets) {
        CAPTURE(name);
        const auto f = preset_by_name(name, 8);
        const MotClass tau = tau_class(f);
        for (int a = 0; a <= 4; ++a)
            for (int qa = a; qa <= a + 2; ++qa)
                for (int i = 0; i < h_dim(f, a, qa); ++i) {
                    const auto x = basis_class(f, a, qa, static_cast<std::size_t>(i));
                    // τ multiplication is the identity on coordinates
                    const auto tx = cup(f, tau, x);
                    CHECK(tx.p == a);
                    CHECK(tx.q == qa + 1);
                    CHECK(tx.coords == x.coords);
                    for (int b = 0; a + b <= 4; ++b)
                        for (int j = 0; j < h_dim(f, b, b); ++j) {
                            const auto y = basis_class(f, b, b, static_cast<std::size_t>(j));
                            const auto xy = cup(f, x, y), yx = cup(f, y, x);
                            CHECK(xy == yx);
                            for (int c = 0; a + b + c <= 4; ++c)
                                for (int k = 0; k < h_dim(f, c, c); ++k) {
                                    const auto z = basis_class(f, c, c, static_cast<std::size_t>(k));
                                    CHECK(cup(f, xy, z) == cup(f, x, cup(f, y, z)));
                                }
                        }
                }
        for (int i = 0; i < h_dim(f, 1, 1); ++i) {
            const auto x = basis_class(f, 1, 1, static_cast<std::size_t>(i));
            CHECK(cup(f, x, x) == cup(f, rho_class(f), x));
        }
    }
}

TEST_CASE("preset names")
{
    CHECK(preset_by_name("finite:5") == preset_by_name("finite(5)"));
    CHECK(preset_by_name("qc") == preset_by_name("quadratically_closed"));
    CHECK_THROWS_AS(preset_by_name("finite(6)"), InputError);
    CHECK_THROWS_AS(preset_by_name("nonsense"), InputError);
    CHECK_FALSE(preset_names().empty());
}
