#include "slicess/engine.hpp"

#include <doctest.h>

using namespace slicess;

namespace {

const std::vector<std::string> all_presets = {"quadratically_closed", "real_closed", "finite(5)", "finite(7)",
                                              "finite(9)", "local(5)", "local(7)"};

std::size_t f2_rank_of(const IntMatrix& m)
{
    F2Matrix b(m.rows(), m.cols());
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c)
            b.set(r, c, m(r, c) % 2 != 0);
    return f2_rank_kernel_image(b).rank;
}

}  // namespace

TEST_CASE("E2 groups")
{
    const auto real = preset_by_name("real");
    const auto g = e2_group(Spectrum::KT, real, 0, 3);
    CHECK(g.str() == "Z/2");
    REQUIRE(g.comps.size() == 1);
    CHECK(g.comps[0].labels == std::vector<std::string>{"ρ^3"});
    for (const auto& name : all_presets)
        for (int q = 0; q <= 8; ++q)
            CHECK(e2_group(Spectrum::KT, preset_by_name(name), 1, q).zero());
    CHECK(e2_group(Spectrum::KQ, preset_by_name("finite(5)"), 2, 2).str() == "Z/2");
    CHECK_THROWS_AS(e2_group(Spectrum::KGLhC2, real, 0, 0), InputError);
    CHECK_THROWS_AS(e2_group(Spectrum::KT, real, 0, 12), InputError);
    CHECK_NOTHROW(e2_group(Spectrum::KT, preset_by_name("real", 13), 0, 12));
}

TEST_CASE("KT collapses to the diagonal")
{
    const auto real = check_collapse_kt(preset_by_name("real"), Window{-8, 8, 0, 10});
    CHECK(real.ok());
    CHECK(real.cells == 17 * 11);
    const auto qc = preset_by_name("qc");
    for (int q = 0; q <= 6; ++q)
        for (int p = -4; p <= 8; ++p)
            CHECK(e2_group(Spectrum::KT, qc, p, q).zero() == !(q == 0 && p % 4 == 0));
    const auto f7 = preset_by_name("finite(7)");
    for (int q = 0; q <= 8; ++q)
        for (int p : {-4, 0, 4, 8})
            CHECK(e2_group(Spectrum::KT, f7, p, q).f2_dim() == (q <= 1 ? 1 : 0));
    for (const auto& name : all_presets) {
        CAPTURE(name);
        const auto f = preset_by_name(name);
        CHECK(check_collapse_kt(f, Window{-8, 8, 0, 10}).ok());
        CHECK(check_split_injective_kt(f, Window{-8, 8, 0, 10}).ok());
    }
}

TEST_CASE("property: homology dimension count on KT and KGL/2 cells")
{
    for (const auto& name : all_presets) {
        CAPTURE(name);
        const auto f = preset_by_name(name);
        for (Spectrum e : {Spectrum::KT, Spectrum::KGL2})
            for (int q = 0; q <= 8; ++q)
                for (int p = -4; p <= 6; ++p) {
                    const E2Cell c = compute_e2(e, f, p, q);
                    REQUIRE(c.e1.pure_mod2());
                    const auto out_rank = f2_rank_of(c.out.total()), in_rank = f2_rank_of(c.in.total());
                    CHECK(static_cast<std::size_t>(c.e1.f2_dim() - c.e2.f2_dim()) == out_rank + in_rank);
                    CHECK(c.reps.size() == static_cast<std::size_t>(c.e2.f2_dim()));
                }
    }
}

TEST_CASE("graded Witt ring")
{
    CHECK(graded_witt(preset_by_name("real"), 5).dims == std::vector<int>{1, 1, 1, 1, 1, 1});
    CHECK(graded_witt(preset_by_name("qc"), 4).dims == std::vector<int>{1, 0, 0, 0, 0});
    for (const auto& name : {"finite(5)", "finite(7)", "finite(9)"})
        CHECK(graded_witt(preset_by_name(name), 4).dims == std::vector<int>{1, 1, 0, 0, 0});
    for (const auto& name : all_presets) {
        const auto f = preset_by_name(name);
        const auto w = graded_witt(f, 11);
        for (int q = 0; q <= 11; ++q)
            CHECK(w.dims[static_cast<std::size_t>(q)] == f.dims[static_cast<std::size_t>(q)]);
    }
    CHECK_THROWS_AS(graded_witt(preset_by_name("real"), 12), InputError);
}

TEST_CASE("KT filtration groups")
{
    const auto real = preset_by_name("real");
    const auto r1 = kt_filtration_groups(real, 1, 5);
    CHECK(r1.groups == std::vector<std::pair<int, int>>{{4, 5}, {0, 5}});
    CHECK(r1.dim == 2);
    for (const auto& name : all_presets)
        CHECK(kt_filtration_groups(preset_by_name(name), 2, 1).dim == 0);
    const auto f7 = kt_filtration_groups(preset_by_name("finite(7)"), 3, 4);
    CHECK(f7.groups == std::vector<std::pair<int, int>>{{1, 4}});
    CHECK(f7.dim == 1);
    CHECK(kt_filtration_groups(real, -1, 4).groups == f7.groups);
    CHECK(kt_filtration_groups(real, 0, 4).tail);
    for (const auto& name : all_presets) {
        CAPTURE(name);
        const auto rep = kt_filtration_crosscheck(preset_by_name(name), Window{-4, 4, 0, 10});
        CHECK(rep.ok());
        CHECK(rep.checked > 0);
    }
}

TEST_CASE("KQ columns and low-degree KO")
{
    const auto f5 = preset_by_name("finite(5)");
    const auto col2 = kq_e2_column(f5, 2, 6);
    REQUIRE(col2.size() == 7);
    CHECK(col2[2].e2.str() == "Z/2");
    const auto col3 = kq_e2_column(f5, 3, 6);
    CHECK(col3[2].e2.str() == "Z/12");
    CHECK(col3[3].e2.str() == "Z/2");
    for (const auto& name : all_presets)
        if (preset_by_name(name).has_integral)
            CHECK(kq_e2_column(preset_by_name(name), 1, 4)[1].e2.str() == "Z/2");

    const auto ko7 = ko_low_degree(preset_by_name("finite(7)"));
    CHECK(ko7.ko2.str() == "Z/2");
    const auto ko5 = ko_low_degree(f5);
    CHECK(ko5.ko3_sub.str() == "Z/2");
    CHECK(ko5.ko3_quotient.str() == "Z/12");
    CHECK_FALSE(ko5.lines().empty());
    CHECK(ko_low_degree(preset_by_name("local(7)")).ko2.str() == "Z/6 + D");
}

TEST_CASE("page regions")
{
    const auto f = preset_by_name("local(7)");
    const auto reg = e2_region(Spectrum::KQ, f, Window{0, 4, 0, 6}, "inf");
    CHECK(reg.page == "inf");
    CHECK(reg.cells.size() == 5 * 7);
    CHECK(reg.homs.empty());
    bool conditional = false, uncertified = false;
    for (const auto& [cell, note] : reg.notes) {
        conditional = conditional || note.find("conditional") != std::string::npos;
        uncertified = uncertified || note.find("not E-infinity-certified") != std::string::npos;
    }
    CHECK(conditional);
    CHECK(uncertified);
    CHECK(e2_region(Spectrum::KT, f, Window{0, 4, 0, 6}, "inf").notes.empty());
    CHECK(e2_region(Spectrum::KT, f, Window{1, 0, 0, 6}).cells.empty());
    CHECK_THROWS_AS(e2_region(Spectrum::KGL, f, Window{0, 1, 0, 1}), InputError);
    // repeated evaluation is identical
    const auto again = e2_region(Spectrum::KQ, f, Window{0, 4, 0, 6}, "inf");
    for (const auto& [cell, g] : reg.cells)
        CHECK(again.cells.at(cell).str() == g.str());
}
