#include <doctest.h>

#include "fppcert/error.hpp"
#include "fppcert/invariants.hpp"
#include "random_cases.hpp"

using namespace fppcert;
using namespace fppcert::inv;

namespace {

/* Riemann-Roch on a surface with K = 3H, H^2 = 1, chi(O) = 1:
   chi(E) = r chi(O) + (c1^2 - c1.K)/2 - c2. */
std::int64_t rr_oracle(int r, int c1, int c2) { return r + (c1 * c1 - 3 * c1) / 2 - c2; }

std::vector<LineBundleClass> all_classes(int two_rank) { return classes_in_range(-10, 10, two_rank); }

}  // namespace

TEST_CASE("cohomology table for ample classes")
{
    for (int two_rank : {0, 2}) {
        for (const auto& L : classes_in_range(1, 6, two_rank)) {
            const auto h = cohomology(L);
            switch (L.degree) {
            case 1:
            case 2: CHECK(h == Cohomology{0, 0, 0}); break;
            case 3:
                if (L == LineBundleClass::omega())
                    CHECK(h == Cohomology{0, 0, 1});
                else
                    CHECK(h == Cohomology{1, 0, 0});
                break;
            case 4: CHECK(h == Cohomology{3, 0, 0}); break;
            case 5: CHECK(h == Cohomology{6, 0, 0}); break;
            case 6: CHECK(h == Cohomology{10, 0, 0}); break;
            }
        }
    }
    CHECK(cohomology(LineBundleClass::trivial()) == Cohomology{1, 0, 0});
    // nontrivial torsion: no sections, and h2 = h0(omega (x) L^-1) = 1
    CHECK(cohomology({0, 1, 0}) == Cohomology{0, 0, 1});
    CHECK(cohomology({0, 0, 3}) == Cohomology{0, 0, 1});
}

TEST_CASE("Euler characteristic, Serre duality and h1 vanishing")
{
    for (int two_rank : {0, 2})
        for (const auto& L : all_classes(two_rank)) {
            const auto h = cohomology(L);
            const std::int64_t d = L.degree;
            CHECK(h.euler() == (d * d - 3 * d) / 2 + 1);
            CHECK(chi(L) == h.euler());
            const auto dual = cohomology(LineBundleClass::omega() * L.inverse());
            CHECK(h.h0 == dual.h2);
            CHECK(h.h1 == dual.h1);
            CHECK(h.h2 == dual.h0);
            CHECK(h.h1 == 0);
            CHECK(h.h0 >= 0);
            CHECK(h.h2 >= 0);
        }
}

TEST_CASE("Picard group arithmetic")
{
    const auto classes = classes_in_range(-3, 3, 2);
    CHECK(classes.size() == 7 * 12);
    for (const auto& a : classes) {
        CHECK((a * a.inverse()).is_trivial());
        for (const auto& b : classes)
            CHECK(a * b == b * a);
    }
    CHECK(LineBundleClass::omega().is_canonical());
    CHECK_FALSE((LineBundleClass::omega() * LineBundleClass{0, 1, 0}).is_canonical());
}

TEST_CASE("Hirzebruch-Riemann-Roch")
{
    CHECK(hrr_chi(tangent_bundle()) == 8);
    for (int d = -10; d <= 10; ++d)
        CHECK(hrr_chi(line_bundle(d)) == (d - 1) * (d - 2) / 2);
    for (int i = 0; i < fppcert::testing::kPropertyCases; ++i) {
        const int r = static_cast<int>(fppcert::testing::uniform(1, 6));
        const int c1 = static_cast<int>(fppcert::testing::uniform(-20, 20));
        const int c2 = static_cast<int>(fppcert::testing::uniform(-20, 20));
        CHECK(hrr_chi({r, c1, c2}) == rr_oracle(r, c1, c2));
    }
}

TEST_CASE("surface constants")
{
    using C = SurfaceConstants;
    CHECK((C::c1_sq + C::c2) / 12 == C::chi_O);
    CHECK(C::chi_O == 1 - C::q + C::p_g);
    CHECK(betti_from_hodge() == C::betti);
    const auto b = betti_from_hodge();
    CHECK(b[0] - b[1] + b[2] - b[3] + b[4] == C::c2);
}

TEST_CASE("polyvector fields and ambient Hochschild cohomology")
{
    const auto h = polyvector_cohomology();
    CHECK(h[0] == Cohomology{1, 0, 0});
    CHECK(h[1] == Cohomology{0, 0, 8});
    CHECK(h[2] == Cohomology{0, 0, 10});
    CHECK(hh_ambient() == GradedDims{{1, 0, 0, 8, 10}});
    CHECK(hh_ambient().to_string() == "[1,0,0,8,10]");
}

TEST_CASE("torsion covers")
{
    for (int e : {1, 2, 3}) {
        const auto c = etale_cover_check(e);
        CHECK(c.chi_omega == e);
        CHECK(c.p_g == e - 1);
        CHECK(c.consistent_with_table);
        CHECK(c.summands.size() == static_cast<std::size_t>(e));
    }
    CHECK_THROWS_AS(etale_cover_check(0), Error);
}

TEST_CASE("Hochschild homology")
{
    CHECK(hh_homology_ambient() == GradedDims{{0, 0, 3, 0, 0}});
    CHECK(hh_homology_complement(3).normalized().dims.empty());
    CHECK(hh_homology_complement(2) == GradedDims{{0, 0, 1}});
    try {
        hh_homology_complement(4);
        FAIL("no error");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::NegativeDimension);
    }
}
