#include <doctest.h>

#include <algorithm>

#include "fppcert/lattice.hpp"
#include "random_cases.hpp"

using namespace fppcert;
using namespace fppcert::lattice;
using ext::CubicElem;
using ext::LambdaElem;
using ext::QuadElem;
using fppcert::testing::kPropertyCases;
using fppcert::testing::random_mpq;
using fppcert::testing::uniform;

namespace {

/* Leibniz formula: sum over permutations of sign * product. */
template <class T>
T leibniz_det(const Mat3<T>& a, const T& zero)
{
    std::array<int, 3> p{0, 1, 2};
    T total = zero;
    do {
        int inversions = 0;
        for (int i = 0; i < 3; ++i)
            for (int j = i + 1; j < 3; ++j)
                inversions += p[static_cast<std::size_t>(i)] > p[static_cast<std::size_t>(j)];
        T term = a.m[0][static_cast<std::size_t>(p[0])] * a.m[1][static_cast<std::size_t>(p[1])];
        term = term * a.m[2][static_cast<std::size_t>(p[2])];
        total = inversions % 2 ? T(total - term) : T(total + term);
    } while (std::next_permutation(p.begin(), p.end()));
    return total;
}

template <class T, class Gen>
Mat3<T> random_matrix(Gen&& gen)
{
    Mat3<T> m;
    for (auto& row : m.m)
        for (auto& x : row)
            x = gen();
    return m;
}

mpq_class small_q() { return random_mpq(10); }
QuadElem small_quad() { return {random_mpq(8), random_mpq(8)}; }
LambdaElem small_lambda()
{
    return LambdaElem::monomial(static_cast<int>(uniform(-2, 2)), random_mpq(6)) +
           LambdaElem::monomial(static_cast<int>(uniform(-2, 2)), random_mpq(6));
}

template <class T, class Gen>
void check_det_laws(Gen&& gen, const T& zero)
{
    for (int i = 0; i < kPropertyCases; ++i) {
        const auto a = random_matrix<T>(gen), b = random_matrix<T>(gen);
        CHECK(det(a) == leibniz_det(a, zero));
        CHECK(det(a * b) == det(a) * det(b));
        const T c = gen();
        CHECK(det(c * a) == c * c * c * det(a));
    }
}

}  // namespace

TEST_CASE("determinant laws over Q") { check_det_laws<mpq_class>(small_q, mpq_class(0)); }
TEST_CASE("determinant laws over Q(S)") { check_det_laws<QuadElem>(small_quad, QuadElem(0)); }
TEST_CASE("determinant laws over Q(lambda)") { check_det_laws<LambdaElem>(small_lambda, LambdaElem(0)); }

TEST_CASE("Mumford generators")
{
    const auto g = mumford_generators();
    const LambdaElem lam = LambdaElem::lambda();
    CHECK(det(g.sigma) == LambdaElem(1));
    CHECK(det(g.tau) == LambdaElem(1));
    CHECK(det(g.rho) == lam * lam * LambdaElem(mpq_class(1, 2)));
    CHECK(leibniz_det(g.rho, LambdaElem(0)) == det(g.rho));
    CHECK(ext::valuation(det(g.rho)) == 1);
    const auto r = certify_mumford();
    CHECK_FALSE(r.any_refuted());
    CHECK(r.claims().size() == 4);
}

TEST_CASE("Mumford claims hold for specialised units")
{
    for (long u : {1L, 3L, -5L, 7L, 101L, -12345L})
        CHECK_FALSE(certify_mumford_at_unit(u, 64).any_refuted());
    CHECK_THROWS_AS(certify_mumford_at_unit(2, 64), Error);
}

TEST_CASE("negative controls")
{
    // lambda -> 4u: det(rho) picks up valuation 3 and becomes a cube times a unit
    const auto bad = mumford_generators(LambdaElem::monomial(1, 2));
    const auto r = certify_mumford(bad);
    CHECK(r.find("mumford.det_rho_valuation").status == Status::Refuted);
    CHECK(r.find("mumford.det_rho_noncube").status == Status::Refuted);
    CHECK_THROWS_AS(lift_to_sl3(bad.rho), Error);

    // 2 rho: v(det) = 4 is still not divisible by 3
    const auto doubled = LambdaElem(2) * mumford_generators().rho;
    CHECK(ext::valuation(det(doubled)) == 4);
    const auto lifted = lift_to_sl3(doubled);
    CHECK(det(lifted) == CubicElem<LambdaElem>::constant(det(doubled), LambdaElem(1)));

    try {
        lift_to_sl3(Mat3<mpq_class>::diagonal(0, 1));
        FAIL("identity lifted");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::NotLiftable);
    }
}

TEST_CASE("CMSZ generators")
{
    const auto g = cmsz_generators();
    const QuadElem S = QuadElem::S();
    const QuadElem c = (S - QuadElem(1)) * QuadElem(mpq_class(1, 4));
    CHECK(det(g.s) == QuadElem(1));
    // the computed sign is negative
    CHECK(det(g.a3) == -c);
    CHECK(ext::valuation(det(g.a3)) == 1);
    const auto r = certify_cmsz();
    CHECK_FALSE(r.any_refuted());
    CHECK(r.find("cmsz.det_a3").statistics["sign_discrepancy"] == true);
}

TEST_CASE("lifts have determinant one")
{
    for (PlaneId p : {PlaneId::Mumford, PlaneId::CmszA, PlaneId::CmszB}) {
        const auto r = build_and_verify_lift(lattice_spec(p));
        CHECK_FALSE(r.any_refuted());
    }
    const auto lifted = lift_to_sl3(cmsz_generators().a3);
    const QuadElem d = det(cmsz_generators().a3);
    CHECK(det(lifted) == CubicElem<QuadElem>::constant(d, QuadElem(1)));

    int lifted_count = 0;
    for (int i = 0; i < kPropertyCases; ++i) {
        const auto m = random_matrix<mpq_class>(small_q);
        const mpq_class d = det(m);
        if (d == 0 || padic::valuation(d) % 3 == 0) {
            if (d != 0)
                CHECK_THROWS_AS(lift_to_sl3(m), Error);
            continue;
        }
        ++lifted_count;
        CHECK(det(lift_to_sl3(m)) == CubicElem<mpq_class>::constant(d, 1));
    }
    CHECK(lifted_count > 100);
}

TEST_CASE("plane specs")
{
    CHECK(parse_plane("cmsz-a") == PlaneId::CmszA);
    CHECK_THROWS_AS(parse_plane("nope"), Error);
    CHECK(lattice_spec(PlaneId::Mumford).torsion_of_P.order() == 12);
    CHECK(lattice_spec(PlaneId::CmszB).torsion_of_P.order() == 3);
    for (PlaneId p : {PlaneId::Mumford, PlaneId::CmszA, PlaneId::CmszB})
        for (const auto& c : paper_asserted_facts(lattice_spec(p)).claims())
            CHECK(c.status == Status::PaperAsserted);
}

TEST_CASE("matrix export")
{
    const auto j = generator_matrices_json();
    CHECK(j["schema_version"] == 1);
    CHECK(j.dump() == generator_matrices_json().dump());
}
