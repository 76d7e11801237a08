#include <doctest.h>

#include "fppcert/extfield.hpp"
#include "random_cases.hpp"

using namespace fppcert;
using namespace fppcert::ext;
using fppcert::testing::kPropertyCases;
using fppcert::testing::random_mpq;
using fppcert::testing::uniform;
using padic::PAdicApprox;

namespace {

QuadElem random_quad(unsigned bits) { return {random_mpq(bits), random_mpq(bits)}; }

LambdaElem random_lambda_poly(int terms)
{
    LambdaElem x;
    for (int i = 0; i < terms; ++i)
        x += LambdaElem::monomial(static_cast<int>(uniform(-4, 4)), random_mpq(20));
    return x;
}

/* v_2 of a + b*S for integers a, b, computed directly modulo 2^256. */
long direct_valuation(const mpz_class& a, const mpz_class& b)
{
    constexpr unsigned bits = 256;
    const mpz_class S = padic::hensel_sqrt(-15, 1, bits).residue(bits);
    mpz_class x = a + b * S;
    mpz_fdiv_r_2exp(x.get_mpz_t(), x.get_mpz_t(), bits);
    REQUIRE(x != 0);
    return static_cast<long>(mpz_scan1(x.get_mpz_t(), 0));
}

}  // namespace

TEST_CASE("Q(S) field arithmetic")
{
    const QuadElem S = QuadElem::S();
    CHECK(S * S == QuadElem(-15));
    CHECK((S - QuadElem(1)) * (S + QuadElem(1)) == QuadElem(-16));
    for (int i = 0; i < kPropertyCases; ++i) {
        const QuadElem x = random_quad(30), y = random_quad(30);
        if (x.is_zero() || y.is_zero())
            continue;
        CHECK(x * x.inverse() == QuadElem(1));
        CHECK(quad_arith(x, y, QuadOp::Div) * y == x);
        CHECK((x * y).norm() == x.norm() * y.norm());
        CHECK(quad_arith(x, y, QuadOp::Sub) + y == x);
    }
    CHECK_THROWS_AS(QuadElem(0).inverse(), Error);
}

TEST_CASE("embedding respects the norm")
{
    for (int i = 0; i < kPropertyCases; ++i) {
        const QuadElem x = random_quad(24);
        if (x.is_zero())
            continue;
        const auto ex = embed(x, 200), ec = embed(x.conjugate(), 200);
        CHECK(padic::agree(ex * ec, PAdicApprox::from_rational(x.norm(), 200)));
        CHECK(valuation(x) + valuation(x.conjugate()) == padic::valuation(x.norm()));
    }
}

TEST_CASE("valuation in Q(S) matches direct 2-adic expansion")
{
    CHECK(valuation(QuadElem::S() - QuadElem(1)) == 3);
    CHECK(valuation(QuadElem::S() + QuadElem(1)) == 1);
    CHECK(valuation((QuadElem::S() - QuadElem(1)) * QuadElem(mpq_class(1, 4))) == 1);
    for (int i = 0; i < kPropertyCases; ++i) {
        const mpz_class a = fppcert::testing::random_mpz(40), b = fppcert::testing::random_mpz(40);
        if (a == 0 && b == 0)
            continue;
        CHECK(valuation(QuadElem(mpq_class(a), mpq_class(b))) == direct_valuation(a, b));
    }
}

TEST_CASE("Gauss valuation on Laurent polynomials in lambda")
{
    CHECK(valuation(LambdaElem::lambda()) == 1);
    CHECK(valuation(LambdaElem::lambda() * LambdaElem::lambda() * LambdaElem(mpq_class(1, 2))) == 1);
    CHECK(valuation(LambdaElem(1) + LambdaElem::lambda()) == 0);
    for (int i = 0; i < kPropertyCases; ++i) {
        const LambdaElem x = random_lambda_poly(static_cast<int>(uniform(1, 4)));
        const LambdaElem y = random_lambda_poly(static_cast<int>(uniform(1, 4)));
        if (x.is_zero() || y.is_zero())
            continue;
        CHECK(valuation(x * y) == valuation(x) + valuation(y));
        if (!(x + y).is_zero())
            CHECK(valuation(x + y) >= std::min(valuation(x), valuation(y)));
        // specialising u to an odd integer never lowers the valuation
        const mpq_class u(2 * uniform(-50, 50) + 1);
        const mpq_class value = x.evaluate_at_unit(u);
        if (value != 0)
            CHECK(padic::valuation(value) >= valuation(x));
    }
}

TEST_CASE("lambda monomials")
{
    const LambdaElem m = LambdaElem::monomial(3, mpq_class(5, 4));
    CHECK(m * m.inverse() == LambdaElem(1));
    CHECK(m.evaluate_at_unit(3) == mpq_class(5, 4) * 216);
    CHECK_THROWS_AS((LambdaElem(1) + LambdaElem::lambda()).inverse(), Error);
    CHECK_THROWS_AS(LambdaElem().inverse(), Error);
}

TEST_CASE("Kummer extension arithmetic")
{
    const mpq_class d(2);
    const auto mu = CubicElem<mpq_class>::mu(d);
    CHECK(mu * mu * mu == CubicElem<mpq_class>::constant(d, d));
    CHECK(mu * CubicElem<mpq_class>::mu_inverse(d) == CubicElem<mpq_class>::constant(d, 1));
    CHECK(cubic_valuation(mu) == mpq_class(1, 3));
    CHECK(cubic_valuation(mu * mu) == mpq_class(2, 3));
    CHECK_THROWS_AS(mu * CubicElem<mpq_class>::mu(mpq_class(4)), Error);
}

TEST_CASE("cubic valuation is additive")
{
    for (const mpq_class& d : {mpq_class(2), mpq_class(4), mpq_class(-6, 5), mpq_class(1, 2)}) {
        for (int i = 0; i < kPropertyCases / 4 + 1; ++i) {
            const CubicElem<mpq_class> x(d, random_mpq(12), random_mpq(12), random_mpq(12));
            const CubicElem<mpq_class> y(d, random_mpq(12), random_mpq(12), random_mpq(12));
            if (x.is_zero() || y.is_zero())
                continue;
            CHECK(cubic_valuation(x * y) == cubic_valuation(x) + cubic_valuation(y));
        }
    }
}

TEST_CASE("cubic valuation errors")
{
    try {
        cubic_valuation(CubicElem<mpq_class>::mu(mpq_class(8)));
        FAIL("no error");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::NotTotallyRamified);
    }
    try {
        cubic_valuation(CubicElem<mpq_class>(mpq_class(2), 0));
        FAIL("no error");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::ZeroElement);
    }
}

TEST_CASE("cube roots of unity in residue fields")
{
    // x^2 + x + 1 splits in F_{2^f} exactly when F_4 is a subfield, i.e. f even.
    for (unsigned f = 1; f <= 8; ++f) {
        CHECK(cube_roots_of_unity_in_residue_field(f) == (f % 2 == 0 ? 2 : 0));
        CHECK(no_primitive_cube_root(f) == (f % 2 == 1));
    }
    CHECK(residue_degree_of_kummer(mpq_class(2)) == 1);
    CHECK(no_primitive_cube_root_in_kummer(mpq_class(2)));
    CHECK_THROWS_AS(residue_degree_of_kummer(mpq_class(8)), Error);
}
