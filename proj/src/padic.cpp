#include "fppcert/padic.hpp"

#include <algorithm>
#include <string>

#include "fppcert/error.hpp"

namespace fppcert::padic {

namespace {

mpz_class mod_pow2(const mpz_class& n, unsigned bits)
{
    mpz_class r;
    mpz_fdiv_r_2exp(r.get_mpz_t(), n.get_mpz_t(), bits);
    return r;
}

mpz_class inverse_mod_pow2(const mpz_class& odd, unsigned bits)
{
    mpz_class modulus = 1;
    modulus <<= bits;
    mpz_class inv;
    if (bits == 0)
        return 0;
    if (mpz_invert(inv.get_mpz_t(), odd.get_mpz_t(), modulus.get_mpz_t()) == 0)
        throw Error(ErrorCode::NotAUnit, "even number has no inverse mod 2^k");
    return inv;
}

/* Splits a nonzero integer into (v, odd part). */
std::pair<long, mpz_class> split_two(const mpz_class& n)
{
    mpz_class a = abs(n);
    long v = static_cast<long>(mpz_scan1(a.get_mpz_t(), 0));
    mpz_class odd = n;
    mpz_fdiv_q_2exp(odd.get_mpz_t(), n.get_mpz_t(), v);
    return {v, odd};
}

}  // namespace

long PAdicApprox::absolute_precision() const noexcept
{
    return zero_ ? kInfiniteValuation : valuation_ + static_cast<long>(precision_);
}

PAdicApprox PAdicApprox::from_parts(long valuation, const mpz_class& unit, unsigned precision)
{
    if (precision == 0)
        throw Error(ErrorCode::InvalidArgument, "precision must be positive");
    PAdicApprox r;
    r.zero_ = false;
    r.valuation_ = valuation;
    r.precision_ = precision;
    r.unit_ = mod_pow2(unit, precision);
    if (mpz_tstbit(r.unit_.get_mpz_t(), 0) == 0)
        throw Error(ErrorCode::InvalidArgument, "unit residue must be odd");
    return r;
}

PAdicApprox PAdicApprox::from_integer(const mpz_class& n, unsigned precision)
{
    if (n == 0)
        return zero();
    auto [v, odd] = split_two(n);
    return from_parts(v, odd, precision);
}

PAdicApprox PAdicApprox::from_rational(const mpq_class& q, unsigned precision)
{
    if (q == 0)
        return zero();
    auto [vn, un] = split_two(q.get_num());
    auto [vd, ud] = split_two(q.get_den());
    return from_parts(vn - vd, un * inverse_mod_pow2(ud, precision), precision);
}

mpz_class PAdicApprox::residue(unsigned bits) const
{
    if (zero_)
        return 0;
    if (valuation_ < 0)
        throw Error(ErrorCode::InvalidArgument, "residue of a non-integral 2-adic number");
    if (absolute_precision() < static_cast<long>(bits))
        throw Error(ErrorCode::PrecisionLoss,
                    "value known to " + std::to_string(absolute_precision()) + " bits, " +
                        std::to_string(bits) + " requested");
    mpz_class shifted = unit_;
    shifted <<= static_cast<unsigned long>(valuation_);
    return mod_pow2(shifted, bits);
}

bool PAdicApprox::congruent_to(const mpz_class& n, unsigned bits) const
{
    return residue(bits) == mod_pow2(n, bits);
}

PAdicApprox PAdicApprox::with_precision(unsigned precision) const
{
    if (zero_)
        return *this;
    return from_parts(valuation_, unit_, std::min(precision, precision_));
}

PAdicApprox PAdicApprox::operator-() const
{
    if (zero_)
        return *this;
    return from_parts(valuation_, -unit_, precision_);
}

PAdicApprox operator+(const PAdicApprox& x, const PAdicApprox& y)
{
    if (x.zero_)
        return y;
    if (y.zero_)
        return x;
    const long known = std::min(x.absolute_precision(), y.absolute_precision());
    const long base = std::min(x.valuation_, y.valuation_);
    const auto width = static_cast<unsigned>(known - base);
    mpz_class s = x.unit_;
    s <<= static_cast<unsigned long>(x.valuation_ - base);
    mpz_class t = y.unit_;
    t <<= static_cast<unsigned long>(y.valuation_ - base);
    s = mod_pow2(s + t, width);
    if (s == 0)
        throw Error(ErrorCode::PrecisionLoss,
                    "sum cancels all " + std::to_string(width) + " known bits");
    const auto shift = static_cast<unsigned>(mpz_scan1(s.get_mpz_t(), 0));
    s >>= shift;
    return PAdicApprox::from_parts(base + shift, s, width - shift);
}

PAdicApprox operator*(const PAdicApprox& x, const PAdicApprox& y)
{
    if (x.zero_ || y.zero_)
        return PAdicApprox::zero();
    const unsigned p = std::min(x.precision_, y.precision_);
    return PAdicApprox::from_parts(x.valuation_ + y.valuation_, x.unit_ * y.unit_, p);
}

PAdicApprox operator/(const PAdicApprox& x, const PAdicApprox& y)
{
    if (y.zero_)
        throw Error(ErrorCode::DivisionByZero, "2-adic division by zero");
    if (x.zero_)
        return x;
    const unsigned p = std::min(x.precision_, y.precision_);
    return PAdicApprox::from_parts(x.valuation_ - y.valuation_,
                                   x.unit_ * inverse_mod_pow2(y.unit_, p), p);
}

bool agree(const PAdicApprox& x, const PAdicApprox& y)
{
    if (x.is_zero() || y.is_zero())
        return x.is_zero() && y.is_zero();
    if (x.valuation() != y.valuation())
        return false;
    const unsigned p = std::min(x.precision(), y.precision());
    return mod_pow2(x.unit() - y.unit(), p) == 0;
}

long valuation(const mpz_class& n)
{
    if (n == 0)
        return kInfiniteValuation;
    return split_two(n).first;
}

long valuation(const mpq_class& q)
{
    if (q == 0)
        return kInfiniteValuation;
    return valuation(q.get_num()) - valuation(q.get_den());
}

PAdicApprox hensel_sqrt(const mpz_class& a, unsigned residue_mod4, unsigned precision)
{
    if (precision == 0)
        throw Error(ErrorCode::InvalidArgument, "precision must be positive");
    if (mod_pow2(a, 3) != 1)
        throw Error(ErrorCode::NoSquareRoot, a.get_str() + " is not 1 mod 8");
    const unsigned r = residue_mod4 % 4;
    if (r != 1 && r != 3)
        throw Error(ErrorCode::AmbiguousConstraint,
                    "no odd square root is " + std::to_string(r) + " mod 4");

    // Seed: a root mod 64 in the requested class mod 4; it agrees with the
    // 2-adic root modulo 32.
    const mpz_class a64 = mod_pow2(a, 6);
    mpz_class x = 0;
    for (unsigned c = 1; c < 64; c += 2) {
        if (c % 4 == r && (c * c) % 64 == a64) {
            x = c;
            break;
        }
    }
    unsigned known = 5;
    const unsigned work = std::max(precision, known) + 2;

    // Newton x <- x - (x^2 - a)/(2x); error valuation goes k -> 2k - 1.
    while (known < precision) {
        mpz_class half_defect = x * x - a;
        mpz_fdiv_q_2exp(half_defect.get_mpz_t(), half_defect.get_mpz_t(), 1);
        x = mod_pow2(x - half_defect * inverse_mod_pow2(x, work), work);
        known = 2 * known - 1;
    }
    x = mod_pow2(x, precision);
    if (mod_pow2(x * x - a, precision) != 0)
        throw Error(ErrorCode::PrecisionLoss, "Hensel iteration failed to converge");
    return PAdicApprox::from_parts(0, x, precision);
}

PAdicApprox hensel_cube_root(const PAdicApprox& u)
{
    if (u.is_zero() || u.valuation() != 0)
        throw Error(ErrorCode::NotAUnit, "cube root requires a 2-adic unit");
    const unsigned precision = u.precision();
    // Odd x satisfies x^3 = x mod 8, so u itself is correct to 3 bits.
    mpz_class x = mod_pow2(u.unit(), std::min(precision, 3u));
    unsigned known = 3;
    const unsigned work = std::max(precision, known) + 2;
    while (known < precision) {
        const mpz_class defect = x * x * x - u.unit();
        x = mod_pow2(x - defect * inverse_mod_pow2(3 * x * x, work), work);
        known *= 2;
    }
    x = mod_pow2(x, precision);
    if (mod_pow2(x * x * x - u.unit(), precision) != 0)
        throw Error(ErrorCode::PrecisionLoss, "cube root iteration failed to converge");
    return PAdicApprox::from_parts(0, x, precision);
}

bool is_cube_in_Q2(const PAdicApprox& x)
{
    if (x.is_zero())
        return true;
    const long v = x.valuation();
    return ((v % 3) + 3) % 3 == 0;
}

int F2Poly::degree() const noexcept
{
    if (bits == 0)
        return -1;
    return 31 - __builtin_clz(bits);
}

int F2Poly::eval(int x) const noexcept
{
    if (x == 0)
        return static_cast<int>(bits & 1u);
    return __builtin_popcount(bits) & 1;
}

bool residue_poly_irreducible(F2Poly p)
{
    const int deg = p.degree();
    if (deg > 3)
        throw Error(ErrorCode::InvalidArgument, "residue polynomial degree exceeds 3");
    if (deg < 2)
        return false;
    return p.eval(0) != 0 && p.eval(1) != 0;
}

}  // namespace fppcert::padic
