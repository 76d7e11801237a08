#pragma once

#include <cstdint>
#include <limits>

#include <gmpxx.h>

namespace fppcert::padic {

constexpr unsigned kDefaultPrecision = 64;

/// Valuation reported for the exact zero.
constexpr long kInfiniteValuation = std::numeric_limits<long>::max();

/// A 2-adic number 2^valuation * unit, where the odd unit is known modulo
/// 2^precision. The exact zero is a distinguished value; an approximation whose
/// known digits all cancel is never silently turned into zero.
class PAdicApprox {
public:
    PAdicApprox() = default;  // exact zero

    static PAdicApprox zero() { return {}; }
    static PAdicApprox from_integer(const mpz_class& n, unsigned precision = kDefaultPrecision);
    static PAdicApprox from_rational(const mpq_class& q, unsigned precision = kDefaultPrecision);
    /// unit must be odd; it is reduced mod 2^precision.
    static PAdicApprox from_parts(long valuation, const mpz_class& unit, unsigned precision);

    bool is_zero() const noexcept { return zero_; }
    long valuation() const noexcept { return zero_ ? kInfiniteValuation : valuation_; }
    const mpz_class& unit() const noexcept { return unit_; }
    /// Bits of the unit that are known; 0 for the exact zero.
    unsigned precision() const noexcept { return zero_ ? 0 : precision_; }
    /// valuation + precision: the power of 2 modulo which the value is known.
    long absolute_precision() const noexcept;

    /// True iff the value is known to be congruent to n modulo 2^bits.
    /// Requires an integral value known to at least `bits` absolute bits.
    bool congruent_to(const mpz_class& n, unsigned bits) const;

    /// Value mod 2^bits as a non-negative integer (integral values only).
    mpz_class residue(unsigned bits) const;

    /// Same value with the unit truncated to fewer bits.
    PAdicApprox with_precision(unsigned precision) const;

    PAdicApprox operator-() const;
    friend PAdicApprox operator+(const PAdicApprox& x, const PAdicApprox& y);
    friend PAdicApprox operator-(const PAdicApprox& x, const PAdicApprox& y) { return x + (-y); }
    friend PAdicApprox operator*(const PAdicApprox& x, const PAdicApprox& y);
    friend PAdicApprox operator/(const PAdicApprox& x, const PAdicApprox& y);

    PAdicApprox& operator+=(const PAdicApprox& y) { return *this = *this + y; }
    PAdicApprox& operator-=(const PAdicApprox& y) { return *this = *this - y; }
    PAdicApprox& operator*=(const PAdicApprox& y) { return *this = *this * y; }

private:
    bool zero_ = true;
    long valuation_ = 0;
    mpz_class unit_ = 0;
    unsigned precision_ = 0;
};

inline long valuation(const PAdicApprox& x) { return x.valuation(); }

/// True iff x and y are indistinguishable at their common known precision.
bool agree(const PAdicApprox& x, const PAdicApprox& y);

/// 2-adic valuation of a nonzero integer / rational; kInfiniteValuation for 0.
long valuation(const mpz_class& n);
long valuation(const mpq_class& q);

/// Square root of a (a = 1 mod 8) with S = residue_mod4 (mod 4), S^2 = a mod 2^precision.
/// Throws NoSquareRoot or AmbiguousConstraint.
PAdicApprox hensel_sqrt(const mpz_class& a, unsigned residue_mod4, unsigned precision = kDefaultPrecision);

/// The unique unit x with x^3 = u modulo 2^precision(u). Throws NotAUnit.
PAdicApprox hensel_cube_root(const PAdicApprox& u);

/// Cubing is bijective on 2-adic units, so x is a cube iff 3 | v(x).
bool is_cube_in_Q2(const PAdicApprox& x);

/// Polynomial over F_2, bit i holding the coefficient of x^i.
struct F2Poly {
    std::uint32_t bits = 0;

    int degree() const noexcept;
    int eval(int x) const noexcept;  // x in {0, 1}
};

/// For monic p of degree 2 or 3: irreducible over F_2 iff it has no root.
/// Degrees 0 and 1 return false.
bool residue_poly_irreducible(F2Poly p);

}  // namespace fppcert::padic
