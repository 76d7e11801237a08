#pragma once

#include <array>
#include <map>
#include <ostream>
#include <string>

#include <gmpxx.h>

#include "fppcert/error.hpp"
#include "fppcert/padic.hpp"

namespace fppcert::ext {

/// a + b*S in Q(S), S^2 = -15. Embedded in Q_2 by S -> the root that is 1 mod 4.
class QuadElem {
public:
    QuadElem() = default;
    QuadElem(mpq_class a, mpq_class b = 0) : a_(std::move(a)), b_(std::move(b)) {}
    QuadElem(long a) : a_(a), b_(0) {}

    static QuadElem S() { return {0, 1}; }

    const mpq_class& rational_part() const { return a_; }
    const mpq_class& s_part() const { return b_; }
    bool is_zero() const { return a_ == 0 && b_ == 0; }

    QuadElem conjugate() const { return {a_, -b_}; }
    /// x * conjugate(x) = a^2 + 15 b^2.
    mpq_class norm() const { return a_ * a_ + 15 * b_ * b_; }
    QuadElem inverse() const;

    QuadElem operator-() const { return {-a_, -b_}; }
    friend QuadElem operator+(const QuadElem& x, const QuadElem& y) { return {x.a_ + y.a_, x.b_ + y.b_}; }
    friend QuadElem operator-(const QuadElem& x, const QuadElem& y) { return {x.a_ - y.a_, x.b_ - y.b_}; }
    friend QuadElem operator*(const QuadElem& x, const QuadElem& y)
    {
        return {x.a_ * y.a_ - 15 * x.b_ * y.b_, x.a_ * y.b_ + x.b_ * y.a_};
    }
    friend QuadElem operator/(const QuadElem& x, const QuadElem& y) { return x * y.inverse(); }
    friend bool operator==(const QuadElem& x, const QuadElem& y) { return x.a_ == y.a_ && x.b_ == y.b_; }

    QuadElem& operator+=(const QuadElem& y) { return *this = *this + y; }
    QuadElem& operator-=(const QuadElem& y) { return *this = *this - y; }
    QuadElem& operator*=(const QuadElem& y) { return *this = *this * y; }

    std::string to_string() const;

private:
    mpq_class a_ = 0;
    mpq_class b_ = 0;
};

enum class QuadOp { Add, Sub, Mul, Div };
QuadElem quad_arith(const QuadElem& x, const QuadElem& y, QuadOp op);

/// The fixed embedding S -> hensel_sqrt(-15, 1 mod 4).
padic::PAdicApprox embed(const QuadElem& x, unsigned precision = padic::kDefaultPrecision);

/// Exact valuation under the embedding; raises the working precision until the
/// embedded value is nonzero at the known precision.
long valuation(const QuadElem& x);

/// Laurent polynomial sum_i c_i * lambda^i in the formal element lambda = 2u,
/// u a unit of Z_2 left symbolic.
class LambdaElem {
public:
    LambdaElem() = default;
    LambdaElem(const mpq_class& c) { if (c != 0) terms_[0] = c; }
    LambdaElem(long c) : LambdaElem(mpq_class(c)) {}

    static LambdaElem lambda() { return monomial(1, 1); }
    static LambdaElem monomial(int power, const mpq_class& coeff);

    bool is_zero() const { return terms_.empty(); }
    bool is_monomial() const { return terms_.size() == 1; }
    const std::map<int, mpq_class>& terms() const { return terms_; }
    mpq_class coefficient(int power) const;

    /// Only monomials are invertible in this ring.
    LambdaElem inverse() const;

    /// Substitutes lambda = 2u.
    mpq_class evaluate_at_unit(const mpq_class& u) const;

    LambdaElem operator-() const;
    friend LambdaElem operator+(const LambdaElem& x, const LambdaElem& y);
    friend LambdaElem operator-(const LambdaElem& x, const LambdaElem& y) { return x + (-y); }
    friend LambdaElem operator*(const LambdaElem& x, const LambdaElem& y);
    friend LambdaElem operator/(const LambdaElem& x, const LambdaElem& y) { return x * y.inverse(); }
    friend bool operator==(const LambdaElem& x, const LambdaElem& y) { return x.terms_ == y.terms_; }

    LambdaElem& operator+=(const LambdaElem& y) { return *this = *this + y; }
    LambdaElem& operator-=(const LambdaElem& y) { return *this = *this - y; }
    LambdaElem& operator*=(const LambdaElem& y) { return *this = *this * y; }

    std::string to_string() const;

private:
    void add_term(int power, const mpq_class& c);

    std::map<int, mpq_class> terms_;
};

/// Gauss valuation min_i (v_2(c_i) + i).
long valuation(const LambdaElem& x);

inline long valuation(const mpq_class& x) { return padic::valuation(x); }

inline std::ostream& operator<<(std::ostream& os, const QuadElem& x) { return os << x.to_string(); }
inline std::ostream& operator<<(std::ostream& os, const LambdaElem& x) { return os << x.to_string(); }

template <class Base>
bool is_zero_elem(const Base& x)
{
    if constexpr (std::is_same_v<Base, mpq_class>)
        return x == 0;
    else
        return x.is_zero();
}

template <class Base>
Base inverse_of(const Base& x)
{
    if constexpr (std::is_same_v<Base, mpq_class>) {
        if (x == 0)
            throw Error(ErrorCode::DivisionByZero, "inverse of zero");
        return 1 / x;
    } else {
        return x.inverse();
    }
}

/// c0 + c1*mu + c2*mu^2 in base(mu), mu^3 = modulus. Elements only combine when
/// they share the same modulus.
template <class Base>
class CubicElem {
public:
    CubicElem() = default;
    CubicElem(Base modulus, Base c0, Base c1 = Base(0), Base c2 = Base(0))
        : coeff_{std::move(c0), std::move(c1), std::move(c2)}, modulus_(std::move(modulus))
    {
    }

    static CubicElem constant(const Base& modulus, const Base& c) { return {modulus, c}; }
    static CubicElem mu(const Base& modulus) { return {modulus, Base(0), Base(1)}; }
    /// mu^{-1} = mu^2 / modulus.
    static CubicElem mu_inverse(const Base& modulus)
    {
        return {modulus, Base(0), Base(0), inverse_of(modulus)};
    }

    const Base& operator[](int i) const { return coeff_[static_cast<std::size_t>(i)]; }
    const Base& modulus() const { return modulus_; }
    bool is_zero() const
    {
        return is_zero_elem(coeff_[0]) && is_zero_elem(coeff_[1]) && is_zero_elem(coeff_[2]);
    }

    CubicElem operator-() const { return {modulus_, -coeff_[0], -coeff_[1], -coeff_[2]}; }

    friend CubicElem operator+(const CubicElem& x, const CubicElem& y)
    {
        check_same(x, y);
        return {x.modulus_, x.coeff_[0] + y.coeff_[0], x.coeff_[1] + y.coeff_[1], x.coeff_[2] + y.coeff_[2]};
    }
    friend CubicElem operator-(const CubicElem& x, const CubicElem& y) { return x + (-y); }
    friend CubicElem operator*(const CubicElem& x, const CubicElem& y)
    {
        check_same(x, y);
        std::array<Base, 5> prod{Base(0), Base(0), Base(0), Base(0), Base(0)};
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = 0; j < 3; ++j)
                prod[i + j] = prod[i + j] + x.coeff_[i] * y.coeff_[j];
        // mu^3 = d, mu^4 = d*mu
        return {x.modulus_, prod[0] + x.modulus_ * prod[3], prod[1] + x.modulus_ * prod[4], prod[2]};
    }
    friend bool operator==(const CubicElem& x, const CubicElem& y)
    {
        return x.modulus_ == y.modulus_ && x.coeff_ == y.coeff_;
    }

    CubicElem& operator+=(const CubicElem& y) { return *this = *this + y; }
    CubicElem& operator-=(const CubicElem& y) { return *this = *this - y; }
    CubicElem& operator*=(const CubicElem& y) { return *this = *this * y; }

private:
    static void check_same(const CubicElem& x, const CubicElem& y)
    {
        if (!(x.modulus_ == y.modulus_))
            throw Error(ErrorCode::InvalidArgument, "cubic elements from different extensions");
    }

    std::array<Base, 3> coeff_{Base(0), Base(0), Base(0)};
    Base modulus_ = Base(1);
};

/// Valuation in thirds: min over nonzero c_i of v(c_i) + i*v(d)/3.
/// Throws NotTotallyRamified when 3 | v(d) and ZeroElement for x = 0.
template <class Base>
mpq_class cubic_valuation(const CubicElem<Base>& x)
{
    const long vd = valuation(x.modulus());
    if (vd % 3 == 0)
        throw Error(ErrorCode::NotTotallyRamified, "modulus valuation divisible by 3");
    if (x.is_zero())
        throw Error(ErrorCode::ZeroElement, "valuation of zero");
    bool have = false;
    mpq_class best;
    std::array<mpq_class, 3> seen;
    int count = 0;
    for (int i = 0; i < 3; ++i) {
        if (is_zero_elem(x[i]))
            continue;
        mpq_class candidate(valuation(x[i]) * 3 + i * vd, 3);
        candidate.canonicalize();
        // Candidates from different i differ mod 1, so the minimum is attained once.
        for (int k = 0; k < count; ++k) {
            mpq_class diff = candidate - seen[static_cast<std::size_t>(k)];
            if (diff.get_den() == 1)
                throw Error(ErrorCode::NotTotallyRamified, "valuation candidates collide mod 1");
        }
        seen[static_cast<std::size_t>(count++)] = candidate;
        if (!have || candidate < best) {
            best = candidate;
            have = true;
        }
    }
    return best;
}

/// Number of roots of x^2 + x + 1 in F_{2^f}, by enumeration (1 <= f <= 8).
int cube_roots_of_unity_in_residue_field(unsigned residue_degree);

/// Residue degree of base(mu)/Q_2 when mu^3 = d with 3 not dividing v(d): the
/// extension is totally ramified, so the residue field is F_2.
template <class Base>
unsigned residue_degree_of_kummer(const Base& d)
{
    const long vd = valuation(d);
    if (vd % 3 == 0)
        throw Error(ErrorCode::NotTotallyRamified, "modulus valuation divisible by 3");
    return 1;
}

/// True iff the residue field contains no primitive cube root of 1, which for
/// an extension with residue field F_2 means x^2 + x + 1 stays irreducible.
bool no_primitive_cube_root(unsigned residue_degree);

template <class Base>
bool no_primitive_cube_root_in_kummer(const Base& d)
{
    return no_primitive_cube_root(residue_degree_of_kummer(d));
}

}  // namespace fppcert::ext
