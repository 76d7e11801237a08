#include "fppcert/extfield.hpp"

#include <sstream>

namespace fppcert::ext {

QuadElem QuadElem::inverse() const
{
    const mpq_class n = norm();
    if (n == 0)
        throw Error(ErrorCode::DivisionByZero, "inverse of zero in Q(S)");
    return {a_ / n, -b_ / n};
}

std::string QuadElem::to_string() const
{
    std::ostringstream os;
    os << a_.get_str();
    if (b_ != 0)
        os << (b_ > 0 ? " + " : " - ") << mpq_class(abs(b_)).get_str() << "*S";
    return os.str();
}

QuadElem quad_arith(const QuadElem& x, const QuadElem& y, QuadOp op)
{
    switch (op) {
    case QuadOp::Add: return x + y;
    case QuadOp::Sub: return x - y;
    case QuadOp::Mul: return x * y;
    case QuadOp::Div: return x / y;
    }
    throw Error(ErrorCode::InvalidArgument, "unknown operation");
}

padic::PAdicApprox embed(const QuadElem& x, unsigned precision)
{
    const auto s = padic::hensel_sqrt(-15, 1, precision);
    return padic::PAdicApprox::from_rational(x.rational_part(), precision) +
           padic::PAdicApprox::from_rational(x.s_part(), precision) * s;
}

long valuation(const QuadElem& x)
{
    if (x.is_zero())
        return padic::kInfiniteValuation;
    if (x.s_part() == 0)
        return padic::valuation(x.rational_part());
    for (unsigned precision = padic::kDefaultPrecision;; precision *= 2) {
        try {
            return embed(x, precision).valuation();
        } catch (const Error& e) {
            if (e.code() != ErrorCode::PrecisionLoss)
                throw;
        }
    }
}

LambdaElem LambdaElem::monomial(int power, const mpq_class& coeff)
{
    LambdaElem r;
    r.add_term(power, coeff);
    return r;
}

void LambdaElem::add_term(int power, const mpq_class& c)
{
    if (c == 0)
        return;
    auto it = terms_.find(power);
    if (it == terms_.end()) {
        terms_.emplace(power, c);
        return;
    }
    it->second += c;
    if (it->second == 0)
        terms_.erase(it);
}

mpq_class LambdaElem::coefficient(int power) const
{
    auto it = terms_.find(power);
    return it == terms_.end() ? mpq_class(0) : it->second;
}

LambdaElem LambdaElem::inverse() const
{
    if (is_zero())
        throw Error(ErrorCode::DivisionByZero, "inverse of zero in Q(lambda)");
    if (!is_monomial())
        throw Error(ErrorCode::InvalidArgument, "only monomials in lambda are invertible: " + to_string());
    const auto& [power, c] = *terms_.begin();
    return monomial(-power, 1 / c);
}

mpq_class LambdaElem::evaluate_at_unit(const mpq_class& u) const
{
    if (u == 0)
        throw Error(ErrorCode::NotAUnit, "lambda = 2u needs u != 0");
    const mpq_class lam = 2 * u;
    mpq_class sum = 0;
    for (const auto& [power, c] : terms_) {
        mpq_class p = 1;
        mpz_class n = lam.get_num(), d = lam.get_den();
        unsigned e = static_cast<unsigned>(power < 0 ? -power : power);
        mpz_class num, den;
        mpz_pow_ui(num.get_mpz_t(), n.get_mpz_t(), e);
        mpz_pow_ui(den.get_mpz_t(), d.get_mpz_t(), e);
        p = power < 0 ? mpq_class(den, num) : mpq_class(num, den);
        p.canonicalize();
        sum += c * p;
    }
    return sum;
}

LambdaElem LambdaElem::operator-() const
{
    LambdaElem r = *this;
    for (auto& [power, c] : r.terms_)
        c = -c;
    return r;
}

LambdaElem operator+(const LambdaElem& x, const LambdaElem& y)
{
    LambdaElem r = x;
    for (const auto& [power, c] : y.terms_)
        r.add_term(power, c);
    return r;
}

LambdaElem operator*(const LambdaElem& x, const LambdaElem& y)
{
    LambdaElem r;
    for (const auto& [px, cx] : x.terms_)
        for (const auto& [py, cy] : y.terms_)
            r.add_term(px + py, cx * cy);
    return r;
}

std::string LambdaElem::to_string() const
{
    if (terms_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [power, c] : terms_) {
        if (!first)
            os << (c > 0 ? " + " : " - ");
        else if (c < 0)
            os << "-";
        first = false;
        const mpq_class a = abs(c);
        if (power == 0) {
            os << a.get_str();
            continue;
        }
        if (a != 1)
            os << a.get_str() << "*";
        os << "lambda";
        if (power != 1)
            os << "^" << power;
    }
    return os.str();
}

long valuation(const LambdaElem& x)
{
    if (x.is_zero())
        return padic::kInfiniteValuation;
    long best = padic::kInfiniteValuation;
    for (const auto& [power, c] : x.terms())
        best = std::min(best, padic::valuation(c) + power);
    return best;
}

namespace {

/* Irreducible polynomials defining F_{2^f}, bit i = coefficient of x^i. */
constexpr std::array<unsigned, 9> kFieldModulus = {0, 0b11, 0b111, 0b1011, 0b10011,
                                                   0b100101, 0b1000011, 0b10000011, 0b100011011};

unsigned gf_mul(unsigned a, unsigned b, unsigned f)
{
    unsigned r = 0;
    while (b) {
        if (b & 1u)
            r ^= a;
        b >>= 1;
        a <<= 1;
        if (a & (1u << f))
            a ^= kFieldModulus[f];
    }
    return r;
}

}  // namespace

int cube_roots_of_unity_in_residue_field(unsigned residue_degree)
{
    if (residue_degree < 1 || residue_degree > 8)
        throw Error(ErrorCode::InvalidArgument, "residue degree must be in [1, 8]");
    const unsigned f = residue_degree;
    int roots = 0;
    for (unsigned x = 0; x < (1u << f); ++x) {
        const unsigned value = f == 1 ? ((x * x + x + 1) & 1u) : (gf_mul(x, x, f) ^ x ^ 1u);
        if (value == 0)
            ++roots;
    }
    return roots;
}

bool no_primitive_cube_root(unsigned residue_degree)
{
    return cube_roots_of_unity_in_residue_field(residue_degree) == 0;
}

}  // namespace fppcert::ext
