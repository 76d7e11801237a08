#include "fppcert/fano.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "fppcert/error.hpp"

namespace fppcert::fano {

namespace {

int parity(unsigned x) { return __builtin_popcount(x) & 1; }

/* F_4 = {0, 1, w, w^2} encoded 0, 1, 2, 3; addition is XOR. */
int f4_mul(int a, int b)
{
    if (a == 0 || b == 0)
        return 0;
    static constexpr int log_table[4] = {-1, 0, 1, 2};
    static constexpr int exp_table[3] = {1, 2, 3};
    return exp_table[(log_table[a] + log_table[b]) % 3];
}

int f4_frobenius(int a) { return f4_mul(a, a); }

using F4Form = std::array<int, 3>;

/* Coefficients of l*m in the order x^2, y^2, z^2, xy, xz, yz. */
std::array<int, 6> f4_product(const F4Form& l, const F4Form& m)
{
    return {f4_mul(l[0], m[0]),
            f4_mul(l[1], m[1]),
            f4_mul(l[2], m[2]),
            f4_mul(l[0], m[1]) ^ f4_mul(l[1], m[0]),
            f4_mul(l[0], m[2]) ^ f4_mul(l[2], m[0]),
            f4_mul(l[1], m[2]) ^ f4_mul(l[2], m[1])};
}

/* Scales a product into F_2 coefficients if some nonzero scalar does so. */
bool to_f2_form(const std::array<int, 6>& c, std::uint8_t& out)
{
    for (int s = 1; s <= 3; ++s) {
        std::uint8_t bits = 0;
        bool ok = true;
        for (std::size_t i = 0; i < 6; ++i) {
            const int v = f4_mul(s, c[i]);
            if (v > 1) {
                ok = false;
                break;
            }
            if (v == 1)
                bits = static_cast<std::uint8_t>(bits | (1u << i));
        }
        if (ok) {
            out = bits;
            return true;
        }
    }
    return false;
}

std::vector<F4Form> f4_lines()
{
    std::vector<F4Form> out;
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b)
            for (int c = 0; c < 4; ++c) {
                const F4Form f{a, b, c};
                const int lead = a ? a : (b ? b : c);
                if (lead == 1)
                    out.push_back(f);
            }
    return out;
}

bool is_rational(const F4Form& f) { return f[0] <= 1 && f[1] <= 1 && f[2] <= 1; }

F4Form frobenius(const F4Form& f) { return {f4_frobenius(f[0]), f4_frobenius(f[1]), f4_frobenius(f[2])}; }

struct ConicTable {
    std::array<ConicClass, 64> cls{};
    std::array<std::vector<FLine>, 64> components;
};

ConicTable build_conic_table()
{
    ConicTable t;
    std::array<bool, 64> assigned{};
    const auto lines = f4_lines();
    for (std::size_t i = 0; i < lines.size(); ++i)
        for (std::size_t j = i; j < lines.size(); ++j) {
            std::uint8_t bits = 0;
            if (!to_f2_form(f4_product(lines[i], lines[j]), bits))
                continue;
            const bool ri = is_rational(lines[i]), rj = is_rational(lines[j]);
            ConicClass c;
            if (i == j && ri)
                c = ConicClass::DoubleLine;
            else if (ri && rj)
                c = ConicClass::RationalLinePair;
            else if (!ri && !rj && frobenius(lines[i]) == lines[j])
                c = ConicClass::ConjugateLinePair;
            else
                throw std::logic_error("unexpected F_2-rational product of F_4 lines");
            if (assigned[bits])
                throw std::logic_error("conic factored twice");
            assigned[bits] = true;
            t.cls[bits] = c;
            if (ri && rj) {
                auto pack = [](const F4Form& f) {
                    return FLine{static_cast<std::uint8_t>(f[0] | (f[1] << 1) | (f[2] << 2))};
                };
                t.components[bits] = {pack(lines[i]), pack(lines[j])};
            }
        }
    for (int q = 1; q < 64; ++q)
        if (!assigned[static_cast<std::size_t>(q)])
            t.cls[static_cast<std::size_t>(q)] = ConicClass::Smooth;
    return t;
}

const ConicTable& conic_table()
{
    static const ConicTable table = build_conic_table();
    return table;
}

void check_conic(Conic q)
{
    if (q.coeffs == 0 || q.coeffs >= 64)
        throw Error(ErrorCode::InvalidArgument, "conic coefficients must be a nonzero 6-bit form");
}

/* Product of two F_2 linear forms (3-bit masks) as a 6-bit quadratic form. */
std::uint8_t mul_linear(unsigned r, unsigned s)
{
    unsigned out = 0;
    for (unsigned j = 0; j < 3; ++j)
        if ((r >> j & 1u) && (s >> j & 1u))
            out ^= 1u << j;
    static constexpr unsigned cross[3][3] = {{0, 3, 4}, {3, 0, 5}, {4, 5, 0}};
    for (unsigned j = 0; j < 3; ++j)
        for (unsigned k = j + 1; k < 3; ++k) {
            const unsigned c = ((r >> j & 1u) & (s >> k & 1u)) ^ ((r >> k & 1u) & (s >> j & 1u));
            if (c)
                out ^= 1u << cross[j][k];
        }
    return static_cast<std::uint8_t>(out);
}

std::array<std::uint8_t, 3> multiply(const std::array<std::uint8_t, 3>& a, const std::array<std::uint8_t, 3>& b)
{
    std::array<std::uint8_t, 3> r{};
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t k = 0; k < 3; ++k)
            if (a[i] >> k & 1u)
                r[i] ^= b[k];
    return r;
}

std::vector<GroupElement> build_group()
{
    using Rows = std::array<std::uint8_t, 3>;
    const Rows identity{1, 2, 4};
    std::vector<Rows> generators;
    for (unsigned i = 0; i < 3; ++i)
        for (unsigned j = 0; j < 3; ++j)
            if (i != j) {
                Rows t = identity;
                t[i] = static_cast<std::uint8_t>(t[i] | (1u << j));
                generators.push_back(t);
            }
    std::set<Rows> seen{identity};
    std::vector<Rows> frontier{identity};
    while (!frontier.empty()) {
        std::vector<Rows> next;
        for (const auto& m : frontier)
            for (const auto& g : generators) {
                const Rows p = multiply(g, m);
                if (seen.insert(p).second)
                    next.push_back(p);
            }
        frontier = std::move(next);
    }
    std::vector<GroupElement> group;
    group.reserve(seen.size());
    for (const auto& m : seen) {
        GroupElement e{m, {}};
        for (const auto& candidate : seen)
            if (multiply(m, candidate) == identity) {
                e.inverse_rows = candidate;
                break;
            }
        group.push_back(e);
    }
    return group;
}

std::array<int, kCount> image_multiset(const GroupElement& g, const LineMultiset& lines)
{
    std::array<int, kCount> out{};
    for (int j = 0; j < kCount; ++j)
        out[static_cast<std::size_t>(g.apply(FLine::at(j)).index())] = lines[static_cast<std::size_t>(j)];
    return out;
}

}  // namespace

bool incident(FPoint p, FLine l) { return parity(p.v & l.v) == 0; }

std::array<FPoint, 3> points_on(FLine l)
{
    std::array<FPoint, 3> out{};
    int n = 0;
    for (int i = 0; i < kCount; ++i)
        if (incident(FPoint::at(i), l))
            out[static_cast<std::size_t>(n++)] = FPoint::at(i);
    return out;
}

std::array<FLine, 3> lines_through(FPoint p)
{
    std::array<FLine, 3> out{};
    int n = 0;
    for (int j = 0; j < kCount; ++j)
        if (incident(p, FLine::at(j)))
            out[static_cast<std::size_t>(n++)] = FLine::at(j);
    return out;
}

std::string to_string(FPoint p)
{
    return "(" + std::to_string(p.v & 1) + ":" + std::to_string(p.v >> 1 & 1) + ":" +
           std::to_string(p.v >> 2 & 1) + ")";
}

std::array<std::array<int, kCount>, kCount> incidence_matrix()
{
    std::array<std::array<int, kCount>, kCount> m{};
    for (int i = 0; i < kCount; ++i)
        for (int j = 0; j < kCount; ++j)
            m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = incident(FPoint::at(i), FLine::at(j));
    return m;
}

const char* to_string(ConicClass c)
{
    switch (c) {
    case ConicClass::Smooth: return "Smooth";
    case ConicClass::RationalLinePair: return "RationalLinePair";
    case ConicClass::ConjugateLinePair: return "ConjugateLinePair";
    case ConicClass::DoubleLine: return "DoubleLine";
    }
    return "Smooth";
}

std::string to_string(Conic q)
{
    static constexpr const char* monomials[6] = {"x^2", "y^2", "z^2", "xy", "xz", "yz"};
    std::string s;
    for (int i = 0; i < 6; ++i)
        if (q.coeffs >> i & 1u) {
            if (!s.empty())
                s += " + ";
            s += monomials[i];
        }
    return s.empty() ? "0" : s;
}

int evaluate(Conic q, FPoint p)
{
    const unsigned x = p.v & 1u, y = p.v >> 1 & 1u, z = p.v >> 2 & 1u;
    const unsigned c = q.coeffs;
    unsigned v = (c & 1u) * x + (c >> 1 & 1u) * y + (c >> 2 & 1u) * z + (c >> 3 & 1u) * x * y +
                 (c >> 4 & 1u) * x * z + (c >> 5 & 1u) * y * z;
    return static_cast<int>(v & 1u);
}

ConicClass classify_conic(Conic q)
{
    check_conic(q);
    return conic_table().cls[q.coeffs];
}

std::vector<FPoint> rational_points(Conic q)
{
    check_conic(q);
    std::vector<FPoint> out;
    for (int i = 0; i < kCount; ++i)
        if (evaluate(q, FPoint::at(i)) == 0)
            out.push_back(FPoint::at(i));
    return out;
}

int local_multiplicity(Conic q, FPoint p)
{
    check_conic(q);
    if (evaluate(q, p) != 0)
        return 0;
    const unsigned x = p.v & 1u, y = p.v >> 1 & 1u, z = p.v >> 2 & 1u;
    const unsigned a3 = q.coeffs >> 3 & 1u, a4 = q.coeffs >> 4 & 1u, a5 = q.coeffs >> 5 & 1u;
    // Squares have zero derivative in characteristic 2.
    const unsigned dx = (a3 * y + a4 * z) & 1u;
    const unsigned dy = (a3 * x + a5 * z) & 1u;
    const unsigned dz = (a4 * x + a5 * y) & 1u;
    return (dx | dy | dz) ? 1 : 2;
}

std::vector<FLine> rational_components(Conic q)
{
    check_conic(q);
    return conic_table().components[q.coeffs];
}

ConicCensus census()
{
    ConicCensus c;
    c.points_by_class.fill(-2);
    for (int bits = 1; bits < 64; ++bits) {
        const Conic q{static_cast<std::uint8_t>(bits)};
        const auto cls = static_cast<std::size_t>(classify_conic(q));
        ++c.by_class[cls];
        ++c.total;
        const int n = static_cast<int>(rational_points(q).size());
        if (c.points_by_class[cls] == -2)
            c.points_by_class[cls] = n;
        else if (c.points_by_class[cls] != n)
            c.points_by_class[cls] = -1;
    }
    return c;
}

FPoint GroupElement::apply(FPoint p) const
{
    unsigned out = 0;
    for (unsigned i = 0; i < 3; ++i)
        out |= static_cast<unsigned>(parity(rows[i] & p.v)) << i;
    return {static_cast<std::uint8_t>(out)};
}

FLine GroupElement::apply(FLine l) const
{
    // l -> M^{-T} l
    unsigned out = 0;
    for (unsigned i = 0; i < 3; ++i) {
        unsigned column = 0;
        for (unsigned j = 0; j < 3; ++j)
            column |= static_cast<unsigned>(inverse_rows[j] >> i & 1u) << j;
        out |= static_cast<unsigned>(parity(column & l.v)) << i;
    }
    return {static_cast<std::uint8_t>(out)};
}

Conic GroupElement::apply(Conic q) const
{
    // q'(v) = q(M^{-1} v)
    const auto& w = inverse_rows;
    unsigned out = 0;
    for (unsigned i = 0; i < 3; ++i)
        if (q.coeffs >> i & 1u)
            out ^= mul_linear(w[i], w[i]);
    if (q.coeffs >> 3 & 1u)
        out ^= mul_linear(w[0], w[1]);
    if (q.coeffs >> 4 & 1u)
        out ^= mul_linear(w[0], w[2]);
    if (q.coeffs >> 5 & 1u)
        out ^= mul_linear(w[1], w[2]);
    return {static_cast<std::uint8_t>(out)};
}

const std::vector<GroupElement>& collineation_group()
{
    static const std::vector<GroupElement> group = build_group();
    return group;
}

LineConfigStats line_config_stats(const LineMultiset& lines)
{
    LineConfigStats s;
    for (int j = 0; j < kCount; ++j) {
        if (lines[static_cast<std::size_t>(j)] < 0)
            throw Error(ErrorCode::InvalidArgument, "negative line multiplicity");
        for (const auto p : points_on(FLine::at(j)))
            s.coverage[static_cast<std::size_t>(p.index())] += lines[static_cast<std::size_t>(j)];
    }
    s.points_covered = static_cast<int>(std::count_if(s.coverage.begin(), s.coverage.end(), [](int c) { return c > 0; }));
    std::array<int, kCount> best = lines;
    for (const auto& g : collineation_group())
        best = std::min(best, image_multiset(g, lines));
    for (int m : best)
        s.orbit_label += std::to_string(m) + (m >= 10 ? "," : "");
    return s;
}

std::vector<std::uint8_t> covering_line_sets(int size)
{
    std::vector<std::uint8_t> out;
    for (unsigned set = 1; set < 128; ++set) {
        if (__builtin_popcount(set) != size)
            continue;
        unsigned covered = 0;
        for (int j = 0; j < kCount; ++j)
            if (set >> j & 1u)
                for (const auto p : points_on(FLine::at(j)))
                    covered |= 1u << p.index();
        if (covered == 0x7f)
            out.push_back(static_cast<std::uint8_t>(set));
    }
    return out;
}

std::uint8_t canonical_line_set(std::uint8_t set)
{
    unsigned best = set;
    for (const auto& g : collineation_group()) {
        unsigned image = 0;
        for (int j = 0; j < kCount; ++j)
            if (set >> j & 1u)
                image |= 1u << g.apply(FLine::at(j)).index();
        best = std::min(best, image);
    }
    return static_cast<std::uint8_t>(best);
}

int orbit_count(const std::vector<std::uint8_t>& sets)
{
    std::set<std::uint8_t> reps;
    for (auto s : sets)
        reps.insert(canonical_line_set(s));
    return static_cast<int>(reps.size());
}

bool concurrent(std::uint8_t line_set)
{
    for (int i = 0; i < kCount; ++i) {
        bool all = true;
        for (int j = 0; j < kCount; ++j)
            if ((line_set >> j & 1u) && !incident(FPoint::at(i), FLine::at(j)))
                all = false;
        if (all)
            return true;
    }
    return false;
}

}  // namespace fppcert::fano
