#include <doctest.h>

#include <algorithm>
#include <chrono>
#include <set>

#include "fppcert/fano.hpp"

using namespace fppcert::fano;

namespace {

int dot(int a, int b) { return __builtin_popcount(static_cast<unsigned>(a & b)) & 1; }

/* q evaluated at the 3-bit vector v, straight from the monomials. */
int eval_form(int q, int v)
{
    const int x = v & 1, y = v >> 1 & 1, z = v >> 2 & 1;
    const int mono[6] = {x, y, z, x & y, x & z, y & z};
    int s = 0;
    for (int k = 0; k < 6; ++k)
        s ^= (q >> k & 1) & mono[k];
    return s;
}

/* Coefficients of the product of two linear forms a, b (bit 0 = x coefficient). */
int product_form(int a, int b)
{
    int q = 0;
    const int sq[3] = {0, 1, 2};
    for (int i = 0; i < 3; ++i)
        if ((a >> i & 1) && (b >> i & 1))
            q ^= 1 << sq[i];
    const int mixed[3][3] = {{-1, 3, 4}, {3, -1, 5}, {4, 5, -1}};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            if (i != j && (a >> i & 1) && (b >> j & 1))
                q ^= 1 << mixed[i][j];
    return q;
}

ConicClass oracle_class(int q)
{
    for (int a = 1; a < 8; ++a)
        for (int b = a; b < 8; ++b)
            if (product_form(a, b) == q)
                return a == b ? ConicClass::DoubleLine : ConicClass::RationalLinePair;
    int points = 0;
    for (int v = 1; v < 8; ++v)
        points += eval_form(q, v) == 0;
    return points == 1 ? ConicClass::ConjugateLinePair : ConicClass::Smooth;
}

/* All invertible 3x3 matrices over F_2, rows as 3-bit masks. */
std::set<std::array<std::uint8_t, 3>> brute_gl3()
{
    std::set<std::array<std::uint8_t, 3>> out;
    for (int r0 = 1; r0 < 8; ++r0)
        for (int r1 = 1; r1 < 8; ++r1)
            for (int r2 = 1; r2 < 8; ++r2)
                if (r0 != r1 && r2 != r0 && r2 != r1 && r2 != (r0 ^ r1))
                    out.insert({static_cast<std::uint8_t>(r0), static_cast<std::uint8_t>(r1),
                                static_cast<std::uint8_t>(r2)});
    return out;
}

}  // namespace

TEST_CASE("incidence")
{
    CHECK(incident(FPoint{1}, FLine{4}));  // (1:0:0) on z = 0
    CHECK_FALSE(incident(FPoint{1}, FLine{1}));
    for (int i = 0; i < kCount; ++i)
        for (int j = 0; j < kCount; ++j)
            CHECK(incident(FPoint::at(i), FLine::at(j)) == (dot(i + 1, j + 1) == 0));
    // two points span exactly one line, two lines meet in exactly one point
    for (int a = 0; a < kCount; ++a)
        for (int b = a + 1; b < kCount; ++b) {
            int lines = 0, points = 0;
            for (int j = 0; j < kCount; ++j) {
                lines += incident(FPoint::at(a), FLine::at(j)) && incident(FPoint::at(b), FLine::at(j));
                points += incident(FPoint::at(j), FLine::at(a)) && incident(FPoint::at(j), FLine::at(b));
            }
            CHECK(lines == 1);
            CHECK(points == 1);
        }
}

TEST_CASE("points_on and lines_through are dual")
{
    for (int i = 0; i < kCount; ++i)
        for (int j = 0; j < kCount; ++j) {
            const auto on = points_on(FLine::at(j));
            const auto through = lines_through(FPoint::at(i));
            const bool a = std::find(on.begin(), on.end(), FPoint::at(i)) != on.end();
            const bool b = std::find(through.begin(), through.end(), FLine::at(j)) != through.end();
            CHECK(a == b);
            CHECK(a == incident(FPoint::at(i), FLine::at(j)));
        }
    CHECK(to_string(FPoint{5}) == "(1:0:1)");
}

TEST_CASE("conic classification against brute-force factoring")
{
    std::array<int, 4> counts{};
    for (int q = 1; q <= kConicCount; ++q) {
        const Conic c{static_cast<std::uint8_t>(q)};
        const auto cls = classify_conic(c);
        CHECK(cls == oracle_class(q));
        ++counts[static_cast<std::size_t>(cls)];
        int points = 0;
        for (int v = 1; v < 8; ++v) {
            CHECK(evaluate(c, FPoint{static_cast<std::uint8_t>(v)}) == eval_form(q, v));
            points += eval_form(q, v) == 0;
        }
        CHECK(static_cast<int>(rational_points(c).size()) == points);
        const int expected_points[4] = {3, 5, 1, 3};
        CHECK(points == expected_points[static_cast<int>(cls)]);
    }
    CHECK(counts == std::array<int, 4>{28, 21, 7, 7});
    const auto cz = census();
    CHECK(cz.total == 63);
    CHECK(cz.by_class == counts);
    CHECK(cz.points_by_class == std::array<int, 4>{3, 5, 1, 3});
}

TEST_CASE("local multiplicities")
{
    const Conic xy{1 << 3};  // x*y: lines x = 0 and y = 0 meeting at (0:0:1)
    CHECK(classify_conic(xy) == ConicClass::RationalLinePair);
    CHECK(local_multiplicity(xy, FPoint{4}) == 2);
    CHECK(local_multiplicity(xy, FPoint{2}) == 1);
    CHECK(local_multiplicity(xy, FPoint{3}) == 0);
    const Conic x2{1};  // x^2
    CHECK(classify_conic(x2) == ConicClass::DoubleLine);
    for (const auto p : rational_points(x2))
        CHECK(local_multiplicity(x2, p) == 2);
    CHECK(rational_components(x2).size() == 2);
    const Conic smooth{static_cast<std::uint8_t>(1 << 0 | 1 << 5)};  // x^2 + yz
    CHECK(classify_conic(smooth) == ConicClass::Smooth);
    for (const auto p : rational_points(smooth))
        CHECK(local_multiplicity(smooth, p) == 1);
    CHECK(rational_components(smooth).empty());
    const Conic conj{static_cast<std::uint8_t>(1 << 0 | 1 << 1 | 1 << 3)};  // x^2 + xy + y^2
    CHECK(classify_conic(conj) == ConicClass::ConjugateLinePair);
    CHECK(local_multiplicity(conj, FPoint{4}) == 2);
    CHECK_THROWS(classify_conic(Conic{0}));
}

TEST_CASE("collineation group")
{
    const auto& g = collineation_group();
    CHECK(g.size() == 168);
    std::set<std::array<std::uint8_t, 3>> rows;
    for (const auto& e : g)
        rows.insert(e.rows);
    CHECK(rows == brute_gl3());
    for (const auto& e : g) {
        for (int i = 0; i < kCount; ++i)
            for (int j = 0; j < kCount; ++j)
                CHECK(incident(FPoint::at(i), FLine::at(j)) == incident(e.apply(FPoint::at(i)), e.apply(FLine::at(j))));
        for (int q = 1; q <= kConicCount; ++q) {
            const Conic c{static_cast<std::uint8_t>(q)};
            const Conic image = e.apply(c);
            CHECK(classify_conic(image) == classify_conic(c));
            for (int i = 0; i < kCount; ++i)
                CHECK(evaluate(image, e.apply(FPoint::at(i))) == evaluate(c, FPoint::at(i)));
        }
    }
}

TEST_CASE("covering line sets")
{
    const auto t0 = std::chrono::steady_clock::now();
    const auto three = covering_line_sets(3);
    CHECK(three.size() == 7);
    for (auto s : three)
        CHECK(concurrent(s));
    CHECK(covering_line_sets(4).size() == 28);
    CHECK(covering_line_sets(5).size() == 21);
    CHECK(orbit_count(covering_line_sets(4)) == 1);
    CHECK(orbit_count(covering_line_sets(5)) == 1);
    CHECK(orbit_count(three) == 1);
    CHECK(covering_line_sets(2).empty());
    const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    CHECK(s < 1.0);
}

TEST_CASE("line configuration labels are orbit invariants")
{
    const LineMultiset lines{2, 1, 0, 0, 3, 0, 1};
    const auto base = line_config_stats(lines);
    int covered = 0;
    for (int x : base.coverage)
        covered += x > 0;
    CHECK(base.points_covered == covered);
    for (const auto& g : collineation_group()) {
        LineMultiset image{};
        for (int j = 0; j < kCount; ++j)
            image[static_cast<std::size_t>(g.apply(FLine::at(j)).index())] = lines[static_cast<std::size_t>(j)];
        const auto s = line_config_stats(image);
        CHECK(s.orbit_label == base.orbit_label);
        CHECK(s.points_covered == base.points_covered);
    }
    CHECK_THROWS(line_config_stats({-1, 0, 0, 0, 0, 0, 0}));
}
