#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace fppcert::fano {

/*
 * P^2(F_2). Points and lines are both nonzero vectors of F_2^3 packed as
 * x = bit 0, y = bit 1, z = bit 2; index = vector - 1. A point lies on a line
 * iff their dot product vanishes.
 */
constexpr int kCount = 7;

struct FPoint {
    std::uint8_t v;
    int index() const { return v - 1; }
    static FPoint at(int index) { return {static_cast<std::uint8_t>(index + 1)}; }
    friend bool operator==(FPoint a, FPoint b) { return a.v == b.v; }
};

struct FLine {
    std::uint8_t v;
    int index() const { return v - 1; }
    static FLine at(int index) { return {static_cast<std::uint8_t>(index + 1)}; }
    friend bool operator==(FLine a, FLine b) { return a.v == b.v; }
};

bool incident(FPoint p, FLine l);
std::array<FPoint, 3> points_on(FLine l);
std::array<FLine, 3> lines_through(FPoint p);
std::string to_string(FPoint p);  // "(x:y:z)"

/// 7x7 incidence matrix, rows = points, columns = lines (both by index).
std::array<std::array<int, kCount>, kCount> incidence_matrix();

/// Quadratic form over F_2: bit 0 x^2, 1 y^2, 2 z^2, 3 xy, 4 xz, 5 yz.
struct Conic {
    std::uint8_t coeffs;
    friend bool operator==(Conic a, Conic b) { return a.coeffs == b.coeffs; }
};

constexpr int kConicCount = 63;

enum class ConicClass { Smooth, RationalLinePair, ConjugateLinePair, DoubleLine };

const char* to_string(ConicClass c);
std::string to_string(Conic q);

int evaluate(Conic q, FPoint p);
/// Classification by factoring over F_2 and F_4. q must be nonzero.
ConicClass classify_conic(Conic q);
std::vector<FPoint> rational_points(Conic q);
/// Multiplicity of the curve q = 0 at p: 0 off the curve, 2 where the gradient
/// also vanishes (node of a line pair, any point of a double line), else 1.
int local_multiplicity(Conic q, FPoint p);
/// For line-pair and double-line conics, the rational component lines (with
/// repetition for a double line). Empty otherwise.
std::vector<FLine> rational_components(Conic q);

struct ConicCensus {
    std::array<int, 4> by_class{};  // indexed by ConicClass
    int total = 0;
    /// Rational point counts observed per class; -1 if not constant on the class.
    std::array<int, 4> points_by_class{};
};

ConicCensus census();

/// Element of GL_3(F_2) = PGL_3(F_2), rows packed as 3-bit masks.
struct GroupElement {
    std::array<std::uint8_t, 3> rows;
    std::array<std::uint8_t, 3> inverse_rows;

    FPoint apply(FPoint p) const;
    /// Image line such that incidence is preserved.
    FLine apply(FLine l) const;
    Conic apply(Conic q) const;
};

/// All 168 elements, generated by closure from the elementary transvections.
const std::vector<GroupElement>& collineation_group();

/// Multiset of lines given as a multiplicity per line index.
using LineMultiset = std::array<int, kCount>;

struct LineConfigStats {
    std::array<int, kCount> coverage{};  // per point: sum of multiplicities of lines through it
    int points_covered = 0;
    /// Lexicographically smallest multiplicity vector in the group orbit.
    std::string orbit_label;
};

LineConfigStats line_config_stats(const LineMultiset& lines);

/// Line sets (bit j = line index j) of the given size covering all 7 points.
std::vector<std::uint8_t> covering_line_sets(int size);
/// Orbit representative (minimal bitmask) of a line set.
std::uint8_t canonical_line_set(std::uint8_t set);
/// Number of collineation orbits among the given line sets.
int orbit_count(const std::vector<std::uint8_t>& sets);
bool concurrent(std::uint8_t line_set);

}  // namespace fppcert::fano
