#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace fppcert::inv {

/// Dimensions indexed by cohomological degree, starting at degree 0 unless
/// stated otherwise.
struct GradedDims {
    std::vector<std::int64_t> dims;

    std::int64_t at(std::size_t t) const { return t < dims.size() ? dims[t] : 0; }
    /// Copy with trailing zeros removed.
    GradedDims normalized() const;
    friend bool operator==(const GradedDims& a, const GradedDims& b)
    {
        return a.normalized().dims == b.normalized().dims;
    }
    std::string to_string() const;
};

/// Numerical invariants shared by every fake projective plane.
struct SurfaceConstants {
    static constexpr int c1_sq = 9;
    static constexpr int c2 = 3;
    static constexpr int chi_O = 1;
    static constexpr int p_g = 0;
    static constexpr int q = 0;
    /// deg(omega); c_1(X) = -canonical_degree * H for H the degree-1 class.
    static constexpr int canonical_degree = 3;
    static constexpr std::array<int, 5> betti = {1, 0, 1, 0, 1};
    /// h^{p,q}, row p.
    static constexpr std::array<std::array<int, 3>, 3> hodge = {{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}};
};

/// Element of P = Z x Z/3 x (Z/2)^a: degree plus torsion coordinates.
/// omega is (3, 0, 0); degree is positive iff the bundle is ample.
struct LineBundleClass {
    int degree = 0;
    int three_torsion = 0;  // in Z/3
    int two_torsion = 0;    // bitmask in (Z/2)^2

    static LineBundleClass trivial() { return {0, 0, 0}; }
    static LineBundleClass omega() { return {SurfaceConstants::canonical_degree, 0, 0}; }

    bool is_trivial() const { return degree == 0 && three_torsion == 0 && two_torsion == 0; }
    bool is_canonical() const { return *this == omega(); }
    bool has_torsion() const { return three_torsion != 0 || two_torsion != 0; }

    LineBundleClass inverse() const { return {-degree, (3 - three_torsion) % 3, two_torsion}; }
    friend LineBundleClass operator*(const LineBundleClass& a, const LineBundleClass& b)
    {
        return {a.degree + b.degree, (a.three_torsion + b.three_torsion) % 3, a.two_torsion ^ b.two_torsion};
    }
    friend bool operator==(const LineBundleClass& a, const LineBundleClass& b) = default;
    std::string to_string() const;
};

/// Every class of P with degree in [lo, hi] for a torsion group Z/3 x (Z/2)^two_rank.
std::vector<LineBundleClass> classes_in_range(int lo, int hi, int two_rank);

struct Cohomology {
    std::int64_t h0 = 0, h1 = 0, h2 = 0;
    std::int64_t euler() const { return h0 - h1 + h2; }
    friend bool operator==(const Cohomology&, const Cohomology&) = default;
};

/// (d - 1)(d - 2) / 2 by Riemann-Roch with chi(O) = 1, c_1^2 = 9.
std::int64_t chi(const LineBundleClass& L);

/// Closed-form cohomology table of P (Serre duality for d <= 0 other than O).
Cohomology cohomology(const LineBundleClass& L);

struct ChernData {
    int rank = 1;
    /// c_1 as a multiple of the degree-1 class H (H^2 = 1).
    int c1 = 0;
    int c2 = 0;
};

inline ChernData tangent_bundle() { return {2, -SurfaceConstants::canonical_degree, SurfaceConstants::c2}; }
inline ChernData line_bundle(int degree) { return {1, degree, 0}; }

/// Hirzebruch-Riemann-Roch on the surface. Throws NonIntegerResult.
std::int64_t hrr_chi(const ChernData& bundle);

/// h^i of wedge^p T for p = 0, 1, 2.
std::array<Cohomology, 3> polyvector_cohomology();

/// HH^t(D^b(X)) = sum_p H^{t-p}(wedge^p T).
GradedDims hh_ambient();

struct EtaleCover {
    int order = 1;
    std::int64_t chi_omega = 0;
    std::int64_t q = 0;
    std::int64_t p_g = 0;
    /// h^0(omega (x) L0^i) for i = 0..e-1 as forced by the pigeonhole count.
    std::vector<std::int64_t> summands;
    bool consistent_with_table = false;
};

EtaleCover etale_cover_check(int e);

/// Hochschild homology of D^b(X) by degree -2..2 (index 0 is degree -2).
GradedDims hh_homology_ambient();
/// Additivity: HH_* of the orthogonal to an exceptional collection of the given length.
GradedDims hh_homology_complement(int collection_length);

/// Betti numbers from the Hodge diamond.
std::array<int, 5> betti_from_hodge();

}  // namespace fppcert::inv
