#include "fppcert/invariants.hpp"

#include <sstream>

#include "fppcert/error.hpp"

namespace fppcert::inv {

GradedDims GradedDims::normalized() const
{
    GradedDims r = *this;
    while (!r.dims.empty() && r.dims.back() == 0)
        r.dims.pop_back();
    return r;
}

std::string GradedDims::to_string() const
{
    std::ostringstream os;
    os << "[";
    const auto n = normalized();
    for (std::size_t i = 0; i < n.dims.size(); ++i)
        os << (i ? "," : "") << n.dims[i];
    os << "]";
    return os.str();
}

std::string LineBundleClass::to_string() const
{
    return "(d=" + std::to_string(degree) + ", t3=" + std::to_string(three_torsion) +
           ", t2=" + std::to_string(two_torsion) + ")";
}

std::vector<LineBundleClass> classes_in_range(int lo, int hi, int two_rank)
{
    std::vector<LineBundleClass> out;
    for (int d = lo; d <= hi; ++d)
        for (int t3 = 0; t3 < 3; ++t3)
            for (int t2 = 0; t2 < (1 << two_rank); ++t2)
                out.push_back({d, t3, t2});
    return out;
}

std::int64_t chi(const LineBundleClass& L)
{
    const std::int64_t d = L.degree;
    return (d - 1) * (d - 2) / 2;
}

namespace {

/* Ample classes, d >= 1. */
Cohomology ample_cohomology(const LineBundleClass& L)
{
    const int d = L.degree;
    if (d == 1 || d == 2)
        return {0, 0, 0};
    if (d == 3)
        return L.is_canonical() ? Cohomology{0, 0, 1} : Cohomology{1, 0, 0};
    return {chi(L), 0, 0};
}

}  // namespace

Cohomology cohomology(const LineBundleClass& L)
{
    if (L.degree >= 1)
        return ample_cohomology(L);
    if (L.is_trivial())
        return {1, 0, 0};
    // Serre duality: h^i(L) = h^{2-i}(omega (x) L^-1), and omega (x) L^-1 is ample
    // of degree 3 - d, except for d = 0 where it is omega twisted by torsion.
    const LineBundleClass dual = LineBundleClass::omega() * L.inverse();
    const Cohomology h = ample_cohomology(dual);
    return {h.h2, h.h1, h.h0};
}

std::int64_t hrr_chi(const ChernData& bundle)
{
    using C = SurfaceConstants;
    const std::int64_t r = bundle.rank, c1 = bundle.c1, c2 = bundle.c2;
    const std::int64_t c1_dot_c1X = c1 * -C::canonical_degree;
    // 12 chi = r (c1^2 + c2)(X) + 6 c1.c1(X) + 6 (c1^2 - 2 c2)
    const std::int64_t twelve_chi = r * (C::c1_sq + C::c2) + 6 * c1_dot_c1X + 6 * (c1 * c1 - 2 * c2);
    if (twelve_chi % 12 != 0)
        throw Error(ErrorCode::NonIntegerResult, "Riemann-Roch gives " + std::to_string(twelve_chi) + "/12");
    return twelve_chi / 12;
}

std::array<Cohomology, 3> polyvector_cohomology()
{
    const Cohomology structure = cohomology(LineBundleClass::trivial());
    // H^0(T) = 0 (general type) and H^1(T) = 0 (rigidity), so h^2 = chi(T).
    const Cohomology tangent{0, 0, hrr_chi(tangent_bundle())};
    // wedge^2 T = omega^-1
    const Cohomology anticanonical = cohomology(LineBundleClass::omega().inverse());
    return {structure, tangent, anticanonical};
}

GradedDims hh_ambient()
{
    const auto h = polyvector_cohomology();
    GradedDims out;
    out.dims.assign(5, 0);
    for (std::size_t p = 0; p < 3; ++p) {
        const std::array<std::int64_t, 3> hp = {h[p].h0, h[p].h1, h[p].h2};
        for (std::size_t i = 0; i < 3; ++i)
            out.dims[p + i] += hp[i];
    }
    return out;
}

EtaleCover etale_cover_check(int e)
{
    if (e < 1)
        throw Error(ErrorCode::InvalidArgument, "cover order must be positive");
    EtaleCover c;
    c.order = e;
    const std::int64_t chi_omega = chi(LineBundleClass::omega());
    c.chi_omega = e * chi_omega;
    c.q = 0;
    c.p_g = c.chi_omega - 1 + c.q;

    // i = 0 contributes p_g(M) = 0; each twist by a nontrivial torsion class has
    // chi = 1 and h^2 = h^0(L0^-i) = 0, hence h^0 >= 1.
    const std::int64_t first = cohomology(LineBundleClass::omega()).h0;
    const std::int64_t lower_bound_total = first + (e - 1);
    c.summands.assign(static_cast<std::size_t>(e), 1);
    c.summands[0] = first;
    // Pigeonhole: the bounds already exhaust p_g(M'), so every bound is attained.
    const bool forced = lower_bound_total == c.p_g;
    const LineBundleClass twisted = LineBundleClass::omega() * LineBundleClass{0, 1, 0};
    c.consistent_with_table = forced && (e == 1 || cohomology(twisted).h0 == 1);
    return c;
}

GradedDims hh_homology_ambient()
{
    // HH_i = sum over q - p = i of h^{p,q}; degrees -2..2.
    GradedDims out;
    out.dims.assign(5, 0);
    for (int p = 0; p < 3; ++p)
        for (int q = 0; q < 3; ++q)
            out.dims[static_cast<std::size_t>(q - p + 2)] +=
                SurfaceConstants::hodge[static_cast<std::size_t>(p)][static_cast<std::size_t>(q)];
    return out;
}

GradedDims hh_homology_complement(int collection_length)
{
    GradedDims out = hh_homology_ambient();
    // Each exceptional object has the Hochschild homology of a point.
    out.dims[2] -= collection_length;
    for (auto d : out.dims)
        if (d < 0)
            throw Error(ErrorCode::NegativeDimension, "collection longer than HH_0 allows");
    return out;
}

std::array<int, 5> betti_from_hodge()
{
    std::array<int, 5> b{};
    for (int p = 0; p < 3; ++p)
        for (int q = 0; q < 3; ++q)
            b[static_cast<std::size_t>(p + q)] +=
                SurfaceConstants::hodge[static_cast<std::size_t>(p)][static_cast<std::size_t>(q)];
    return b;
}

}  // namespace fppcert::inv
