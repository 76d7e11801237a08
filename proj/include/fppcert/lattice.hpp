#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "fppcert/error.hpp"
#include "fppcert/extfield.hpp"
#include "fppcert/mat3.hpp"
#include "fppcert/report.hpp"

namespace fppcert::lattice {

enum class PlaneId { Mumford, CmszA, CmszB };

const char* to_string(PlaneId id);
/// Parses "mumford", "cmsz-a", "cmsz-b". Throws InvalidArgument.
PlaneId parse_plane(const std::string& name);

/// Torsion of the Picard subgroup P: Z/3 x (Z/2)^two_rank.
struct TorsionShape {
    int three_order = 3;
    int two_rank = 0;

    int order() const { return three_order * (1 << two_rank); }
    std::string to_string() const;
};

struct LatticeSpec {
    PlaneId plane;
    std::string name;
    TorsionShape torsion_of_P;
    int lift_count = 3;
    std::vector<std::string> generator_names;
    std::string lifted_generator;
};

LatticeSpec lattice_spec(PlaneId plane);

/*
 * Generator matrices, entries transcribed row by row:
 *
 *   Mumford:  sigma = [1 0 lambda; 0 0 -1; 0 1 -1]
 *             tau   = [0 0 1; 1 0 1+lambda; 0 1 lambda]
 *             rho   = [1 0 lambda; 0 1 -lambda^3/2; 0 0 lambda^2/2]
 *   CMSZ:     a3    = [0 0 -(S-1)/4; 1 0 1; 0 1 (S-1)/4]
 *             s     = [0 -1 -(S-1)/4; 1 -1 -(S-5)/4; 0 0 1]
 *
 * with lambda = 2u formal and S^2 = -15, S = 1 mod 4. Both CMSZ planes are
 * sublattices of the group generated by a3 and s.
 */
struct MumfordGenerators {
    ext::LambdaElem lambda;
    Mat3<ext::LambdaElem> sigma, tau, rho;
};

struct CmszGenerators {
    Mat3<ext::QuadElem> a3, s;
};

/// Mumford generators with lambda replaced by `lam` (default: the formal lambda).
MumfordGenerators mumford_generators(const ext::LambdaElem& lam = ext::LambdaElem::lambda());
CmszGenerators cmsz_generators();

/// The four determinant/valuation claims for the Mumford generators.
CertReport certify_mumford(const MumfordGenerators& gens = mumford_generators());

/// Mumford claims with u specialised to an integer unit and every matrix entry
/// embedded in Q_2 at the given precision.
CertReport certify_mumford_at_unit(const mpz_class& u, unsigned precision = padic::kDefaultPrecision);

CertReport certify_cmsz(const CmszGenerators& gens = cmsz_generators(),
                        unsigned precision = padic::kDefaultPrecision);

/// mu^{-1} * g over base(mu), mu^3 = det(g). Throws NotLiftable if 3 | v(det g).
template <class Base>
Mat3<ext::CubicElem<Base>> lift_to_sl3(const Mat3<Base>& g)
{
    const Base d = det(g);
    if (ext::is_zero_elem(d))
        throw Error(ErrorCode::NotLiftable, "singular matrix");
    const long vd = ext::valuation(d);
    if (vd % 3 == 0)
        throw Error(ErrorCode::NotLiftable,
                    "det has valuation " + std::to_string(vd) + ", a multiple of 3");
    const auto mu_inv = ext::CubicElem<Base>::mu_inverse(d);
    return g.map([&](const Base& x) { return mu_inv * ext::CubicElem<Base>::constant(d, x); });
}

/// Lifts the plane's non-SL3 generator and certifies det = 1, the absence of
/// primitive cube roots of unity in k, and the number of cube roots of det.
CertReport build_and_verify_lift(const LatticeSpec& plane);

/// Group-theoretic facts that are recorded but not computed.
CertReport paper_asserted_facts(const LatticeSpec& plane);

/// All generator matrices with exact coefficients, for external cross-checks.
nlohmann::ordered_json generator_matrices_json();

}  // namespace fppcert::lattice
