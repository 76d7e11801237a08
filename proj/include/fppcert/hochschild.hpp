#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "fppcert/error.hpp"
#include "fppcert/invariants.hpp"

namespace fppcert::hh {

using inv::GradedDims;
using inv::LineBundleClass;

/*
 * Ext dimensions of a collection of line bundles E_0..E_{n-1}:
 *   dims[i][j][k]  = dim Ext^k(E_i, E_j)          = h^k(E_j (x) E_i^-1),        k = 0..2
 *   serre[j][i][k] = dim Ext^k(E_j, S^-1 E_i)     = h^{k-2}(E_i (x) omega^-1 (x) E_j^-1), k = 0..4
 * where S^-1 E = E (x) omega^-1 [-2].
 */
struct ExtTable {
    std::vector<LineBundleClass> objects;
    std::vector<std::vector<std::array<std::int64_t, 3>>> dims;
    std::vector<std::vector<std::array<std::int64_t, 5>>> serre;

    std::size_t size() const { return objects.size(); }
    /// All-zero table for n objects (for hand-built inputs).
    static ExtTable zeros(std::size_t n);
};

/// The collection (O, L1, L2) of degrees 0, -1, -2 with the given torsion on L1, L2.
std::vector<LineBundleClass> standard_collection(LineBundleClass l1_torsion = {}, LineBundleClass l2_torsion = {});

ExtTable build_ext_table(const std::vector<LineBundleClass>& collection);

/// End = scalars for every object, and Ext^*(E_j, E_i) = 0 whenever j comes after i.
bool exceptional_check(const ExtTable& table);

using Cell = std::pair<int, int>;  // (-p, q)

struct E1Summand {
    std::vector<int> chain;  // a_0 < ... < a_p
    int q = 0;
    std::int64_t dim = 0;
};

struct E1Page {
    std::map<Cell, std::int64_t> cells;  // nonzero cells only
    std::vector<E1Summand> summands;     // nonzero chain contributions
};

/// Every cell of the normal Hochschild E1 page, summing over all chains and
/// all splittings k_0 + ... + k_p = q. No vanishing is assumed.
E1Page nhh_e1_page(const ExtTable& table);

/// True iff no differential d_r: (-p, q) -> (-p + r, q - r + 1), r >= 1, joins two nonzero cells.
bool degeneration_check(const E1Page& page);
bool degeneration_check(const std::map<Cell, std::int64_t>& cells);

/// Dimensions by total degree q - p.
GradedDims nhh_dims(const E1Page& page);

class UnderdeterminedError : public Error {
public:
    UnderdeterminedError(int degree, int missing_rank)
        : Error(ErrorCode::Underdetermined, "degree " + std::to_string(degree) + " needs rank of NHH^" +
                                                std::to_string(missing_rank) + " -> HH^" +
                                                std::to_string(missing_rank)),
          degree_(degree),
          missing_rank_(missing_rank)
    {
    }

    int degree() const { return degree_; }
    int missing_rank() const { return missing_rank_; }

private:
    int degree_;
    int missing_rank_;
};

/// Ranks of NHH^t -> HH^t keyed by t.
using RankMap = std::map<int, std::int64_t>;

/*
 * Solves the long exact sequence of NHH -> HH(X) -> HH(A) -> NHH[1]:
 *   dim HH^t(A) = (hh_t - r_t) + (nhh_{t+1} - r_{t+1}),  r_t = rank(NHH^t -> HH^t).
 * A rank is forced to 0 when either side vanishes; every other rank that
 * affects the output must be supplied.
 */
GradedDims les_solve(const GradedDims& nhh, const GradedDims& hh_ambient, const RankMap& known_ranks);

struct LesCheck {
    bool exact = false;
    std::int64_t alternating_sum = 0;
    RankMap ranks;  // every r_t used
};

/// Rebuilds all maps of the sequence and checks rank-nullity at every node.
LesCheck verify_les(const GradedDims& nhh, const GradedDims& hh_ambient, const GradedDims& hh_complement,
                    const RankMap& known_ranks);

/// True iff dims[s] * dims[t] > 0 with s, t > 0 always forces dims[s + t] = 0.
bool positive_products_forced_zero(const GradedDims& dims);

}  // namespace fppcert::hh
