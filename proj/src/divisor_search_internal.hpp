#pragma once

#include <vector>

#include "fppcert/divisor_search.hpp"

namespace fppcert::divisor::detail {

using Vec7 = std::array<int, fano::kCount>;

/* Per-candidate result of a search kernel, merged into a SearchReport. */
struct Outcome {
    Rejection rejection = Rejection::None;
    std::uint64_t feasible_bijections = 0;
};

/* e_i = m_i - 2 and f_j from the folded line multiplicities. */
Vec7 excess_multiplicities(const CandidateDivisor& c);

/* The gluing predicate for one point: (e > 0 <=> f > 0) plus divisibility. */
inline bool gluing_ok(int e, int f, const SearchOptions& options)
{
    if ((e > 0) != (f > 0))
        return false;
    const int m = options.modulus;
    if (options.branchwise)
        return e % m == 0 && f % m == 0;
    return (e + f) % m == 0;
}

SearchReport assemble(const std::vector<CandidateDivisor>& candidates, const std::vector<Outcome>& outcomes,
                      const SearchOptions& options);

}  // namespace fppcert::divisor::detail
