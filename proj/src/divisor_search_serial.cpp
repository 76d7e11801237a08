#include "divisor_search_internal.hpp"

namespace fppcert::divisor {

SearchReport search_lemma3_serial(const SearchOptions& options)
{
    const auto candidates = enumerate_candidates();
    const auto& perms = all_bijections();
    std::vector<detail::Outcome> outcomes(candidates.size());
    for (std::size_t k = 0; k < candidates.size(); ++k) {
        outcomes[k].rejection = check_invariants(candidates[k], options);
        if (outcomes[k].rejection != Rejection::None)
            continue;
        std::uint64_t count = 0;
        for (const auto& sigma : perms)
            if (feasible(candidates[k], sigma, options))
                ++count;
        outcomes[k].feasible_bijections = count;
    }
    return detail::assemble(candidates, outcomes, options);
}

}  // namespace fppcert::divisor
