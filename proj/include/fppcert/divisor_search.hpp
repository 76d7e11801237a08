#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "fppcert/fano.hpp"

namespace fppcert::divisor {

/*
 * Candidate degree-8 plane curves C1 over F_2 for the divisor non-existence
 * lemma. Geometric components of C1 that are not rational lines carry
 * multiplicity divisible by 3, so irreducible components of degree >= 3 would
 * contribute >= 9 > 8; the remaining F_2-irreducible components are the 7
 * rational lines and the conics. Hence every candidate is a line multiset plus
 * at most one conic of multiplicity 3 with two further line degrees.
 */
constexpr int kDegree = 8;
constexpr int kConicMultiplicity = 3;
constexpr int kBijectionCount = 5040;

struct CandidateDivisor {
    std::array<int, fano::kCount> line_mults{};  // f_j, by line index
    std::optional<fano::Conic> conic;
    int conic_mult = 0;

    int degree() const;
    /// m_i = sum of f_j over lines through p_i + conic_mult * localmult(conic, p_i).
    std::array<int, fano::kCount> point_multiplicities() const;
    /// Line multiplicities with the rational components of a line-pair or
    /// double-line conic folded in.
    std::array<int, fano::kCount> effective_line_mults() const;
    /// Number of distinct lines in line_mults (conic excluded).
    int distinct_lines() const;
    std::string to_string() const;
};

/// sigma[i] = index of the line whose strict transform is glued to E_i.
using GluingBijection = std::array<std::uint8_t, fano::kCount>;

/// All 7! bijections in lexicographic order.
const std::vector<GluingBijection>& all_bijections();

struct SearchOptions {
    int modulus = 3;
    bool require_min_multiplicity = true;
    /// Require modulus | e_i and modulus | f separately instead of their sum.
    bool branchwise = false;
    int jobs = 0;  // 0: OpenMP default
    bool collect_witnesses = false;
};

enum class Rejection { None, Degree, ConicDivisibility, MinMultiplicity };
const char* to_string(Rejection r);

/// Type invariants: degree 8, modulus | conic_mult, m_i >= 2 (when required).
Rejection check_invariants(const CandidateDivisor& c, const SearchOptions& options = {});

/// Throws InvalidCandidate if the invariants fail.
bool feasible(const CandidateDivisor& c, const GluingBijection& sigma, const SearchOptions& options = {});

/// Deterministic enumeration: C(14,6) line-only candidates in lexicographic
/// order, then each of the 63 conics with every degree-2 line multiset.
std::vector<CandidateDivisor> enumerate_candidates();

struct Witness {
    std::size_t index = 0;
    std::string candidate;
    std::array<int, fano::kCount> point_mults{};
    std::uint64_t feasible_bijections = 0;
    std::string reason;
};

struct Bucket {
    std::uint64_t candidates = 0;
    std::uint64_t feasible_pairs = 0;
    std::uint64_t distinct_supports = 0;
    std::uint64_t concurrent_supports = 0;
    int support_orbits = 0;
};

struct SearchReport {
    SearchOptions options;
    std::uint64_t candidates_examined = 0;
    std::uint64_t candidates_passing = 0;
    std::uint64_t raw_pair_space = 0;
    std::uint64_t pairs_examined = 0;
    std::uint64_t feasible_pairs = 0;
    std::uint64_t candidates_with_feasible_gluing = 0;
    std::map<std::string, std::uint64_t> rejections;
    /// Keyed by "<distinct lines> lines, <conic class or none>".
    std::map<std::string, Bucket> buckets;
    std::vector<Witness> witnesses;

    bool certified() const { return feasible_pairs == 0; }
};

/// OpenMP kernel. Result is independent of the number of workers.
SearchReport search_lemma3(const SearchOptions& options = {});
/// Single-threaded reference built directly on feasible().
SearchReport search_lemma3_serial(const SearchOptions& options = {});

std::string bucket_key(const CandidateDivisor& c);

struct BucketRow {
    std::string key;
    Bucket bucket;
};

/// Buckets ordered by distinct line count, then conic class.
std::vector<BucketRow> case_breakdown(const SearchReport& report);

}  // namespace fppcert::divisor
