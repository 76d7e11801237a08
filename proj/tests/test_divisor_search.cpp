#include <doctest.h>

#include <set>

#include "fppcert/divisor_search.hpp"
#include "fppcert/error.hpp"
#include "random_cases.hpp"

using namespace fppcert;
using namespace fppcert::divisor;
using fano::FLine;
using fano::FPoint;

namespace {

using Vec7 = std::array<int, fano::kCount>;

/* Point multiplicities straight from incidence and the conic's own gradient. */
Vec7 oracle_point_mults(const CandidateDivisor& c)
{
    Vec7 m{};
    for (int i = 0; i < fano::kCount; ++i)
        for (int j = 0; j < fano::kCount; ++j)
            if (fano::incident(FPoint::at(i), FLine::at(j)))
                m[static_cast<std::size_t>(i)] += c.line_mults[static_cast<std::size_t>(j)];
    if (c.conic)
        for (int i = 0; i < fano::kCount; ++i)
            m[static_cast<std::size_t>(i)] += c.conic_mult * fano::local_multiplicity(*c.conic, FPoint::at(i));
    return m;
}

bool compatible(int e, int f, int modulus, bool branchwise)
{
    if ((e > 0) != (f > 0))
        return false;
    return branchwise ? e % modulus == 0 && f % modulus == 0 : (e + f) % modulus == 0;
}

/* Number of gluing bijections, as the permanent of the compatibility matrix
   computed by dynamic programming over subsets of lines. */
std::uint64_t oracle_count(const CandidateDivisor& c, int modulus, bool branchwise)
{
    const Vec7 m = oracle_point_mults(c);
    const Vec7 f = c.effective_line_mults();
    std::array<std::uint64_t, 128> ways{};
    ways[0] = 1;
    for (unsigned used = 0; used < 128; ++used) {
        if (!ways[used])
            continue;
        const int i = __builtin_popcount(used);
        if (i == fano::kCount)
            continue;
        for (int j = 0; j < fano::kCount; ++j)
            if (!(used >> j & 1u) &&
                compatible(m[static_cast<std::size_t>(i)] - 2, f[static_cast<std::size_t>(j)], modulus, branchwise))
                ways[used | 1u << j] += ways[used];
    }
    return ways[127];
}

CandidateDivisor lines_only(Vec7 f) { return {f, std::nullopt, 0}; }

void check_reports_equal(const SearchReport& a, const SearchReport& b)
{
    CHECK(a.candidates_examined == b.candidates_examined);
    CHECK(a.candidates_passing == b.candidates_passing);
    CHECK(a.pairs_examined == b.pairs_examined);
    CHECK(a.feasible_pairs == b.feasible_pairs);
    CHECK(a.candidates_with_feasible_gluing == b.candidates_with_feasible_gluing);
    CHECK(a.rejections == b.rejections);
    REQUIRE(a.buckets.size() == b.buckets.size());
    for (const auto& [key, bucket] : a.buckets) {
        const auto& other = b.buckets.at(key);
        CHECK(bucket.candidates == other.candidates);
        CHECK(bucket.feasible_pairs == other.feasible_pairs);
        CHECK(bucket.support_orbits == other.support_orbits);
    }
    REQUIRE(a.witnesses.size() == b.witnesses.size());
    for (std::size_t k = 0; k < a.witnesses.size(); ++k) {
        CHECK(a.witnesses[k].index == b.witnesses[k].index);
        CHECK(a.witnesses[k].feasible_bijections == b.witnesses[k].feasible_bijections);
        CHECK(a.witnesses[k].reason == b.witnesses[k].reason);
    }
}

}  // namespace

TEST_CASE("bijections")
{
    const auto& p = all_bijections();
    CHECK(p.size() == 5040);
    CHECK(std::set<GluingBijection>(p.begin(), p.end()).size() == 5040);
    CHECK(std::is_sorted(p.begin(), p.end()));
}

TEST_CASE("candidate enumeration")
{
    const auto all = enumerate_candidates();
    CHECK(all.size() == 3003 + 63 * 28);
    std::set<std::string> seen;
    for (const auto& c : all) {
        CHECK(c.degree() == kDegree);
        CHECK(c.point_multiplicities() == oracle_point_mults(c));
        seen.insert(c.to_string());
    }
    CHECK(seen.size() == all.size());
}

TEST_CASE("worked candidates")
{
    // one double line and six simple lines
    const auto c = lines_only({2, 1, 1, 1, 1, 1, 1});
    CHECK(check_invariants(c) == Rejection::None);
    for (const auto& sigma : all_bijections())
        CHECK_FALSE(feasible(c, sigma));
    CHECK(oracle_count(c, 3, false) == 0);

    // smooth conic with multiplicity 3 plus a double line
    const fano::Conic smooth{static_cast<std::uint8_t>(1 << 0 | 1 << 5)};
    REQUIRE(fano::classify_conic(smooth) == fano::ConicClass::Smooth);
    for (int j = 0; j < fano::kCount; ++j) {
        CandidateDivisor d{{}, smooth, 3};
        d.line_mults[static_cast<std::size_t>(j)] = 2;
        CHECK(d.degree() == 8);
        if (check_invariants(d) != Rejection::None)
            continue;
        for (const auto& sigma : all_bijections())
            CHECK_FALSE(feasible(d, sigma));
    }

    // the empty divisor is not a candidate
    try {
        feasible(lines_only({}), all_bijections().front());
        FAIL("no error");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::InvalidCandidate);
    }
    CHECK(check_invariants(lines_only({})) == Rejection::Degree);
    CHECK(check_invariants(lines_only({8, 0, 0, 0, 0, 0, 0})) == Rejection::MinMultiplicity);
    CHECK(check_invariants({{1, 1, 0, 0, 0, 0, 0}, smooth, 3}, {.modulus = 2}) == Rejection::ConicDivisibility);
}

TEST_CASE("per-candidate counts match the permanent oracle")
{
    for (int modulus : {1, 2, 3, 4}) {
        for (bool branchwise : {false, true}) {
            SearchOptions o;
            o.modulus = modulus;
            o.branchwise = branchwise;
            o.collect_witnesses = true;
            const auto r = search_lemma3(o);
            const auto all = enumerate_candidates();
            std::uint64_t total = 0;
            for (const auto& w : r.witnesses) {
                const auto expected = oracle_count(all[w.index], modulus, branchwise);
                CHECK(w.feasible_bijections == expected);
                total += expected;
            }
            CHECK(r.feasible_pairs == total);
            CHECK(r.witnesses.size() == r.candidates_passing);
            CHECK(r.pairs_examined == r.candidates_passing * 5040);
            CHECK(r.raw_pair_space == 4767ull * 5040);
            if (modulus == 3)
                CHECK(r.certified());
        }
    }
}

TEST_CASE("lemma holds and the negative control fails")
{
    const auto r3 = search_lemma3();
    CHECK(r3.feasible_pairs == 0);
    CHECK(r3.candidates_passing > 0);
    const auto r1 = search_lemma3({.modulus = 1});
    CHECK(r1.feasible_pairs > 0);
    CHECK_FALSE(r1.certified());
}

TEST_CASE("dropping the multiplicity bound admits more candidates")
{
    const auto strict = search_lemma3();
    const auto loose = search_lemma3({.require_min_multiplicity = false});
    CHECK(loose.candidates_passing > strict.candidates_passing);
    CHECK(loose.rejections.count("min_multiplicity") == 0);
}

TEST_CASE("serial reference and parallel kernel agree")
{
    for (int modulus : {1, 3}) {
        SearchOptions o;
        o.modulus = modulus;
        o.collect_witnesses = true;
        const auto serial = search_lemma3_serial(o);
        for (int jobs : {1, 2, 3, 8}) {
            o.jobs = jobs;
            check_reports_equal(serial, search_lemma3(o));
        }
    }
}

TEST_CASE("feasible counts are invariant under collineations")
{
    const auto all = enumerate_candidates();
    const auto& group = fano::collineation_group();
    const SearchOptions o{.modulus = 1};
    std::vector<const CandidateDivisor*> passing;
    for (const auto& c : all)
        if (check_invariants(c, o) == Rejection::None)
            passing.push_back(&c);
    REQUIRE(!passing.empty());
    for (int t = 0; t < 20; ++t) {
        const auto& g = group[static_cast<std::size_t>(fppcert::testing::uniform(0, 167))];
        const auto& c = *passing[static_cast<std::size_t>(
            fppcert::testing::uniform(0, static_cast<long>(passing.size()) - 1))];
        CandidateDivisor image{{}, std::nullopt, c.conic_mult};
        for (int j = 0; j < fano::kCount; ++j)
            image.line_mults[static_cast<std::size_t>(g.apply(FLine::at(j)).index())] =
                c.line_mults[static_cast<std::size_t>(j)];
        if (c.conic)
            image.conic = g.apply(*c.conic);
        REQUIRE(check_invariants(image, o) == Rejection::None);
        std::uint64_t a = 0, b = 0;
        for (const auto& sigma : all_bijections()) {
            a += feasible(c, sigma, o);
            b += feasible(image, sigma, o);
        }
        CHECK(a == b);
        CHECK(bucket_key(image) == bucket_key(c));
    }
}

TEST_CASE("case breakdown")
{
    const auto r = search_lemma3();
    const auto rows = case_breakdown(r);
    std::uint64_t total = 0;
    bool seen_conic = false;
    for (const auto& row : rows) {
        total += row.bucket.candidates;
        const bool conic = row.key.find("no conic") == std::string::npos;
        CHECK((!seen_conic || conic));  // line-only buckets come first
        seen_conic = seen_conic || conic;
        CHECK(row.bucket.feasible_pairs == 0);
        CHECK(row.bucket.support_orbits >= 1);
    }
    CHECK(total == r.candidates_passing);
    CHECK(r.buckets.at("3 lines, no conic").concurrent_supports == r.buckets.at("3 lines, no conic").distinct_supports);
    CHECK_THROWS_AS(search_lemma3({.modulus = 0}), Error);
}
