#include "fppcert/divisor_search.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include <omp.h>

#include "divisor_search_internal.hpp"
#include "fppcert/error.hpp"

namespace fppcert::divisor {

using detail::Vec7;

int CandidateDivisor::degree() const
{
    return std::accumulate(line_mults.begin(), line_mults.end(), 0) + (conic ? 2 * conic_mult : 0);
}

std::array<int, fano::kCount> CandidateDivisor::point_multiplicities() const
{
    Vec7 m{};
    for (int j = 0; j < fano::kCount; ++j)
        for (const auto p : fano::points_on(fano::FLine::at(j)))
            m[static_cast<std::size_t>(p.index())] += line_mults[static_cast<std::size_t>(j)];
    if (conic)
        for (int i = 0; i < fano::kCount; ++i)
            m[static_cast<std::size_t>(i)] += conic_mult * fano::local_multiplicity(*conic, fano::FPoint::at(i));
    return m;
}

std::array<int, fano::kCount> CandidateDivisor::effective_line_mults() const
{
    Vec7 f = line_mults;
    if (conic)
        for (const auto l : fano::rational_components(*conic))
            f[static_cast<std::size_t>(l.index())] += conic_mult;
    return f;
}

int CandidateDivisor::distinct_lines() const
{
    return static_cast<int>(std::count_if(line_mults.begin(), line_mults.end(), [](int f) { return f > 0; }));
}

std::string CandidateDivisor::to_string() const
{
    std::ostringstream os;
    os << "lines=[";
    for (int j = 0; j < fano::kCount; ++j)
        os << (j ? "," : "") << line_mults[static_cast<std::size_t>(j)];
    os << "]";
    if (conic)
        os << " conic=" << conic_mult << "*(" << fano::to_string(*conic) << ")";
    return os.str();
}

const std::vector<GluingBijection>& all_bijections()
{
    static const std::vector<GluingBijection> perms = [] {
        std::vector<GluingBijection> out;
        out.reserve(kBijectionCount);
        GluingBijection p{0, 1, 2, 3, 4, 5, 6};
        do {
            out.push_back(p);
        } while (std::next_permutation(p.begin(), p.end()));
        return out;
    }();
    return perms;
}

const char* to_string(Rejection r)
{
    switch (r) {
    case Rejection::None: return "none";
    case Rejection::Degree: return "degree";
    case Rejection::ConicDivisibility: return "conic_divisibility";
    case Rejection::MinMultiplicity: return "min_multiplicity";
    }
    return "none";
}

Rejection check_invariants(const CandidateDivisor& c, const SearchOptions& options)
{
    if (options.modulus < 1)
        throw Error(ErrorCode::InvalidArgument, "modulus must be positive");
    if (c.degree() != kDegree)
        return Rejection::Degree;
    if (c.conic && c.conic_mult % options.modulus != 0)
        return Rejection::ConicDivisibility;
    if (options.require_min_multiplicity) {
        const auto m = c.point_multiplicities();
        if (std::any_of(m.begin(), m.end(), [](int x) { return x < 2; }))
            return Rejection::MinMultiplicity;
    }
    return Rejection::None;
}

namespace detail {

Vec7 excess_multiplicities(const CandidateDivisor& c)
{
    Vec7 e = c.point_multiplicities();
    for (auto& x : e)
        x -= 2;
    return e;
}

namespace {

/* Class of the gluing constraint on each side; point i can be glued to line j
   iff the classes are equal and nonnegative. */
int point_class(int e, const SearchOptions& o)
{
    const int m = o.modulus;
    if (e <= 0)
        return e % m == 0 ? 0 : -1;
    if (o.branchwise)
        return e % m == 0 ? 1 : -1;
    return 1 + (((-e) % m) + m) % m;
}

int line_class(int f, const SearchOptions& o)
{
    const int m = o.modulus;
    if (f == 0)
        return 0;
    if (o.branchwise)
        return f % m == 0 ? 1 : -2;
    return 1 + f % m;
}

std::string describe_class(int cls, const SearchOptions& o)
{
    if (cls == 0)
        return "f=0";
    if (cls < 0)
        return "none";
    if (o.branchwise)
        return "f>0,f=0 mod " + std::to_string(o.modulus);
    return "f>0,f=" + std::to_string(cls - 1) + " mod " + std::to_string(o.modulus);
}

std::string rejection_reason(const Vec7& e, const Vec7& f, const SearchOptions& o)
{
    std::map<int, int> need, offer;
    for (int x : e)
        ++need[point_class(x, o)];
    for (int x : f)
        ++offer[line_class(x, o)];
    std::ostringstream os;
    os << "points need {";
    bool first = true;
    for (const auto& [cls, n] : need) {
        os << (first ? "" : ", ") << describe_class(cls, o) << ": " << n;
        first = false;
    }
    os << "}; lines offer {";
    first = true;
    for (const auto& [cls, n] : offer) {
        os << (first ? "" : ", ") << describe_class(cls, o) << ": " << n;
        first = false;
    }
    os << "}";
    return os.str();
}

}  // namespace

SearchReport assemble(const std::vector<CandidateDivisor>& candidates, const std::vector<Outcome>& outcomes,
                      const SearchOptions& options)
{
    SearchReport r;
    r.options = options;
    r.candidates_examined = candidates.size();
    r.raw_pair_space = candidates.size() * static_cast<std::uint64_t>(kBijectionCount);
    std::map<std::string, std::set<std::uint8_t>> supports;
    for (std::size_t k = 0; k < candidates.size(); ++k) {
        const auto& c = candidates[k];
        const auto& out = outcomes[k];
        if (out.rejection != Rejection::None) {
            ++r.rejections[to_string(out.rejection)];
            continue;
        }
        ++r.candidates_passing;
        r.pairs_examined += kBijectionCount;
        r.feasible_pairs += out.feasible_bijections;
        if (out.feasible_bijections > 0)
            ++r.candidates_with_feasible_gluing;

        const std::string key = bucket_key(c);
        auto& b = r.buckets[key];
        ++b.candidates;
        b.feasible_pairs += out.feasible_bijections;
        std::uint8_t support = 0;
        for (int j = 0; j < fano::kCount; ++j)
            if (c.line_mults[static_cast<std::size_t>(j)] > 0)
                support = static_cast<std::uint8_t>(support | (1u << j));
        supports[key].insert(support);

        if (options.collect_witnesses) {
            const Vec7 e = excess_multiplicities(c);
            const Vec7 f = c.effective_line_mults();
            Witness w;
            w.index = k;
            w.candidate = c.to_string();
            w.point_mults = c.point_multiplicities();
            w.feasible_bijections = out.feasible_bijections;
            w.reason = out.feasible_bijections > 0 ? "feasible gluing exists" : rejection_reason(e, f, options);
            r.witnesses.push_back(std::move(w));
        }
    }
    for (auto& [key, b] : r.buckets) {
        const auto& s = supports[key];
        b.distinct_supports = s.size();
        b.concurrent_supports = static_cast<std::uint64_t>(std::count_if(s.begin(), s.end(), fano::concurrent));
        b.support_orbits = fano::orbit_count({s.begin(), s.end()});
    }
    return r;
}

}  // namespace detail

bool feasible(const CandidateDivisor& c, const GluingBijection& sigma, const SearchOptions& options)
{
    const Rejection r = check_invariants(c, options);
    if (r != Rejection::None)
        throw Error(ErrorCode::InvalidCandidate, std::string("candidate fails ") + to_string(r) + ": " + c.to_string());
    const Vec7 e = detail::excess_multiplicities(c);
    const Vec7 f = c.effective_line_mults();
    for (std::size_t i = 0; i < fano::kCount; ++i)
        if (!detail::gluing_ok(e[i], f[sigma[i]], options))
            return false;
    return true;
}

namespace {

void compositions(int total, int parts, std::vector<Vec7>& out)
{
    Vec7 current{};
    auto rec = [&](auto&& self, int pos, int remaining) -> void {
        if (pos == parts - 1) {
            current[static_cast<std::size_t>(pos)] = remaining;
            out.push_back(current);
            return;
        }
        for (int v = 0; v <= remaining; ++v) {
            current[static_cast<std::size_t>(pos)] = v;
            self(self, pos + 1, remaining - v);
        }
    };
    rec(rec, 0, total);
}

}  // namespace

std::vector<CandidateDivisor> enumerate_candidates()
{
    std::vector<CandidateDivisor> out;
    std::vector<Vec7> line_only, small;
    compositions(kDegree, fano::kCount, line_only);
    compositions(kDegree - 2 * kConicMultiplicity, fano::kCount, small);
    out.reserve(line_only.size() + fano::kConicCount * small.size());
    for (const auto& f : line_only)
        out.push_back({f, std::nullopt, 0});
    for (int q = 1; q <= fano::kConicCount; ++q)
        for (const auto& f : small)
            out.push_back({f, fano::Conic{static_cast<std::uint8_t>(q)}, kConicMultiplicity});
    return out;
}

std::string bucket_key(const CandidateDivisor& c)
{
    return std::to_string(c.distinct_lines()) + " lines, " +
           (c.conic ? fano::to_string(fano::classify_conic(*c.conic)) : std::string("no conic"));
}

SearchReport search_lemma3(const SearchOptions& options)
{
    if (options.modulus < 1)
        throw Error(ErrorCode::InvalidArgument, "modulus must be positive");
    const auto candidates = enumerate_candidates();
    const auto& perms = all_bijections();
    std::vector<detail::Outcome> outcomes(candidates.size());
    const auto n = static_cast<std::int64_t>(candidates.size());
    const int threads = options.jobs > 0 ? options.jobs : omp_get_max_threads();

#pragma omp parallel for schedule(dynamic, 16) num_threads(threads)
    for (std::int64_t k = 0; k < n; ++k) {
        const auto& c = candidates[static_cast<std::size_t>(k)];
        auto& out = outcomes[static_cast<std::size_t>(k)];
        out.rejection = check_invariants(c, options);
        if (out.rejection != Rejection::None)
            continue;
        const Vec7 e = detail::excess_multiplicities(c);
        const Vec7 f = c.effective_line_mults();
        // ok[i] has bit j set iff point i may be glued to line j.
        std::array<std::uint8_t, fano::kCount> ok{};
        for (std::size_t i = 0; i < fano::kCount; ++i)
            for (std::size_t j = 0; j < fano::kCount; ++j)
                if (detail::gluing_ok(e[i], f[j], options))
                    ok[i] = static_cast<std::uint8_t>(ok[i] | (1u << j));
        std::uint64_t count = 0;
        for (const auto& s : perms) {
            count += (ok[0] >> s[0]) & (ok[1] >> s[1]) & (ok[2] >> s[2]) & (ok[3] >> s[3]) & (ok[4] >> s[4]) &
                     (ok[5] >> s[5]) & (ok[6] >> s[6]) & 1u;
        }
        out.feasible_bijections = count;
    }
    return detail::assemble(candidates, outcomes, options);
}

std::vector<BucketRow> case_breakdown(const SearchReport& report)
{
    std::vector<BucketRow> rows;
    for (const auto& [key, b] : report.buckets)
        rows.push_back({key, b});
    auto rank = [](const std::string& key) {
        const bool none = key.find("no conic") != std::string::npos;
        return std::make_pair(none ? 0 : 1, key);
    };
    std::stable_sort(rows.begin(), rows.end(),
                     [&](const BucketRow& a, const BucketRow& b) { return rank(a.key) < rank(b.key); });
    return rows;
}

}  // namespace fppcert::divisor
