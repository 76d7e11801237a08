#include "fppcert/hochschild.hpp"

#include <algorithm>

namespace fppcert::hh {

ExtTable ExtTable::zeros(std::size_t n)
{
    ExtTable t;
    t.objects.assign(n, LineBundleClass::trivial());
    t.dims.assign(n, std::vector<std::array<std::int64_t, 3>>(n, {0, 0, 0}));
    t.serre.assign(n, std::vector<std::array<std::int64_t, 5>>(n, {0, 0, 0, 0, 0}));
    return t;
}

std::vector<LineBundleClass> standard_collection(LineBundleClass l1_torsion, LineBundleClass l2_torsion)
{
    LineBundleClass l1 = l1_torsion, l2 = l2_torsion;
    l1.degree = -1;
    l2.degree = -2;
    return {LineBundleClass::trivial(), l1, l2};
}

ExtTable build_ext_table(const std::vector<LineBundleClass>& collection)
{
    ExtTable t = ExtTable::zeros(collection.size());
    t.objects = collection;
    const LineBundleClass omega_inv = LineBundleClass::omega().inverse();
    for (std::size_t i = 0; i < collection.size(); ++i)
        for (std::size_t j = 0; j < collection.size(); ++j) {
            const auto h = inv::cohomology(collection[j] * collection[i].inverse());
            t.dims[i][j] = {h.h0, h.h1, h.h2};
            // Ext^k(E_j, S^-1 E_i) = H^{k-2}(E_i (x) omega^-1 (x) E_j^-1)
            const auto s = inv::cohomology(collection[i] * omega_inv * collection[j].inverse());
            t.serre[j][i] = {0, 0, s.h0, s.h1, s.h2};
        }
    return t;
}

bool exceptional_check(const ExtTable& table)
{
    const std::array<std::int64_t, 3> scalars{1, 0, 0}, zero{0, 0, 0};
    for (std::size_t i = 0; i < table.size(); ++i) {
        if (table.dims[i][i] != scalars)
            return false;
        for (std::size_t j = i + 1; j < table.size(); ++j)
            if (table.dims[j][i] != zero)
                return false;
    }
    return true;
}

namespace {

/* Dimension of each total degree in a tensor product of graded pieces. */
std::vector<std::int64_t> convolve(const std::vector<std::int64_t>& a, const std::vector<std::int64_t>& b)
{
    std::vector<std::int64_t> out(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            out[i + j] += a[i] * b[j];
    return out;
}

}  // namespace

E1Page nhh_e1_page(const ExtTable& table)
{
    E1Page page;
    const int n = static_cast<int>(table.size());
    // Chains are enumerated as bitmasks; the bits in increasing order give a_0 < ... < a_p.
    for (unsigned mask = 1; mask < (1u << n); ++mask) {
        std::vector<int> chain;
        for (int a = 0; a < n; ++a)
            if (mask >> a & 1u)
                chain.push_back(a);
        const int p = static_cast<int>(chain.size()) - 1;
        std::vector<std::int64_t> graded{1};
        for (int l = 0; l < p; ++l) {
            const auto& d = table.dims[static_cast<std::size_t>(chain[static_cast<std::size_t>(l)])]
                                      [static_cast<std::size_t>(chain[static_cast<std::size_t>(l + 1)])];
            graded = convolve(graded, {d.begin(), d.end()});
        }
        const auto& last = table.serre[static_cast<std::size_t>(chain.back())][static_cast<std::size_t>(chain.front())];
        graded = convolve(graded, {last.begin(), last.end()});
        for (std::size_t q = 0; q < graded.size(); ++q) {
            if (graded[q] == 0)
                continue;
            page.cells[{-p, static_cast<int>(q)}] += graded[q];
            page.summands.push_back({chain, static_cast<int>(q), graded[q]});
        }
    }
    for (auto it = page.cells.begin(); it != page.cells.end();)
        it = it->second == 0 ? page.cells.erase(it) : std::next(it);
    return page;
}

bool degeneration_check(const std::map<Cell, std::int64_t>& cells)
{
    for (const auto& [cell, dim] : cells) {
        if (dim == 0)
            continue;
        const auto [a, b] = cell;
        // Targets leave the page once -p + r > 0.
        for (int r = 1; a + r <= 0; ++r) {
            auto it = cells.find({a + r, b - r + 1});
            if (it != cells.end() && it->second != 0)
                return false;
        }
    }
    return true;
}

bool degeneration_check(const E1Page& page) { return degeneration_check(page.cells); }

GradedDims nhh_dims(const E1Page& page)
{
    GradedDims out;
    for (const auto& [cell, dim] : page.cells) {
        const int t = cell.first + cell.second;
        if (t < 0)
            throw Error(ErrorCode::InvalidArgument, "E1 cell in negative total degree");
        if (out.dims.size() <= static_cast<std::size_t>(t))
            out.dims.resize(static_cast<std::size_t>(t) + 1, 0);
        out.dims[static_cast<std::size_t>(t)] += dim;
    }
    return out;
}

namespace {

struct Ranks {
    RankMap value;
    std::map<int, bool> known;
};

/* Each r_t is known, forced to 0 by a vanishing side, or unknown. */
Ranks resolve_ranks(const GradedDims& nhh, const GradedDims& hh, const RankMap& known, int top)
{
    for (auto d : nhh.dims)
        if (d < 0)
            throw Error(ErrorCode::NegativeDimension, "negative NHH dimension");
    for (auto d : hh.dims)
        if (d < 0)
            throw Error(ErrorCode::NegativeDimension, "negative HH dimension");
    Ranks r;
    for (int t = 0; t <= top + 1; ++t) {
        const auto bound = std::min(nhh.at(static_cast<std::size_t>(t)), hh.at(static_cast<std::size_t>(t)));
        auto it = known.find(t);
        if (it != known.end()) {
            if (it->second < 0 || it->second > bound)
                throw Error(ErrorCode::NegativeDimension,
                            "rank " + std::to_string(it->second) + " in degree " + std::to_string(t) +
                                " exceeds the bound " + std::to_string(bound));
            r.value[t] = it->second;
            r.known[t] = true;
        } else {
            r.value[t] = 0;
            r.known[t] = bound == 0;
        }
    }
    return r;
}

}  // namespace

GradedDims les_solve(const GradedDims& nhh, const GradedDims& hh_ambient, const RankMap& known_ranks)
{
    const int top = static_cast<int>(std::max(nhh.dims.size(), hh_ambient.dims.size()));
    const Ranks ranks = resolve_ranks(nhh, hh_ambient, known_ranks, top);
    GradedDims out;
    out.dims.assign(static_cast<std::size_t>(top), 0);
    for (int t = 0; t < top; ++t) {
        if (!ranks.known.at(t))
            throw UnderdeterminedError(t, t);
        if (!ranks.known.at(t + 1))
            throw UnderdeterminedError(t, t + 1);
        const auto ts = static_cast<std::size_t>(t);
        const std::int64_t coker = hh_ambient.at(ts) - ranks.value.at(t);
        const std::int64_t ker_next = nhh.at(ts + 1) - ranks.value.at(t + 1);
        out.dims[ts] = coker + ker_next;
    }
    return out;
}

LesCheck verify_les(const GradedDims& nhh, const GradedDims& hh_ambient, const GradedDims& hh_complement,
                    const RankMap& known_ranks)
{
    LesCheck check;
    const int top = static_cast<int>(
        std::max({nhh.dims.size(), hh_ambient.dims.size(), hh_complement.dims.size()}));
    const Ranks ranks = resolve_ranks(nhh, hh_ambient, known_ranks, top);
    check.ranks = ranks.value;
    bool exact = true;
    for (int t = 0; t <= top; ++t) {
        const auto ts = static_cast<std::size_t>(t);
        const std::int64_t n = nhh.at(ts), h = hh_ambient.at(ts), a = hh_complement.at(ts);
        const std::int64_t f = ranks.value.at(t);                          // NHH^t -> HH^t
        const std::int64_t g = h - f;                                      // HH^t -> A^t, kernel = im f
        const std::int64_t delta = (t + 1 <= top) ? nhh.at(ts + 1) - ranks.value.at(t + 1) : 0;  // A^t -> NHH^{t+1}
        const std::int64_t delta_prev = t > 0 ? n - f : 0;                 // A^{t-1} -> NHH^t, image = ker f
        // ranks within bounds
        exact = exact && f >= 0 && f <= std::min(n, h) && g >= 0 && g <= a && delta >= 0 && delta <= a;
        // exactness at A^t: ker delta = im g
        exact = exact && (a - delta == g);
        // exactness at NHH^t: im delta_{t-1} = ker f
        exact = exact && (t == 0 ? n - f == 0 : delta_prev == n - f);
        check.alternating_sum += (t % 2 == 0 ? 1 : -1) * (n - h + a);
    }
    check.exact = exact && check.alternating_sum == 0;
    return check;
}

bool positive_products_forced_zero(const GradedDims& dims)
{
    const auto& d = dims.dims;
    for (std::size_t s = 1; s < d.size(); ++s)
        for (std::size_t t = s; t < d.size(); ++t)
            if (d[s] > 0 && d[t] > 0 && dims.at(s + t) != 0)
                return false;
    return true;
}

}  // namespace fppcert::hh
