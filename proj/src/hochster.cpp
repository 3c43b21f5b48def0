#include "rmac/hochster.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>

#include "parallel.hpp"
#include "rmac/combinatorics.hpp"
#include "rmac/errors.hpp"

namespace rmac {

std::uint64_t BigradedTable::at(int i, int j) const
{
    auto it = entries_.find({j, i});
    return it == entries_.end() ? 0 : it->second;
}

void BigradedTable::add(int i, int j, std::uint64_t value)
{
    if (value == 0)
        return;
    entries_[{j, i}] += value;
}

void BigradedTable::merge(const BigradedTable& other)
{
    if (other.n_ != n_ || !(other.field_ == field_))
        throw std::invalid_argument("cannot merge tables over different n or field");
    for (const auto& [key, value] : other.entries_)
        entries_[key] += value;
}

std::uint64_t BigradedTable::total() const
{
    std::uint64_t sum = 0;
    for (const auto& [key, value] : entries_)
        sum += value;
    return sum;
}

BigradedTable bigraded_betti(const SimplicialComplex& complex, const FieldSpec& field,
                             const HochsterOptions& options)
{
    const int n = complex.n();

    // Subset sizes to visit, and for each size the homological degrees k = j - i - 1 needed.
    std::vector<std::set<int>> degrees(static_cast<std::size_t>(n + 1));
    std::vector<bool> all_degrees(static_cast<std::size_t>(n + 1), !options.filter.has_value());
    if (options.filter) {
        for (const Bidegree& b : *options.filter)
            if (b.j >= 0 && b.j <= n && b.i >= 0 && b.i <= b.j)
                degrees[static_cast<std::size_t>(b.j)].insert(b.j - b.i - 1);
    }

    std::uint64_t subset_count = 0;
    for (int j = 0; j <= n; ++j) {
        const auto idx = static_cast<std::size_t>(j);
        if (all_degrees[idx] || !degrees[idx].empty())
            subset_count += binomial(static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(j));
    }
    if (!options.override_guard && subset_count > (std::uint64_t{1} << kHochsterVertexGuard))
        throw GuardError("bigraded_betti would enumerate " + std::to_string(subset_count) +
                         " vertex subsets (limit 2^" + std::to_string(kHochsterVertexGuard) +
                         "); restrict the bidegrees or override the guard");

    std::vector<VertexSet> subsets;
    subsets.reserve(static_cast<std::size_t>(subset_count));
    for (int j = 0; j <= n; ++j) {
        const auto idx = static_cast<std::size_t>(j);
        if (all_degrees[idx] || !degrees[idx].empty()) {
            auto level = k_subsets(n, j);
            subsets.insert(subsets.end(), level.begin(), level.end());
        }
    }

    const unsigned workers = detail::resolve_workers(options.workers);
    std::vector<BigradedTable> partial(workers, BigradedTable(n, field));
    constexpr std::size_t kChunk = 256;
    const std::size_t chunks = (subsets.size() + kChunk - 1) / kChunk;
    detail::parallel_for(chunks, workers, [&](std::size_t chunk, unsigned worker) {
        BigradedTable& local = partial[worker];
        const std::size_t end = std::min(subsets.size(), (chunk + 1) * kChunk);
        for (std::size_t t = chunk * kChunk; t < end; ++t) {
            const VertexSet subset = subsets[t];
            const int j = subset.size();
            const SimplicialComplex restricted = full_subcomplex(complex, subset);
            if (all_degrees[static_cast<std::size_t>(j)]) {
                const auto betti = reduced_betti_numbers(restricted, field);
                for (std::size_t slot = 0; slot < betti.size(); ++slot) {
                    const int k = static_cast<int>(slot) - 1;
                    local.add(j - k - 1, j, betti[slot]);
                }
            } else {
                for (int k : degrees[static_cast<std::size_t>(j)])
                    local.add(j - k - 1, j, reduced_betti(restricted, k, field));
            }
        }
    });

    BigradedTable table(n, field);
    for (const auto& part : partial)
        table.merge(part);
    if (options.filter) {
        BigradedTable filtered(n, field);
        for (const Bidegree& b : *options.filter)
            filtered.add(b.i, b.j, table.at(b.i, b.j));
        return filtered;
    }
    return table;
}

std::vector<std::uint64_t> zk_betti_numbers(const BigradedTable& table)
{
    std::vector<std::uint64_t> betti(1, 0);
    for (const auto& [key, value] : table.entries_by_j()) {
        const auto [j, i] = key;
        const auto l = static_cast<std::size_t>(2 * j - i);
        if (betti.size() <= l)
            betti.resize(l + 1, 0);
        betti[l] += value;
    }
    while (betti.size() > 1 && betti.back() == 0)
        betti.pop_back();
    return betti;
}

std::vector<std::uint64_t> zk_betti_numbers(const SimplicialComplex& complex, const FieldSpec& field,
                                            const HochsterOptions& options)
{
    HochsterOptions unfiltered = options;
    unfiltered.filter.reset();
    return zk_betti_numbers(bigraded_betti(complex, field, unfiltered));
}

std::vector<VertexSet> minimal_non_faces(const SimplicialComplex& complex)
{
    // A minimal non-face is a non-face all of whose facets (codimension-one
    // faces) are present, so it is some face plus one label.
    std::set<std::uint64_t> found;
    const int n = complex.n();
    auto consider = [&](VertexSet candidate) {
        if (complex.contains(candidate))
            return;
        for (int v : candidate.labels())
            if (!complex.contains(candidate.without(v)))
                return;
        found.insert(candidate.bits());
    };
    for (int v = 1; v <= n; ++v)
        consider(VertexSet{v});
    for (int k = 0; k <= complex.dim(); ++k)
        for (VertexSet face : complex.faces(k))
            for (int v = 1; v <= n; ++v)
                if (!face.contains(v))
                    consider(face | VertexSet{v});

    std::vector<VertexSet> out;
    out.reserve(found.size());
    for (std::uint64_t bits : found)
        out.emplace_back(bits);
    std::sort(out.begin(), out.end(), lex_less);
    return out;
}

} // namespace rmac
