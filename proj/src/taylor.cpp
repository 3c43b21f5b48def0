// Taylor complex of a square-free monomial ideal, tensored down to the ground field.
//
// Basis elements are subsets S of the generators, in homological degree |S| and
// multidegree lcm(S). The differential drops one generator t with sign
// (-1)^(position of t in S) times the monomial lcm(S)/lcm(S \ t). After
// tensoring with k every positive-degree monomial vanishes, so only drops that
// keep the lcm survive, and the complex splits into one summand per lcm.

#include <bit>
#include <map>
#include <string>

#include "rmac/errors.hpp"
#include "rmac/hochster.hpp"
#include "rmac/linalg.hpp"

namespace rmac {

namespace {

/// Subsets of the generator index set sharing one lcm, grouped by size.
struct Summand {
    std::vector<std::vector<std::uint32_t>> by_size;
};

IntegerMatrix differential(const std::vector<std::uint32_t>& sources,
                           const std::vector<std::uint32_t>& targets,
                           const std::vector<std::uint64_t>& lcm_of)
{
    IntegerMatrix m(targets.size(), sources.size());
    if (m.empty())
        return m;
    std::map<std::uint32_t, std::size_t> row_of;
    for (std::size_t r = 0; r < targets.size(); ++r)
        row_of.emplace(targets[r], r);
    for (std::size_t c = 0; c < sources.size(); ++c) {
        const std::uint32_t s = sources[c];
        std::int64_t sign = 1;
        for (std::uint32_t rest = s; rest != 0; rest &= rest - 1) {
            const std::uint32_t dropped = rest & (~rest + 1);
            const std::uint32_t face = s & ~dropped;
            if (lcm_of[face] == lcm_of[s])
                m(row_of.at(face), c) = sign;
            sign = -sign;
        }
    }
    return m;
}

} // namespace

BigradedTable tor_via_taylor(const SimplicialComplex& complex, const FieldSpec& field,
                             bool override_guard)
{
    const std::vector<VertexSet> generators = minimal_non_faces(complex);
    const int r = static_cast<int>(generators.size());
    if (r > kTaylorGeneratorGuard && !override_guard)
        throw GuardError("Taylor complex on " + std::to_string(r) + " generators exceeds the limit of " +
                         std::to_string(kTaylorGeneratorGuard));
    if (r > 31)
        throw GuardError("Taylor complex supports at most 31 generators, got " + std::to_string(r));

    const std::uint32_t total = std::uint32_t{1} << r;
    std::vector<std::uint64_t> lcm_of(total, 0);
    for (std::uint32_t s = 1; s < total; ++s) {
        const int lowest = std::countr_zero(s);
        lcm_of[s] = lcm_of[s & (s - 1)] | generators[static_cast<std::size_t>(lowest)].bits();
    }

    std::map<std::uint64_t, Summand> summands;
    for (std::uint32_t s = 0; s < total; ++s) {
        Summand& summand = summands[lcm_of[s]];
        const auto size = static_cast<std::size_t>(std::popcount(s));
        if (summand.by_size.size() <= size)
            summand.by_size.resize(size + 1);
        summand.by_size[size].push_back(s);
    }

    BigradedTable table(complex.n(), field);
    for (const auto& [lcm, summand] : summands) {
        const int j = std::popcount(lcm);
        const std::size_t top = summand.by_size.size();
        // ranks[i] = rank of the differential out of degree i (into degree i-1).
        std::vector<std::size_t> ranks(top + 1, 0);
        for (std::size_t i = 1; i < top; ++i)
            ranks[i] = rank(differential(summand.by_size[i], summand.by_size[i - 1], lcm_of), field);
        for (std::size_t i = 0; i < top; ++i) {
            const std::size_t homology = summand.by_size[i].size() - ranks[i] - ranks[i + 1];
            table.add(static_cast<int>(i), j, homology);
        }
    }
    return table;
}

} // namespace rmac
