#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "rmac/errors.hpp"
#include "rmac/hochster.hpp"
#include "rmac/sampler.hpp"

using namespace rmac;

namespace {

const FieldSpec Q = FieldSpec::rationals();
const FieldSpec F2 = FieldSpec::prime(2);

/// Hand-rolled sum over every vertex subset, kept separate from the library loop.
BigradedTable brute_force_table(const SimplicialComplex& k, const FieldSpec& field)
{
    BigradedTable table(k.n(), field);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << k.n()); ++mask) {
        const VertexSet subset(mask);
        const int j = subset.size();
        const auto restricted = full_subcomplex(k, subset);
        for (int degree = -1; degree <= restricted.dim(); ++degree)
            table.add(j - degree - 1, j, reduced_betti(restricted, degree, field));
    }
    return table;
}

} // namespace

TEST_CASE("four-cycle table")
{
    const auto cycle = oracle::four_cycle();
    const auto table = bigraded_betti(cycle, Q);
    CHECK(table == brute_force_table(cycle, Q));
    CHECK(table.at(0, 0) == 1);
    CHECK(table.at(1, 2) == 2);
    CHECK(table.at(2, 4) == 1);
    CHECK(table.entries_by_j().size() == 3);
}

TEST_CASE("full simplex has only the unit entry")
{
    for (int n = 1; n <= 6; ++n) {
        const auto table = bigraded_betti(build_skeleton(n, n - 1), F2);
        CHECK(table.entries_by_j().size() == 1);
        CHECK(table.at(0, 0) == 1);
    }
}

TEST_CASE("moment-angle Betti numbers")
{
    CHECK(zk_betti_numbers(oracle::four_cycle(), Q) == std::vector<std::uint64_t>{1, 0, 0, 2, 0, 0, 1});
    CHECK(zk_betti_numbers(build_complex(2, {{1}, {2}}), Q) == std::vector<std::uint64_t>{1, 0, 0, 1});
    CHECK(zk_betti_numbers(build_complex(2, {{1, 2}}), Q) == std::vector<std::uint64_t>{1});
}

TEST_CASE("moment-angle Betti numbers sum to the table total")
{
    std::mt19937_64 gen(3);
    for (int trial = 0; trial < 60; ++trial) {
        const auto k = oracle::random_complex(gen, 1 + trial % 7, 4, 4);
        const auto table = bigraded_betti(k, F2);
        std::uint64_t sum = 0;
        for (auto b : zk_betti_numbers(table))
            sum += b;
        CHECK(sum == table.total());
        CHECK(zk_betti_numbers(table).size() <= static_cast<std::size_t>(k.n() + k.dim() + 2));
    }
}

TEST_CASE("table invariants on random complexes")
{
    std::mt19937_64 gen(8);
    for (int trial = 0; trial < 80; ++trial) {
        const auto k = oracle::random_complex(gen, 1 + trial % 7, 5, 4);
        const auto table = bigraded_betti(k, Q);
        CHECK(table == brute_force_table(k, Q));
        CHECK(table.at(0, 0) == 1);
        for (const auto& [key, beta] : table.entries_by_j()) {
            const auto [j, i] = key;
            CHECK(i <= j);
            CHECK(j <= k.n());
            CHECK(beta > 0);
        }
    }
}

TEST_CASE("filtered tables visit only the requested sizes")
{
    const auto cycle = oracle::four_cycle();
    HochsterOptions options;
    options.filter = std::set<Bidegree>{{1, 2}, {2, 4}, {3, 3}};
    const auto table = bigraded_betti(cycle, Q, options);
    CHECK(table.at(1, 2) == 2);
    CHECK(table.at(2, 4) == 1);
    CHECK(table.at(0, 0) == 0);
    CHECK(table.entries_by_j().size() == 2);
}

TEST_CASE("size guard")
{
    const auto big = build_skeleton(25, 0);
    CHECK_THROWS_AS(bigraded_betti(big, F2), GuardError);
    HochsterOptions filtered;
    filtered.filter = std::set<Bidegree>{{2, 3}};
    const auto table = bigraded_betti(big, F2, filtered);
    // Every 3-subset of isolated points has reduced H_0 of rank 2.
    CHECK(table.at(2, 3) == 2 * 2300);
}

TEST_CASE("worker count does not change tables")
{
    const auto k = sample_lm({9, 2, 0.4, 77});
    HochsterOptions one, many;
    one.workers = 1;
    many.workers = 4;
    CHECK(bigraded_betti(k, F2, one) == bigraded_betti(k, F2, many));
}

TEST_CASE("minimal non-faces")
{
    CHECK(minimal_non_faces(oracle::four_cycle()) == std::vector<VertexSet>{VertexSet{1, 3}, VertexSet{2, 4}});
    CHECK(minimal_non_faces(build_skeleton(4, 3)).empty());
    CHECK(minimal_non_faces(build_complex(3, {{1, 2}, {2, 3}, {1, 3}})) == std::vector<VertexSet>{VertexSet{1, 2, 3}});
    // A label that is not a vertex is itself a minimal non-face.
    CHECK(minimal_non_faces(build_complex(3, {{1, 2}})) == std::vector<VertexSet>{VertexSet{3}});
    CHECK(minimal_non_faces(SimplicialComplex(2)) == std::vector<VertexSet>{VertexSet{1}, VertexSet{2}});
}

TEST_CASE("Taylor complex examples")
{
    const auto cycle = tor_via_taylor(oracle::four_cycle(), Q);
    CHECK(cycle.at(0, 0) == 1);
    CHECK(cycle.at(1, 2) == 2);
    CHECK(cycle.at(2, 4) == 1);
    CHECK(cycle.entries_by_j().size() == 3);

    const auto points = tor_via_taylor(build_complex(2, {{1}, {2}}), F2);
    CHECK(points.at(1, 2) == 1);
    CHECK(points.entries_by_j().size() == 2);

    const auto simplex = tor_via_taylor(build_skeleton(5, 4), F2);
    CHECK(simplex.entries_by_j().size() == 1);
    CHECK(simplex.at(0, 0) == 1);
}

TEST_CASE("Taylor guard")
{
    // Seven isolated points: all 21 edges are minimal non-faces.
    const auto points = build_skeleton(7, 0);
    CHECK_THROWS_AS(tor_via_taylor(points, F2), GuardError);
}

TEST_CASE("Taylor agrees with Hochster on random complexes")
{
    std::mt19937_64 gen(41);
    int compared = 0;
    for (int trial = 0; trial < 200 && compared < 60; ++trial) {
        const auto k = oracle::random_complex(gen, 2 + trial % 5, 5, 4);
        if (minimal_non_faces(k).size() > 10)
            continue;
        ++compared;
        for (const auto& field : {Q, F2})
            CHECK(tor_via_taylor(k, field) == bigraded_betti(k, field));
    }
    CHECK(compared >= 40);
}

TEST_CASE("projective plane tables depend on the field")
{
    const auto rp2 = oracle::projective_plane();
    const auto over_f2 = bigraded_betti(rp2, F2);
    const auto over_q = bigraded_betti(rp2, Q);
    // J = [6]: H~_1 contributes at i = 6 - 1 - 1 = 4 and H~_2 at i = 3 over F_2 only.
    CHECK(over_f2.at(4, 6) == over_q.at(4, 6) + 1);
    CHECK(over_f2.at(3, 6) == over_q.at(3, 6) + 1);
    CHECK(tor_via_taylor(rp2, F2) == over_f2);
    CHECK(tor_via_taylor(rp2, Q) == over_q);
}

TEST_CASE("graph tables are field independent")
{
    std::mt19937_64 gen(12);
    for (int trial = 0; trial < 30; ++trial) {
        const auto k = oracle::random_complex(gen, 7, 9, 2);
        CHECK(bigraded_betti(k, Q).entries_by_j() == bigraded_betti(k, FieldSpec::prime(5)).entries_by_j());
    }
}
