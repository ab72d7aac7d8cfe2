#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "ogres/typea.hpp"

using namespace ogres;
using namespace ogres::typea;

TEST_CASE("partition of an index sequence") {
    auto p = schubert_partition(make_indices({2, 6, 7, 11, 12, 13, 15}, 17));
    CHECK(p.groups == std::vector<Group>{{2, 1}, {7, 2}, {13, 3}, {15, 1}});
    CHECK(schubert_partition(make_indices({1, 2, 3, 4}, 9)).groups == std::vector<Group>{{4, 4}});
    CHECK(schubert_partition(make_indices({3, 5, 9}, 9)).groups == std::vector<Group>{{3, 1}, {5, 1}, {9, 1}});
    CHECK_THROWS_AS(make_indices({3, 3}, 9), OrderError);
    CHECK_THROWS_AS(make_indices({3, 10}, 9), AmbientError);
}

TEST_CASE("Schubert dimension") {
    CHECK(schubert_dim(schubert_partition(make_indices({2, 6, 7, 11, 12, 13, 15}, 17))) == 38);
    CHECK(schubert_dim(Partition{{{4, 4}}}) == 0);
    CHECK(schubert_dim(Partition{{{3, 1}, {5, 1}, {9, 1}}}) == 11);
}

TEST_CASE("singular locus of the worked example") {
    auto p = schubert_partition(make_indices({2, 6, 7, 11, 12, 13, 15}, 17));
    auto comps = schubert_singular_locus(p);
    REQUIRE(comps.size() == 3);
    CHECK(expand(comps[0].partition) == std::vector<int>{1, 2, 7, 11, 12, 13, 15});
    CHECK(expand(comps[1].partition) == std::vector<int>{2, 5, 6, 7, 12, 13, 15});
    CHECK(expand(comps[2].partition) == std::vector<int>{2, 6, 7, 10, 11, 12, 13});
    CHECK(comps[2].preimage_codim == 2);
    for (const auto& c : comps) CHECK(c.preimage_codim >= 2);
    CHECK(schubert_singular_locus(Partition{{{4, 4}}}).empty());
}

TEST_CASE("hook loci properties") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 300; ++trial) {
        const int n = std::uniform_int_distribution<int>(3, 30)(rng);
        const int k = std::uniform_int_distribution<int>(1, n - 1)(rng);
        std::vector<int> all(n);
        for (int i = 0; i < n; ++i) all[i] = i + 1;
        std::shuffle(all.begin(), all.end(), rng);
        std::vector<int> idx(all.begin(), all.begin() + k);
        std::sort(idx.begin(), idx.end());
        auto p = schubert_partition(make_indices(idx, n));
        auto comps = schubert_singular_locus(p);
        CHECK(comps.size() == p.groups.size() - 1);
        for (const auto& c : comps) {
            CHECK(c.partition.k() == k);
            CHECK(schubert_dim(c.partition) + c.codim == schubert_dim(p));
            CHECK(c.preimage_codim >= 2);
            CHECK(c.codim == c.fiber_dim + c.preimage_codim);
        }
    }
}
