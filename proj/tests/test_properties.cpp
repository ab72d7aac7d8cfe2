#include <catch2/catch_amalgamated.hpp>

#include "corpus.hpp"
#include "ogres/dims.hpp"
#include "ogres/singloc.hpp"
#include "ogres/tower.hpp"

using namespace ogres;

// Random-corpus checks that cut across modules.

TEST_CASE("generator output is admissible and reproducible") {
    auto a = corpus::random_corpus(60, 5u);
    auto b = corpus::random_corpus(60, 5u);
    CHECK(a == b);
    for (const auto& s : a) {
        CHECK(validate(s).empty());
        CHECK(s.k() <= 8);
        CHECK(s.n <= 40);
    }
}

TEST_CASE("singular locus runs on every admissible sequence") {
    for (const auto& s : corpus::random_corpus()) {
        INFO(format_sequence(s) << " n=" << s.n);
        SingularLocusReport rep;
        REQUIRE_NOTHROW(rep = singular_locus(s));
        CHECK(rep.input == s);
        // output is deterministic
        auto again = singular_locus(s);
        REQUIRE(again.components.size() == rep.components.size());
        for (size_t i = 0; i < rep.components.size(); ++i)
            CHECK(again.components[i].members == rep.components[i].members);
    }
}

TEST_CASE("loci have smaller dimension and are nontrivial") {
    for (const auto& s : corpus::random_corpus()) {
        const int d = dim_restriction(s).total;
        for (const auto& l : exceptional_image(s)) {
            INFO(format_sequence(s) << " " << origin_name(l));
            CHECK(l.fiber_dim >= 0);
            for (const auto& m : l.members) {
                CHECK(dim_restriction(m).total < d);
                CHECK_FALSE(m == s);
            }
        }
    }
}

TEST_CASE("partition and step forms agree") {
    for (const auto& s : corpus::random_corpus()) {
        CHECK(from_partitions(to_partitions(s), s.n) == s);
        CHECK(dim_by_partitions(s) == dim_restriction(s).total);
        CHECK(tower_dim(build_tower(s)) == dim_restriction(s).total);
    }
}
