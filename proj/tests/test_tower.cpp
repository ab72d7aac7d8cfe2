#include <catch2/catch_amalgamated.hpp>

#include "corpus.hpp"
#include "ogres/degen.hpp"
#include "ogres/dims.hpp"
#include "ogres/singloc.hpp"
#include "ogres/tower.hpp"

using namespace ogres;

TEST_CASE("bundle dimensions") {
    CHECK(grassmannian_dim(1, 5) == 4);
    CHECK(grassmannian_dim(2, 4) == 4);
    CHECK(og_dim(1, 7) == 5);
    CHECK(og_dim(2, 4) == 1);
    CHECK(og_dim(0, 9) == 0);
}

TEST_CASE("tower dimensions of the worked examples") {
    CHECK(tower_dim(build_tower(parse_sequence("Q4_11", 15))) == 9);
    CHECK(tower_dim(build_tower(parse_sequence("L7 Q4_11", 15))) == 13);
    CHECK(tower_dim(build_tower(parse_sequence("L5 Q7_10 Q2_20", 22))) == 25);
    CHECK(tower_dim(build_tower(parse_sequence("L6 L7 L8", 16))) == 15);
    CHECK(tower_dim(build_tower(parse_sequence("L2 L3 Q7_17 Q6_18", 24))) == 27);
}

TEST_CASE("tower of a single quadric") {
    auto t = build_tower(parse_sequence("Q4_11", 15));
    REQUIRE(t.rows.size() == 1);
    const auto& row = t.rows.front();
    REQUIRE(row.factors.size() == 2);
    CHECK(row.factors[0].kind == FactorKind::G);
    CHECK(row.factors[1].kind == FactorKind::OG);
    CHECK(row.factors[1].sub == 1);
    CHECK(row.factors[1].ambient == 7);
    CHECK_FALSE(t.ascii.empty());
}

TEST_CASE("tower rows read bottom first") {
    auto t = build_tower(parse_sequence("L7 Q4_11", 15));
    REQUIRE(t.rows.size() == 2);
    CHECK(t.rows.front().label == "Q4_11");
    CHECK(t.rows.back().label == "L7");
}

TEST_CASE("two component orthogonal factors are flagged") {
    auto t = build_tower(parse_sequence("Q1_3 Q0_4", 8));
    bool flagged = false;
    for (const auto& row : t.rows)
        for (const auto& f : row.factors) flagged = flagged || f.two_component;
    CHECK(flagged);
}

TEST_CASE("coordinates respect the diagram order") {
    auto all = corpus::fixed_sequences();
    auto rnd = corpus::random_corpus();
    all.insert(all.end(), rnd.begin(), rnd.end());
    for (const auto& s : all) {
        INFO(format_sequence(s) << " n=" << s.n);
        auto t = build_tower(s);
        CHECK(tower_dim(t) == dim_restriction(s).total);
        for (const auto& row : t.rows)
            for (const auto& co : row.coords) {
                CHECK(co.dim >= 0);
                CHECK(co.dim <= s.n);
                CHECK(co.above_dim <= co.dim);
                CHECK(co.dim <= co.right_dim);
            }
    }
}

TEST_CASE("generic fiber dimensions from the case tables") {
    auto a = parse_sequence("L3 Q7_10 Q5_20", 25);
    CHECK(generic_fiber_dim(a, Origin::R, 1, RCase::IA) == 1);
    auto b = parse_sequence("L6 L7 Q2_15", 17);
    CHECK(generic_fiber_dim(b, Origin::R, 1, RCase::IB) == 3);
    auto c = parse_sequence("L2 L4 Q2_7", 9);
    CHECK(generic_fiber_dim(c, Origin::R, 1, RCase::IC) == 2);
    auto d = parse_sequence("L2 L3 Q3_6", 9);
    CHECK(generic_fiber_dim(d, Origin::R, 1, RCase::ID) == 3);
    CHECK(generic_fiber_dim(c, Origin::Ns, 0, RCase::None) == 1);
    CHECK(generic_fiber_dim(parse_sequence("L2 L4 Q0_9", 9), Origin::N, 1, RCase::None) == 1);
    CHECK(generic_fiber_dim(parse_sequence("Q2_7 Q0_9", 9), Origin::D, 1, RCase::None) == 1);

    CHECK_THROWS_AS(generic_fiber_dim(a, Origin::R, 3, RCase::IA), OriginMismatch);
    CHECK_THROWS_AS(generic_fiber_dim(a, Origin::R, 1, RCase::None), OriginMismatch);
    CHECK_THROWS_AS(generic_fiber_dim(parse_sequence("Q2_7 Q0_9", 9), Origin::Ns, 0, RCase::None), OriginMismatch);
}

TEST_CASE("fiber plus preimage codimension equals codimension") {
    auto all = corpus::fixed_sequences();
    auto rnd = corpus::random_corpus();
    all.insert(all.end(), rnd.begin(), rnd.end());
    for (const auto& s : all)
        for (const auto& l : exceptional_image(s)) {
            INFO(format_sequence(s) << " " << origin_name(l));
            CHECK(generic_fiber_dim(s, l) + l.preimage_codim == l.codim);
            CHECK(l.fiber_dim == generic_fiber_dim(s, l));
        }
}
