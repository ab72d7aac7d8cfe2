#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "corpus.hpp"
#include "ogres/admissible.hpp"

using namespace ogres;

namespace {
std::set<std::string> ids(const std::vector<Violation>& v) {
    std::set<std::string> out;
    for (const auto& x : v) out.insert(x.id);
    return out;
}
}  // namespace

TEST_CASE("admissible examples") {
    CHECK(validate(parse_sequence("L2 L3 Q7_17 Q6_18", 24)).empty());
    CHECK(ids(validate(parse_sequence("L2 Q1_7", 9))) == std::set<std::string>{"C9"});
    CHECK(ids(validate(parse_sequence("Q2_4", 8))) == std::set<std::string>{"C7"});
    for (const auto& c : corpus::singular_cases()) CHECK(validate(parse_sequence(c.seq, c.n)).empty());
    for (const auto& s : corpus::fixed_sequences()) CHECK(validate(s).empty());
}

TEST_CASE("single broken inequality reports its own condition") {
    CHECK(ids(validate(parse_sequence("L3 Q0_4", 5))) == std::set<std::string>{"C1"});
    CHECK(ids(validate(parse_sequence("Q1_5", 5))) == std::set<std::string>{"C3"});
    CHECK(ids(validate(parse_sequence("Q1_4 Q1_6", 7))) == std::set<std::string>{"C6"});
    CHECK(ids(validate(parse_sequence("Q0_2", 5))) == std::set<std::string>{"C7"});
    CHECK(ids(validate(parse_sequence("L3 Q1_5 Q1_6", 7))) == std::set<std::string>{"C8"});
    CHECK(ids(validate(parse_sequence("L1 Q0_4", 5))) == std::set<std::string>{"C9"});
    // these two never fail alone on small inputs
    CHECK(ids(validate(parse_sequence("L1 L2 L3 Q0_5", 12))).count("C2") == 1);
    CHECK(ids(validate(parse_sequence("Q2_9 Q3_10", 16))).count("C4") == 1);
}

TEST_CASE("structural problems are reported, not thrown") {
    Sequence s;
    s.n = 4;
    s.steps = {Step::quadric(0, 5), Step::linear(1)};
    auto v = ids(validate(s));
    CHECK(v.count("COrder") == 1);
    CHECK(v.count("CAmbient") == 1);
}

TEST_CASE("validation is total") {
    // breaks C7 and C9 at once
    auto v = ids(validate(parse_sequence("L3 Q2_4", 8)));
    CHECK(v.count("C7") == 1);
    CHECK(v.count("C9") == 1);
}

TEST_CASE("special indices") {
    auto v = parse_sequence("L3 L8 L9 Q6_12 Q5_13 Q1_20", 21);
    auto sp = special_indices(v);
    CHECK(std::find(sp.begin(), sp.end(), 2) != sp.end());
    // only the even-rank outer quadric has two families of maximal spaces
    auto two = special_indices(parse_sequence("Q0_3 Q0_4", 5));
    CHECK(two == std::vector<int>{1});
    CHECK(special_indices(parse_sequence("L2 L3 Q7_17 Q6_18", 24)).empty());
    for (const auto& s : corpus::random_corpus())
        for (int i : special_indices(s)) {
            CHECK(i >= 1);
            CHECK(i <= s.quadric_count());
        }
}

TEST_CASE("markings") {
    auto plain = parse_sequence("L2 L3 Q7_17 Q6_18", 24);
    CHECK(validate_marking(plain, Marking{}).empty());

    auto two = parse_sequence("Q1_3 Q1_5", 8);
    REQUIRE(special_indices(two) == std::vector<int>{1, 2});
    // both special, different d+r: any parities are fine
    CHECK(validate_marking(two, Marking{{{1, Parity::Even}, {2, Parity::Odd}}, std::nullopt}).empty());

    auto same = parse_sequence("Q0_4 Q0_5", 10);
    REQUIRE(special_indices(same).empty());
    CHECK(ids(validate_marking(same, Marking{{{1, Parity::Even}}, std::nullopt})) == std::set<std::string>{"CMark"});

    auto eq = parse_sequence("Q1_3 Q0_4", 8);
    REQUIRE(special_indices(eq) == std::vector<int>{1, 2});
    CHECK(validate_marking(eq, Marking{{{1, Parity::Even}, {2, Parity::Even}}, std::nullopt}).empty());
    CHECK(validate_marking(eq, Marking{{{1, Parity::Even}, {2, Parity::Odd}}, std::nullopt}).size() == 1);

    auto ls = parse_sequence("L2 Q0_4", 5);
    REQUIRE(special_indices(ls) == std::vector<int>{1});
    // one linear step, so L2 carries the odd parity
    CHECK(validate_marking(ls, Marking{{{1, Parity::Odd}}, std::nullopt}).empty());
    CHECK(ids(validate_marking(ls, Marking{{{1, Parity::Even}}, std::nullopt})) == std::set<std::string>{"CMark"});

    auto og = parse_sequence("Q1_3 Q0_4", 4);
    const Marking even{{{1, Parity::Even}, {2, Parity::Even}}, Parity::Even};
    CHECK(validate_marking(og, even).empty());
    Marking odd = even;
    odd.component = Parity::Odd;
    CHECK(validate_marking(og, odd).size() == 2);
}
