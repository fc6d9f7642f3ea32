#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "dyckcat/subchain.hpp"

using namespace dyckcat;

TEST_CASE("validate_subchain examples") {
    AdmissibleSubchain two_sinks{4, {1, 3}, {}};
    CHECK_FALSE(two_sinks.valid());
    AdmissibleSubchain fixed{4, {1}, {3}};
    CHECK(fixed.valid());
    AdmissibleSubchain paper{5, {2}, {1, 4}};
    CHECK(paper.valid());
    AdmissibleSubchain adjacent_sinks{5, {2, 3}, {1}};
    CHECK_FALSE(adjacent_sinks.valid());

    CHECK_FALSE(AdmissibleSubchain{5, {2}, {2, 4}}.valid());  // overlap
    CHECK_FALSE(AdmissibleSubchain{5, {2}, {4}}.valid());     // min != 1
    CHECK_FALSE(AdmissibleSubchain{5, {1}, {3}}.valid());     // max != n-1
    CHECK(AdmissibleSubchain{2, {1}, {}}.valid());
    CHECK(AdmissibleSubchain{2, {}, {1}}.valid());
}

TEST_CASE("chain spec round trip") {
    AdmissibleSubchain c = parse_chain_spec(5, "j1,i2,j4");
    CHECK(c.sinks == std::vector<int>{2});
    CHECK(c.sources == std::vector<int>{1, 4});
    CHECK(c.spec_string() == "j1,i2,j4");
    CHECK(parse_chain_spec(5, c.spec_string()) == c);

    CHECK_THROWS_AS(parse_chain_spec(5, "k1,i2"), invalid_input_error);
    CHECK_THROWS_AS(parse_chain_spec(5, "j1,,i2"), invalid_input_error);
    CHECK_THROWS_AS(parse_chain_spec(5, "j1x,i2"), invalid_input_error);
    CHECK_THROWS_AS(parse_chain_spec(5, "j1,i2"), invalid_input_error);  // max != 4
}

TEST_CASE("enumerate_subchains") {
    CHECK(enumerate_subchains(2).size() == 1);
    for (int n = 3; n <= 9; ++n) {
        auto chains = enumerate_subchains(n);
        CHECK(chains.size() == (1u << (n - 2)));
        std::set<std::string> specs;
        for (const AdmissibleSubchain& c : chains) {
            CHECK(c.valid());
            CHECK(parse_chain_spec(n, c.spec_string()) == c);
            specs.insert(c.spec_string());
        }
        CHECK(specs.size() == chains.size());
    }
}
