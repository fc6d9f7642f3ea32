#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "dyckcat/bulk.hpp"
#include "dyckcat/snake.hpp"

using namespace dyckcat;

TEST_CASE("parallel hom tables match the serial reference") {
    for (int n = 4; n <= 6; ++n)
        for (const AdmissibleSubchain& c : enumerate_subchains(n)) {
            CHECK(bulk::hom_table(c) == bulk::hom_table_serial(c));
            CHECK(bulk::hom_dim_table(c) == bulk::hom_dim_table_serial(c));
        }
    // Criterion entries agree with brute-force dims.
    AdmissibleSubchain c = enumerate_subchains(6)[3];
    auto crit = bulk::hom_table(c);
    auto dims = bulk::hom_dim_table(c);
    REQUIRE(crit.size() == dims.size());
    for (size_t i = 0; i < crit.size(); ++i) CHECK(static_cast<int>(crit[i]) == dims[i]);
}

TEST_CASE("parallel verify_range matches serial and passes") {
    auto par = bulk::verify_range(3, 5);
    auto ser = bulk::verify_range_serial(3, 5);
    REQUIRE(par.size() == ser.size());
    for (size_t i = 0; i < par.size(); ++i) {
        CHECK(par[i].equal);
        CHECK(ser[i].equal);
        CHECK(par[i].chain == ser[i].chain);
        CHECK(par[i].dyck_count == ser[i].dyck_count);
        CHECK(par[i].mutation_count == ser[i].mutation_count);
    }
}

TEST_CASE("parallel matching counts match serial and the recurrence") {
    for (int n : {6, 8}) {
        auto par = bulk::matching_counts(n);
        auto ser = bulk::matching_counts_serial(n);
        CHECK(par == ser);
        auto chains = enumerate_subchains(n);
        REQUIRE(par.size() == chains.size());
        for (size_t i = 0; i < chains.size(); ++i)
            CHECK(par[i] == count_matchings_transfer(snake_from_subchain(chains[i])));
    }
}
