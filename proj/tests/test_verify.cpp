#include <stdexcept>

#include "doctest.h"
#include "springer/formats.hpp"
#include "springer/verify.hpp"

using namespace springer;

TEST_CASE("check_tableau_identities passes") {
    const VerificationReport r = check_tableau_identities(6);
    CHECK(r.pass);
    CHECK(r.counterexample.is_null());
    CHECK(r.check == "check_tableau_identities");
    CHECK(r.range == "all shapes with n <= 6");
    CHECK(r.ms >= 0.0);

    CHECK(check_tableau_identities(1).pass);  // vacuous
}

TEST_CASE("check_poincare_identities passes") {
    const VerificationReport r = check_poincare_identities(6);
    CHECK(r.pass);
    CHECK(r.counterexample.is_null());
}

TEST_CASE("orbit_oracle on the two-point frame") {
    const VerificationReport r = orbit_oracle(ToricFrame(4, {}, {1, 3}, {2}));
    CHECK(r.pass);
    CHECK(d_star(ToricFrame(4, {}, {1, 3}, {2})) == 2);
}

TEST_CASE("orbit_oracle on a trivial-component frame") {
    CHECK(orbit_oracle(ToricFrame(6, {1, 3, 5}, {4}, {2})).pass);
    CHECK(orbit_oracle(ToricFrame(3, {1, 2}, {}, {})).pass);  // J empty
    CHECK(orbit_oracle(ToricFrame(6, {}, {1, 2, 3, 4, 5}, {})).pass);  // d_star = n
    CHECK_THROWS_AS(orbit_oracle(ToricFrame(7, {}, {1, 2, 3, 4, 5, 6}, {})),
                    std::invalid_argument);
}

TEST_CASE("orbit_oracle_sweep and character sweep pass") {
    CHECK(orbit_oracle_sweep(4).pass);
    CHECK(character_decomposition_sweep(4).pass);
}

TEST_CASE("check_character_decomposition") {
    CHECK(check_character_decomposition(
              ToricFrame(12, {10}, {1, 2, 3, 5, 6, 7, 9, 11}, {4, 8}))
              .pass);
    CHECK(check_character_decomposition(ToricFrame(8, {}, {1, 2, 3, 4, 5, 6, 7}, {})).pass);
    CHECK(check_character_decomposition(ToricFrame(5, {1}, {}, {2, 3, 4})).pass);
}

TEST_CASE("check_invariant_monomials passes") {
    const VerificationReport r = check_invariant_monomials(4);
    CHECK(r.pass);
    CHECK(r.counterexample.is_null());
}

TEST_CASE("verify_all aggregates every suite") {
    const auto reports = verify_all(4, 4);
    REQUIRE(reports.size() == 5);
    for (const auto& r : reports) CHECK(r.pass);
    CHECK(reports[0].check == "check_tableau_identities");
    CHECK(reports[1].check == "check_poincare_identities");
    CHECK(reports[2].check == "orbit_oracle_sweep");
    CHECK(reports[3].check == "character_decomposition_sweep");
    CHECK(reports[4].check == "check_invariant_monomials");
}

TEST_CASE("hook_length_count") {
    CHECK(hook_length_count(Partition{2, 1}) == 2);
    CHECK(hook_length_count(Partition{2, 2}) == 2);
    CHECK(hook_length_count(Partition{3, 2}) == 5);
    CHECK(hook_length_count(Partition{2, 2, 1}) == 5);
    CHECK(hook_length_count(Partition{9}) == 1);
    CHECK(hook_length_count(Partition{1, 1, 1, 1}) == 1);
}

TEST_CASE("report JSON round trip") {
    VerificationReport r = check_tableau_identities(3);
    const auto j = report_to_json(r);
    const VerificationReport back = report_from_json(j);
    CHECK(back.check == r.check);
    CHECK(back.range == r.range);
    CHECK(back.pass == r.pass);
    CHECK(back.counterexample == r.counterexample);
    CHECK(back.ms == r.ms);
}
