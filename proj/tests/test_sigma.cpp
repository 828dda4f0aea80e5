#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "covercalc/matrices.hpp"
#include "covercalc/sigma.hpp"

using namespace covercalc;
using namespace covercalc::sigma;

namespace {

std::vector<long long> random_odd(std::mt19937& rng, std::size_t n, long long bound = 9) {
    std::vector<long long> c(n);
    for (auto& v : c) {
        long long x = static_cast<long long>(rng() % (2 * bound)) - bound;  // [-bound, bound)
        v = (x % 2 == 0) ? x + 1 : x;
    }
    return c;
}

}  // namespace

TEST_CASE("parameter validation") {
    CHECK_THROWS(SigmaParams(2, {1, 2, 1}));
    CHECK_THROWS(SigmaParams(2, {1, 1}));
    CHECK_THROWS(SigmaParams(0, {}));
    CHECK_NOTHROW(SigmaParams(3, {1, -1, 3, 5, -7}));
}

TEST_CASE("compile: single twist region") {
    tangle::TwistTangle t;
    t.strands = 2;
    t.regions.push_back({1, 2, tangle::Orientation::Horizontal, "r"});
    auto compiled = tangle::compile_tangle(t);
    CHECK(compiled.word.letters == std::vector<int>{1, 1});
    CHECK(compiled.region_of == std::vector<std::string>{"r", "r"});
}

TEST_CASE("compile rejects a wrong routing declaration") {
    tangle::TwistTangle t;
    t.strands = 2;
    t.regions.push_back({1, 2, tangle::Orientation::Horizontal, "r"});
    t.routing = {1, 0};  // two even crossings do not swap the ends
    CHECK_THROWS(tangle::compile_tangle(t));
}

TEST_CASE("connectivity rule") {
    // m = 2, c = (1,3,1): ends (1,2,3,4) -> (4',1',2',3')
    auto compiled = tangle::compile_tangle(build_sigma(SigmaParams(2, {1, 3, 1})));
    auto perm = braid::braid_permutation(compiled.word);
    CHECK(perm == std::vector<std::size_t>{3, 0, 1, 2});

    std::mt19937 rng(41);
    for (int trial = 0; trial < 30; ++trial) {
        std::size_t m = 1 + rng() % 6;
        SigmaParams p(m, random_odd(rng, 2 * m - 1));
        auto c = tangle::compile_tangle(build_sigma(p));
        auto perm2 = braid::braid_permutation(c.word);
        CHECK(perm2[0] == 2 * m - 1);
        for (std::size_t j = 1; j < 2 * m; ++j) CHECK(perm2[j] == j - 1);
        CHECK(braid::closure_components(c.word).count == 1);
        CHECK(braid::closure_components(braid::power(c.word, m)).count == m);
    }
}

TEST_CASE("region crossing counts equal the twist magnitudes") {
    std::mt19937 rng(43);
    SigmaParams p(3, random_odd(rng, 5));
    auto compiled = tangle::compile_tangle(build_sigma(p));
    std::map<std::string, std::size_t> counts;
    for (const auto& r : compiled.region_of) counts[r]++;
    for (std::size_t k = 1; k <= 5; ++k)
        CHECK(counts["c" + std::to_string(k)] ==
              static_cast<std::size_t>(std::llabs(p.c[k - 1])));
    CHECK(counts["1-c3"] == static_cast<std::size_t>(std::llabs(1 - p.c[2])));
}

TEST_CASE("closed form: degenerate and small cases") {
    CHECK(closed_form_first_row(SigmaParams(1, {3})) == std::vector<BigInt>{1});
    // m = 2: every box meets the single off-diagonal pair in both copies,
    // so a12 = c1 + c3 + (1 - c2)
    CHECK(closed_form_first_row(SigmaParams(2, {1, 3, 1})) == std::vector<BigInt>{1, 0});
    CHECK(closed_form_first_row(SigmaParams(2, {1, 1, 1})) == std::vector<BigInt>{-1, 2});
    // m = 3 matches the four-term formula plus the auxiliary box once
    // a12 = (c1 + c2 + c4 + c5 + (1 - c3)) / 2
    CHECK(closed_form_first_row(SigmaParams(3, {1, 1, 3, 1, 1})) ==
          std::vector<BigInt>{-1, 1, 1});
}

TEST_CASE("brute force equals the closed form") {
    std::mt19937 rng(47);
    for (int trial = 0; trial < 60; ++trial) {
        std::size_t m = 1 + rng() % 6;
        SigmaParams p(m, random_odd(rng, 2 * m - 1));
        auto brute = brute_force_linking(p);
        REQUIRE(brute.components.count == m);
        auto row = closed_form_first_row(p);
        CHECK(brute.matrix.first_row() == row);
        // full circulant structure, not only the first row
        CHECK(circulant_block_check(brute.matrix, m, 1));
        for (std::size_t i = 0; i < m; ++i) {
            BigInt sum = 0;
            for (std::size_t j = 0; j < m; ++j) sum += brute.matrix.at(i, j);
            CHECK(sum == 1);  // base framing +1 in every row
        }
    }
}

TEST_CASE("identify_L1") {
    auto u = identify_L1(SigmaParams(1, {1}));
    CHECK(u.valid);
    CHECK(u.torus_parameter == 1);

    auto t7 = identify_L1(SigmaParams(3, {1, 1, 7, 1, 1}));
    CHECK(t7.valid);
    CHECK(t7.torus_parameter == 7);
    CHECK(t7.genus == 3);
    CHECK(t7.self_region == "c3");
    CHECK(t7.self_instances == 1);

    auto t5 = identify_L1(SigmaParams(5, {1, 1, 1, 1, 5, 1, 1, 1, 1}));
    CHECK(t5.valid);
    CHECK(t5.torus_parameter == 5);
    auto info = floer::nu_sharp(t5.knot_class());
    CHECK(info.nu == 3);  // nu = 2g - 1 = c_m - 2

    auto neg = identify_L1(SigmaParams(2, {1, -5, 1}));
    CHECK(neg.valid);
    CHECK(neg.torus_parameter == -5);
    auto neginfo = floer::nu_sharp(neg.knot_class());
    CHECK(neginfo.nu == -3);

    std::mt19937 rng(53);
    for (int trial = 0; trial < 30; ++trial) {
        std::size_t m = 2 + rng() % 5;
        SigmaParams p(m, random_odd(rng, 2 * m - 1));
        auto cert = identify_L1(p);
        CHECK(cert.valid);
        CHECK(cert.torus_parameter == p.c[m - 1]);
        CHECK(cert.genus == (std::llabs(p.c[m - 1]) - 1) / 2);
    }
}

TEST_CASE("check_adapted on the 1x1 example") {
    IntMatrix target = IntMatrix::identity(1);
    auto rep = check_adapted(SigmaParams(1, {3}), target);
    CHECK(rep.unknot_check.pass);
    CHECK(rep.linking_match);
    CHECK(rep.nu_condition.status == floer::AdaptedStatus::Satisfied);
    CHECK(rep.nu_condition.case_number == 2);  // L1 is T(2,1): nu = 0, V, a11 = 1 <= 1
    CHECK(rep.verdict);
}

TEST_CASE("check_adapted rejects a non-SICUP target") {
    IntMatrix target{{2}};
    CHECK_THROWS_AS(check_adapted(SigmaParams(1, {3}), target), std::invalid_argument);
}

TEST_CASE("check_adapted verdicts at m = 2") {
    // sigma(2; 1,3,1) has linking matrix I_2 and L1 = T(2,3)
    auto hit = check_adapted(SigmaParams(2, {1, 3, 1}), IntMatrix::identity(2));
    CHECK(hit.unknot_check.pass);
    CHECK(hit.linking_match);
    CHECK(hit.nu_condition.status == floer::AdaptedStatus::Satisfied);
    CHECK(hit.nu_condition.case_number == 1);  // a11 = 1 <= nu = 1
    CHECK(hit.verdict);

    // sigma(2; 1,1,1) has linking row (-1, 2): mismatch against I_2
    auto miss = check_adapted(SigmaParams(2, {1, 1, 1}), IntMatrix::identity(2));
    CHECK_FALSE(miss.linking_match);
    CHECK_FALSE(miss.verdict);
}
