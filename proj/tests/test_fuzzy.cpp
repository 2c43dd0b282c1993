/*   Copyright 2026 The credal authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

       http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
 */

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>

#include "credal/fuzzy.hpp"
#include "helpers.hpp"

using namespace credal;
using namespace credal::testing;

TEST_CASE("make_fuzzy_set") {
    auto u = abc();
    auto a = FuzzySet::make(u, {{"a", .6}, {"b", 1}, {"c", .8}});
    CHECK(a.grades() == std::vector<double>{.6, 1, .8});
    CHECK(FuzzySet::make(u, {}).grades() == std::vector<double>{0, 0, 0});
    CHECK(FuzzySet::make(u, {{"b", 1}}).grades() == std::vector<double>{0, 1, 0});
    CHECK_THROWS_AS(FuzzySet::make(u, {{"d", .5}}), std::invalid_argument);
    CHECK_THROWS_AS(FuzzySet::make(u, {{"a", 1.2}}), std::invalid_argument);
    CHECK_THROWS_AS(FuzzySet::make(u, {{"a", -.1}}), std::invalid_argument);
}

TEST_CASE("universe invariants") {
    CHECK_THROWS_AS(Universe("E", {}), std::invalid_argument);
    CHECK_THROWS_AS(Universe("D", {"a", "a"}), std::invalid_argument);
    Universe u("X", {"a", "b"});
    u.set_proximity("a", "b", .5);
    CHECK(u.proximity(0, 1) == .5);
    CHECK(u.proximity(1, 0) == .5);
    CHECK(u.proximity(0, 0) == 1.0);
    CHECK_THROWS_AS(u.set_proximity("a", "a", .5), std::invalid_argument);
    CHECK_THROWS_AS(u.set_proximity("a", "b", 1.5), std::invalid_argument);
}

TEST_CASE("complement") {
    auto u = abc();
    auto a = fs(u, {.6, 1, .8});
    CHECK(pointwise_equal(complement(a), fs(u, {.4, 0, .2})));
    CHECK(complement(FuzzySet::zeros(u)).grades() == std::vector<double>{1, 1, 1});

    std::mt19937 rng(7);
    for (int t = 0; t < 50; ++t) {
        auto r = random_set(u, rng);
        CHECK(pointwise_equal(complement(complement(r)), r));
    }
}

TEST_CASE("conjoin") {
    auto u = abc();
    auto a = fs(u, {.6, 1, .8});
    std::array single{a};
    CHECK(pointwise_equal(conjoin(single), a));
    std::array pair{a, fs(u, {1, .5, 0})};
    CHECK(conjoin(pair).grades() == std::vector<double>{.6, .5, 0});
    std::array with_ones{a, FuzzySet::ones(u)};
    CHECK(pointwise_equal(conjoin(with_ones), a));
    CHECK_THROWS_AS(conjoin({}), std::invalid_argument);
    std::array mixed{a, fs(abc(), {1, 1, 1})};
    CHECK_THROWS_AS(conjoin(mixed), std::invalid_argument);
}

TEST_CASE("conorm_apply examples") {
    CHECK(conorm_apply(Conorm::Max, .3, .8) == .8);
    CHECK(close(conorm_apply(Conorm::ProbSum, .3, .8), .86));
    CHECK(conorm_apply(Conorm::Bounded, .5, .7) == 1.0);
    CHECK_THROWS_AS(conorm_apply(Conorm::Max, -.1, .5), std::invalid_argument);
    CHECK_THROWS_AS(conorm_apply(Conorm::Max, .5, 1.1), std::invalid_argument);
}

TEST_CASE("conorm axioms on a .05 grid") {
    for (Conorm s : {Conorm::Max, Conorm::ProbSum, Conorm::Bounded}) {
        for (int i = 0; i <= 20; ++i) {
            double a = i / 20.0;
            CHECK(conorm_apply(s, 0, a) == doctest::Approx(a).epsilon(kTol));
            CHECK(conorm_apply(s, 1, a) == 1.0);
            for (int j = 0; j <= 20; ++j) {
                double b = j / 20.0;
                CHECK(close(conorm_apply(s, a, b), conorm_apply(s, b, a)));
                if (j > 0) {
                    // monotone in the second argument
                    CHECK(conorm_apply(s, a, b) >= conorm_apply(s, a, (j - 1) / 20.0) - kTol);
                }
                for (int k = 0; k <= 20; ++k) {
                    double c = k / 20.0;
                    CHECK(close(conorm_apply(s, a, conorm_apply(s, b, c)),
                                conorm_apply(s, conorm_apply(s, a, b), c)));
                }
            }
        }
    }
}

TEST_CASE("poss") {
    auto u = abc();
    auto a = fs(u, {.6, 1, .8});
    CHECK(poss(a, a) == 1.0);
    CHECK(poss(fs(u, {1, 0, 0}), fs(u, {0, 0, 1})) == 0.0);
    CHECK(poss(a, fs(u, {1, .5, 0})) == .6);
    CHECK_THROWS_AS(poss(a, fs(abc(), {1, 1, 1})), std::invalid_argument);
}

TEST_CASE("cert") {
    auto u = abc();
    auto a = fs(u, {.6, 1, .8});
    CHECK(close(cert(a, FuzzySet::ones(u)), .6));  // = min_x A(x)
    CHECK(cert(fs(u, {1, 1, 0}), fs(u, {.3, 1, 0})) == 1.0);
    CHECK(close(cert(fs(u, {1, 0, 0}), fs(u, {1, .5, 0})), .5));
}

TEST_CASE("height and normality") {
    auto u = abc();
    CHECK(height(fs(u, {.6, 1, .8})) == 1.0);
    CHECK(is_normal(fs(u, {.6, 1, .8})));
    CHECK(height(fs(u, {.6, .9, .8})) == .9);
    CHECK(!is_normal(fs(u, {.6, .9, .8})));
    CHECK(height(FuzzySet::zeros(u)) == 0.0);
}

TEST_CASE("entails") {
    auto u = abc();
    auto d = fs(u, {.8, 1, .8});
    CHECK(entails(d, FuzzySet::ones(u)));
    CHECK(entails(d, d));
    CHECK(!entails(d, fs(u, {.7, 1, .8})));
}

TEST_CASE("possibility identities on random sets") {
    auto u = universe_of(4);
    std::mt19937 rng(11);
    for (int t = 0; t < 200; ++t) {
        auto b = random_set(u, rng);
        auto e = random_set(u, rng);
        CHECK(poss(b, e) == poss(e, b));
        CHECK(cert(b, e) == 1.0 - poss(complement(b), e));
        auto en = random_normal_set(u, rng);
        CHECK(cert(b, en) <= poss(b, en) + kTol);
    }
}

TEST_CASE("entails is a partial order on the quantized grid") {
    auto u = abc();
    auto grid = quantized_grid(u);
    REQUIRE(grid.size() == 125);
    for (const auto& a : grid) CHECK(entails(a, a));

    const std::size_t n = grid.size();
    std::vector<bool> le(n * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) le[i * n + j] = entails(grid[i], grid[j]);
    }
    int antisymmetry_violations = 0;
    int transitivity_violations = 0;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (!le[i * n + j]) continue;
            if (le[j * n + i] && grid[i].grades() != grid[j].grades()) {
                ++antisymmetry_violations;
            }
            for (std::size_t k = 0; k < n; ++k) {
                if (le[j * n + k] && !le[i * n + k]) ++transitivity_violations;
            }
        }
    }
    CHECK(antisymmetry_violations == 0);
    CHECK(transitivity_violations == 0);
}
