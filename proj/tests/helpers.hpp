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

#ifndef CREDAL_TESTS_HELPERS_HPP
#define CREDAL_TESTS_HELPERS_HPP

#include <cmath>
#include <random>
#include <string>
#include <vector>

#include "credal/fuzzy.hpp"

namespace credal::testing {

inline constexpr double kTol = 1e-12;

inline bool close(double a, double b, double tol = kTol) { return std::abs(a - b) <= tol; }

inline UniversePtr abc() {
    return std::make_shared<Universe>("X", std::vector<std::string>{"a", "b", "c"});
}

inline UniversePtr universe_of(std::size_t n, const std::string& name = "X") {
    std::vector<std::string> elems;
    for (std::size_t i = 0; i < n; ++i) elems.push_back("x" + std::to_string(i));
    return std::make_shared<Universe>(name, std::move(elems));
}

inline FuzzySet fs(const UniversePtr& u, std::vector<double> grades) {
    return FuzzySet(u, std::move(grades));
}

inline FuzzySet random_set(const UniversePtr& u, std::mt19937& rng) {
    std::uniform_real_distribution<double> dist(0.0, 1.0);
    std::vector<double> g(u->size());
    for (double& v : g) v = dist(rng);
    return FuzzySet(u, std::move(g));
}

// Random set with at least one grade equal to 1.
inline FuzzySet random_normal_set(const UniversePtr& u, std::mt19937& rng) {
    std::vector<double> g = random_set(u, rng).grades();
    g[std::uniform_int_distribution<std::size_t>(0, g.size() - 1)(rng)] = 1.0;
    return FuzzySet(u, std::move(g));
}

inline bool pointwise_equal(const FuzzySet& a, const FuzzySet& b, double tol = kTol) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (!close(a[i], b[i], tol)) return false;
    }
    return true;
}

// All fuzzy sets over u with grades restricted to {0, .25, .5, .75, 1}.
inline std::vector<FuzzySet> quantized_grid(const UniversePtr& u) {
    const std::vector<double> levels{0.0, 0.25, 0.5, 0.75, 1.0};
    std::vector<FuzzySet> out;
    std::vector<std::size_t> idx(u->size(), 0);
    for (;;) {
        std::vector<double> g(u->size());
        for (std::size_t i = 0; i < u->size(); ++i) g[i] = levels[idx[i]];
        out.emplace_back(u, std::move(g));
        std::size_t i = 0;
        while (i < idx.size() && ++idx[i] == levels.size()) idx[i++] = 0;
        if (i == idx.size()) break;
    }
    return out;
}

}  // namespace credal::testing

#endif
