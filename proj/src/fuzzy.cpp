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

#include "credal/fuzzy.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <unordered_set>

namespace credal {

namespace detail {

void require_grade(double v, const char* what) {
    if (!(v >= 0.0 && v <= 1.0)) {
        throw std::invalid_argument(std::string(what) + " outside [0,1]");
    }
}

void require_same_universe(const FuzzySet& a, const FuzzySet& b) {
    if (a.universe() != b.universe()) {
        throw std::invalid_argument("mixed universes");
    }
}

}  // namespace detail

Universe::Universe(std::string name, std::vector<std::string> elements)
    : name_(std::move(name)), elements_(std::move(elements)) {
    if (elements_.empty()) {
        throw std::invalid_argument("universe must have at least one element");
    }
    std::unordered_set<std::string_view> seen;
    for (const auto& e : elements_) {
        if (!seen.insert(e).second) {
            throw std::invalid_argument("duplicate element label: " + e);
        }
    }
}

std::optional<std::size_t> Universe::index_of(std::string_view label) const {
    for (std::size_t i = 0; i < elements_.size(); ++i) {
        if (elements_[i] == label) return i;
    }
    return std::nullopt;
}

void Universe::set_proximity(std::string_view x, std::string_view y, double value) {
    auto i = index_of(x);
    auto j = index_of(y);
    if (!i || !j) {
        throw std::invalid_argument("unknown element label in proximity declaration");
    }
    detail::require_grade(value, "proximity value");
    if (proximity_.empty()) {
        proximity_.assign(size() * size(), 0.0);
        for (std::size_t k = 0; k < size(); ++k) proximity_[k * size() + k] = 1.0;
    }
    if (*i == *j) {
        if (value != 1.0) throw std::invalid_argument("proximity p(x,x) must be 1");
        return;
    }
    proximity_[*i * size() + *j] = value;
    proximity_[*j * size() + *i] = value;
}

double Universe::proximity(std::size_t i, std::size_t j) const {
    if (!has_proximity()) {
        throw std::invalid_argument("universe has no proximity relation");
    }
    return proximity_[i * size() + j];
}

FuzzySet::FuzzySet(UniversePtr universe, std::vector<double> grades)
    : universe_(std::move(universe)), grades_(std::move(grades)) {
    if (!universe_) throw std::invalid_argument("null universe");
    if (grades_.size() != universe_->size()) {
        throw std::invalid_argument("grade count does not match universe size");
    }
    for (double g : grades_) detail::require_grade(g, "membership grade");
}

FuzzySet FuzzySet::make(UniversePtr universe,
                        const std::vector<std::pair<std::string, double>>& assignments) {
    if (!universe) throw std::invalid_argument("null universe");
    std::vector<double> grades(universe->size(), 0.0);
    for (const auto& [label, grade] : assignments) {
        auto idx = universe->index_of(label);
        if (!idx) throw std::invalid_argument("unknown element label: " + label);
        detail::require_grade(grade, "membership grade");
        grades[*idx] = grade;
    }
    return FuzzySet(std::move(universe), std::move(grades));
}

FuzzySet FuzzySet::zeros(UniversePtr universe) {
    std::vector<double> g(universe->size(), 0.0);
    return FuzzySet(std::move(universe), std::move(g));
}

FuzzySet FuzzySet::ones(UniversePtr universe) {
    std::vector<double> g(universe->size(), 1.0);
    return FuzzySet(std::move(universe), std::move(g));
}

double conorm_apply(Conorm s, double a, double b) {
    detail::require_grade(a, "conorm argument");
    detail::require_grade(b, "conorm argument");
    switch (s) {
        case Conorm::Max: return std::max(a, b);
        case Conorm::ProbSum:
            // Boundary laws hold exactly; the general expression can
            // overshoot 1 by one ulp, hence the clamp.
            if (a == 0.0) return b;
            if (b == 0.0) return a;
            if (a == 1.0 || b == 1.0) return 1.0;
            return std::min(1.0, a + b - a * b);
        case Conorm::Bounded: return std::min(1.0, a + b);
    }
    throw std::logic_error("unreachable");
}

FuzzySet complement(const FuzzySet& a) {
    std::vector<double> g(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) g[i] = 1.0 - a[i];
    return FuzzySet(a.universe(), std::move(g));
}

FuzzySet conjoin(std::span<const FuzzySet> sets) {
    if (sets.empty()) throw std::invalid_argument("conjoin of empty list");
    std::vector<double> g = sets.front().grades();
    for (const FuzzySet& s : sets.subspan(1)) {
        detail::require_same_universe(sets.front(), s);
        for (std::size_t i = 0; i < g.size(); ++i) g[i] = std::min(g[i], s[i]);
    }
    return FuzzySet(sets.front().universe(), std::move(g));
}

double poss(const FuzzySet& b, const FuzzySet& e) {
    detail::require_same_universe(b, e);
    double m = 0.0;
    for (std::size_t i = 0; i < b.size(); ++i) m = std::max(m, std::min(b[i], e[i]));
    return m;
}

double cert(const FuzzySet& b, const FuzzySet& e) {
    return 1.0 - poss(complement(b), e);
}

double height(const FuzzySet& a) {
    double m = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, a[i]);
    return m;
}

bool is_normal(const FuzzySet& a) { return height(a) == 1.0; }

bool entails(const FuzzySet& d, const FuzzySet& b) {
    detail::require_same_universe(d, b);
    for (std::size_t i = 0; i < d.size(); ++i) {
        if (b[i] < d[i]) return false;
    }
    return true;
}

}  // namespace credal
