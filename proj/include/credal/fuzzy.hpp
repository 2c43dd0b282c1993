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

#ifndef CREDAL_FUZZY_HPP
#define CREDAL_FUZZY_HPP

#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace credal {

/// A finite ordered set of labeled elements, optionally carrying a
/// symmetric proximity relation with p(x,x) = 1.
class Universe {
public:
    Universe(std::string name, std::vector<std::string> elements);

    const std::string& name() const { return name_; }
    std::size_t size() const { return elements_.size(); }
    const std::vector<std::string>& elements() const { return elements_; }
    std::optional<std::size_t> index_of(std::string_view label) const;

    /// Installs p(x,y) = p(y,x) = value. Diagonal entries are fixed at 1
    /// and cannot be overridden.
    void set_proximity(std::string_view x, std::string_view y, double value);
    bool has_proximity() const { return !proximity_.empty(); }
    double proximity(std::size_t i, std::size_t j) const;

private:
    std::string name_;
    std::vector<std::string> elements_;
    std::vector<double> proximity_;  // row-major, empty until first set_proximity
};

using UniversePtr = std::shared_ptr<const Universe>;

/// Discrete fuzzy subset: one membership grade in [0,1] per universe element.
/// Immutable after construction.
class FuzzySet {
public:
    FuzzySet(UniversePtr universe, std::vector<double> grades);

    /// Builds a set from sparse element->grade assignments; omitted
    /// elements get grade 0.
    static FuzzySet make(UniversePtr universe,
                         const std::vector<std::pair<std::string, double>>& assignments);
    static FuzzySet zeros(UniversePtr universe);
    static FuzzySet ones(UniversePtr universe);

    const UniversePtr& universe() const { return universe_; }
    std::size_t size() const { return grades_.size(); }
    double operator[](std::size_t i) const { return grades_[i]; }
    const std::vector<double>& grades() const { return grades_; }

private:
    UniversePtr universe_;
    std::vector<double> grades_;
};

enum class Conorm { Max, ProbSum, Bounded };

double conorm_apply(Conorm s, double a, double b);

/// How credibility alpha lifts a membership grade: through a t-conorm as
/// S(1-alpha, a), or exponentially as a^alpha (with 0^0 = 1).
struct DiscountModel {
    enum class Kind { Conorm, Exponential };
    Kind kind = Kind::Conorm;
    Conorm s = Conorm::Max;

    static DiscountModel conorm(Conorm s) { return {Kind::Conorm, s}; }
    static DiscountModel exponential() { return {Kind::Exponential, Conorm::Max}; }
};

FuzzySet complement(const FuzzySet& a);

/// Pointwise minimum of a nonempty list of sets over one universe.
FuzzySet conjoin(std::span<const FuzzySet> sets);

/// Poss[B/E] = max_x min(B(x), E(x)).
double poss(const FuzzySet& b, const FuzzySet& e);

/// Cert[B/E] = 1 - Poss[complement(B)/E].
double cert(const FuzzySet& b, const FuzzySet& e);

double height(const FuzzySet& a);
bool is_normal(const FuzzySet& a);

/// True iff b dominates d pointwise; "V is B" is inferable from a base
/// whose conjunction is d.
bool entails(const FuzzySet& d, const FuzzySet& b);

namespace detail {
void require_grade(double v, const char* what);
void require_same_universe(const FuzzySet& a, const FuzzySet& b);
}  // namespace detail

}  // namespace credal

#endif
