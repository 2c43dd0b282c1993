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

#ifndef CREDAL_DISCOUNT_HPP
#define CREDAL_DISCOUNT_HPP

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "credal/fuzzy.hpp"

namespace credal {

/// A linguistic credibility value: a discrete fuzzy subset of [0,1],
/// stored as (y, grade) points with strictly increasing y.
class LinguisticCredibility {
public:
    LinguisticCredibility(std::string name, std::vector<std::pair<double, double>> points);

    const std::string& name() const { return name_; }
    const std::vector<std::pair<double, double>>& points() const { return points_; }
    bool normal() const;

    /// The built-in "unknown" granule: membership 1 at every grid point.
    static LinguisticCredibility unknown();

private:
    std::string name_;
    std::vector<std::pair<double, double>> points_;
};

/// Reflection across the midpoint of [0,1]: each point (y, g) maps to (1-y, g).
LinguisticCredibility antonym(const LinguisticCredibility& alpha);

/// Midpoint of the y values attaining the maximal grade.
double center_of_maximum(const LinguisticCredibility& alpha);

/// A fuzzy set whose membership grades are themselves fuzzy subsets of
/// [0,1]; per element, (grade, membership) pairs with strictly
/// increasing grade values.
class Type2FuzzySet {
public:
    using GradeList = std::vector<std::pair<double, double>>;

    Type2FuzzySet(UniversePtr universe, std::vector<GradeList> grades);

    const UniversePtr& universe() const { return universe_; }
    std::size_t size() const { return grades_.size(); }
    const GradeList& operator[](std::size_t i) const { return grades_[i]; }

private:
    UniversePtr universe_;
    std::vector<GradeList> grades_;
};

/// Scalar discounting: S(1-alpha, A(x)) for conorm models, A(x)^alpha
/// for the exponential model (0^0 = 1). Result pointwise >= A.
FuzzySet discount(const FuzzySet& a, double alpha, const DiscountModel& model);

/// Linguistic discounting via the extension principle; duplicate grades
/// (after rounding to 9 decimals) merge by maximum membership.
Type2FuzzySet discount_linguistic(const FuzzySet& a, const LinguisticCredibility& alpha,
                                  const DiscountModel& model);

/// Element-dependent credibility h(x): result(x) = S(1-h(x), A(x)).
FuzzySet discount_pointwise(const FuzzySet& a, const FuzzySet& h, Conorm s);

/// p(x, A) = max_y min(A(y), p(x,y)); requires a proximity relation.
double proximity_to_set(std::size_t x, const FuzzySet& a);

/// Maps (alpha, proximity) to an effective pointwise credibility.
/// Admissible profiles satisfy f(0,b)=0, f(1,b)=1 and are monotone
/// nondecreasing and continuous in both arguments.
class ProximityProfile {
public:
    ProximityProfile(std::string tag, std::vector<double> parameters,
                     std::function<double(double, double)> evaluate);

    const std::string& tag() const { return tag_; }
    const std::vector<double>& parameters() const { return parameters_; }
    double operator()(double alpha, double b) const { return evaluate_(alpha, b); }

    /// f(alpha, b) = min(1, alpha * (1 + kappa * b)), kappa >= 0.
    static ProximityProfile cap(double kappa);
    /// f(alpha, b) = 1 - (1 - alpha)^(1 + kappa * b), kappa >= 0.
    static ProximityProfile pow(double kappa);
    /// pow(3).
    static ProximityProfile standard();

private:
    std::string tag_;
    std::vector<double> parameters_;
    std::function<double(double, double)> evaluate_;
};

struct ProfileReport {
    bool pass = true;
    std::string first_violation;  // empty when pass
};

/// Checks the profile axioms numerically on a 101x101 grid.
ProfileReport validate_profile(const ProximityProfile& f);

enum class ProximityMode { Literal, Soften };

/// Proximity-based discounting. Literal: h(x) = f(alpha, p(x,A)),
/// result(x) = S(1-h(x), A(x)). Soften: result(x) = S(1-alpha, p(x,A)),
/// i.e. the proximity-dilated set discounted uniformly.
FuzzySet discount_proximity(const FuzzySet& a, double alpha, const ProximityProfile& f,
                            Conorm s, ProximityMode mode = ProximityMode::Soften);

}  // namespace credal

#endif
