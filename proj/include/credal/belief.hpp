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

#ifndef CREDAL_BELIEF_HPP
#define CREDAL_BELIEF_HPP

#include "credal/fuzzy.hpp"

namespace credal {

/// Belief structure with two focal elements: a normal fuzzy set A with
/// mass alpha and the whole universe with mass 1 - alpha.
class SimpleSupport {
public:
    SimpleSupport(FuzzySet focal, double mass);

    const FuzzySet& focal() const { return focal_; }
    double mass() const { return mass_; }

private:
    FuzzySet focal_;
    double mass_;
};

inline SimpleSupport simple_support(FuzzySet focal, double mass) {
    return SimpleSupport(std::move(focal), mass);
}

/// Weighted: mass-weighted mixture of the possibilities against the
/// focal set and the universe. Contour: max-min against the contour
/// function. The two agree on crisp query sets; they can differ on
/// fuzzy ones.
enum class BeliefMethod { Weighted, Contour };

double pl(const FuzzySet& b, const SimpleSupport& ss,
          BeliefMethod method = BeliefMethod::Weighted);
double bel(const FuzzySet& b, const SimpleSupport& ss,
           BeliefMethod method = BeliefMethod::Weighted);

/// F(x) = alpha * A(x) + 1 - alpha; equals Pl({x}).
FuzzySet contour(const SimpleSupport& ss);

}  // namespace credal

#endif
