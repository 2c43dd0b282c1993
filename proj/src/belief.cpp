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

#include "credal/belief.hpp"

#include <algorithm>
#include <stdexcept>

namespace credal {

SimpleSupport::SimpleSupport(FuzzySet focal, double mass)
    : focal_(std::move(focal)), mass_(mass) {
    detail::require_grade(mass_, "focal mass");
    if (!is_normal(focal_)) {
        throw std::invalid_argument("simple support requires a normal focal set");
    }
}

double pl(const FuzzySet& b, const SimpleSupport& ss, BeliefMethod method) {
    detail::require_same_universe(b, ss.focal());
    if (method == BeliefMethod::Weighted) {
        // Poss[B/X] = height(B).
        return ss.mass() * poss(b, ss.focal()) + (1.0 - ss.mass()) * height(b);
    }
    return poss(b, contour(ss));
}

double bel(const FuzzySet& b, const SimpleSupport& ss, BeliefMethod method) {
    detail::require_same_universe(b, ss.focal());
    if (method == BeliefMethod::Weighted) {
        return ss.mass() * cert(b, ss.focal()) +
               (1.0 - ss.mass()) * cert(b, FuzzySet::ones(b.universe()));
    }
    return 1.0 - poss(complement(b), contour(ss));
}

FuzzySet contour(const SimpleSupport& ss) {
    const FuzzySet& a = ss.focal();
    const double alpha = ss.mass();
    std::vector<double> g(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        g[i] = std::min(1.0, alpha * a[i] + 1.0 - alpha);
    }
    return FuzzySet(a.universe(), std::move(g));
}

}  // namespace credal
