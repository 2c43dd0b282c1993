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

#include "credal/relative.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

namespace credal {

GTransform GTransform::constant(double a) {
    detail::require_grade(a, "const transform parameter");
    return {Kind::Const, a};
}

GTransform GTransform::power(double q) {
    if (!(q > 0.0)) throw std::invalid_argument("power transform needs q > 0");
    return {Kind::Power, q};
}

GTransform GTransform::cap(double c) {
    detail::require_grade(c, "cap transform parameter");
    return {Kind::Cap, c};
}

double g_apply(const GTransform& g, double v) {
    detail::require_grade(v, "transform argument");
    switch (g.kind) {
        case GTransform::Kind::Identity: return v;
        case GTransform::Kind::Const: return g.param;
        case GTransform::Kind::Power: return std::pow(v, g.param);
        case GTransform::Kind::Cap: return std::min(g.param, v);
    }
    throw std::logic_error("unreachable");
}

double relative_alpha(const FuzzySet& e, const FuzzySet& k) { return poss(e, k); }

AdjudicationReport adjudicate(std::span<const Proposition> propositions,
                              Conorm default_conorm, const LinguisticTable& granules) {
    if (propositions.empty()) throw std::invalid_argument("adjudicate of empty list");
    const UniversePtr& universe = propositions.front().content.universe();
    std::set<int> priorities;
    for (const Proposition& p : propositions) {
        if (p.content.universe() != universe) throw std::invalid_argument("mixed universes");
        if (p.priority < 1) throw std::invalid_argument("priority must be >= 1");
        if (p.qualifier == Proposition::Qualifier::Linguistic &&
            !granules.contains(p.linguistic)) {
            throw std::invalid_argument("unresolved linguistic credibility: " + p.linguistic);
        }
        priorities.insert(p.priority);
    }

    AdjudicationReport report{.entries = {}, .combined = FuzzySet::ones(universe)};
    report.entries.resize(propositions.size(),
                          AdjudicationReport::Entry{.effective = FuzzySet::ones(universe)});

    FuzzySet k = FuzzySet::ones(universe);
    for (int priority : priorities) {
        std::vector<FuzzySet> stratum_sets;
        for (std::size_t i = 0; i < propositions.size(); ++i) {
            const Proposition& p = propositions[i];
            if (p.priority != priority) continue;
            const DiscountModel model =
                p.model.value_or(DiscountModel::conorm(default_conorm));
            AdjudicationReport::Entry entry{
                .id = p.id, .priority = p.priority, .alpha = {}, .effective = p.content};
            switch (p.qualifier) {
                case Proposition::Qualifier::None:
                    break;
                case Proposition::Qualifier::Scalar:
                    entry.effective = discount(p.content, p.alpha, model);
                    break;
                case Proposition::Qualifier::Linguistic:
                    // Reduced to a scalar so the running conjunction stays type-1.
                    entry.effective = discount(
                        p.content, center_of_maximum(granules.at(p.linguistic)), model);
                    break;
                case Proposition::Qualifier::Relative: {
                    // All relative propositions of one stratum read the same k.
                    double alpha = g_apply(p.g, relative_alpha(p.content, k));
                    entry.alpha = alpha;
                    entry.effective = discount(p.content, alpha, model);
                    break;
                }
            }
            stratum_sets.push_back(entry.effective);
            report.entries[i] = std::move(entry);
        }
        stratum_sets.push_back(k);
        k = conjoin(stratum_sets);
        report.stratum_normality.emplace_back(priority, is_normal(k));
    }
    report.combined = std::move(k);
    return report;
}

}  // namespace credal
