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

#include <optional>

#include "credal/kb.hpp"

namespace credal {

namespace {

std::string echo_of(const Query& q) {
    switch (q.kind) {
        case Query::Kind::Poss: return "poss " + q.set_name;
        case Query::Kind::Cert: return "cert " + q.set_name;
        case Query::Kind::Entails: return "entails " + q.set_name;
        case Query::Kind::Dist: return "dist";
        case Query::Kind::Pl:
        case Query::Kind::Bel:
            return std::string(q.kind == Query::Kind::Pl ? "pl " : "bel ") + q.set_name +
                   " under " + q.belief_name + " method " +
                   (q.method == BeliefMethod::Weighted ? "weighted" : "contour");
    }
    return "?";
}

}  // namespace

std::vector<QueryResult> evaluate(const KnowledgeBaseDoc& doc) {
    std::optional<AdjudicationReport> adj;
    if (!doc.propositions.empty()) {
        adj = adjudicate(doc.propositions, Conorm::Max, doc.granules);
    }

    auto combined_for = [&](const UniversePtr& u) -> FuzzySet {
        if (adj) {
            if (adj->combined.universe() != u) {
                throw EvalError("query set lives on a different universe than the propositions");
            }
            return adj->combined;
        }
        return FuzzySet::ones(u);
    };

    bool has_linguistic = false;
    for (const Proposition& p : doc.propositions) {
        has_linguistic |= p.qualifier == Proposition::Qualifier::Linguistic;
    }

    std::vector<QueryResult> results;
    for (const Query& q : doc.queries) {
        switch (q.kind) {
            case Query::Kind::Poss:
            case Query::Kind::Cert:
            case Query::Kind::Entails: {
                const FuzzySet& b = *doc.find_set(q.set_name);
                const FuzzySet& k = combined_for(b.universe());
                if (q.kind == Query::Kind::Poss) {
                    results.push_back({QueryResult::Kind::Poss, echo_of(q), poss(b, k)});
                } else if (q.kind == Query::Kind::Cert) {
                    results.push_back({QueryResult::Kind::Cert, echo_of(q), cert(b, k)});
                } else {
                    results.push_back({QueryResult::Kind::Entails, echo_of(q), entails(k, b)});
                }
                break;
            }
            case Query::Kind::Dist: {
                UniversePtr u;
                if (adj) {
                    u = adj->combined.universe();
                } else if (!doc.universes.empty()) {
                    u = doc.universes.front();
                } else {
                    throw EvalError("dist query needs a universe");
                }
                results.push_back({QueryResult::Kind::Dist, echo_of(q), combined_for(u)});
                if (has_linguistic) {
                    // Linguistic qualifiers are scalar-reduced inside the
                    // adjudication; their full type-2 distributions are
                    // reported alongside.
                    std::vector<QueryResult::Type2Entry> entries;
                    for (const Proposition& p : doc.propositions) {
                        if (p.qualifier != Proposition::Qualifier::Linguistic) continue;
                        const DiscountModel model =
                            p.model.value_or(DiscountModel::conorm(Conorm::Max));
                        entries.push_back(
                            {p.id, discount_linguistic(p.content, doc.granules.at(p.linguistic),
                                                       model)});
                    }
                    results.push_back(
                        {QueryResult::Kind::AlphaReport, echo_of(q), std::move(entries)});
                }
                break;
            }
            case Query::Kind::Pl:
            case Query::Kind::Bel: {
                const FuzzySet& b = *doc.find_set(q.set_name);
                const BeliefDecl& decl = *doc.find_belief(q.belief_name);
                const FuzzySet& focal = *doc.find_set(decl.focal_set);
                if (!is_normal(focal)) {
                    throw EvalError("belief structure '" + decl.name +
                                    "' needs a normal focal set");
                }
                if (focal.universe() != b.universe()) {
                    throw EvalError("query set and focal set live on different universes");
                }
                SimpleSupport ss(focal, decl.mass);
                double v = q.kind == Query::Kind::Pl ? pl(b, ss, q.method) : bel(b, ss, q.method);
                results.push_back({q.kind == Query::Kind::Pl ? QueryResult::Kind::Pl
                                                             : QueryResult::Kind::Bel,
                                   echo_of(q), v});
                break;
            }
        }
    }
    return results;
}

}  // namespace credal
