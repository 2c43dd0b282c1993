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

#ifndef CREDAL_RELATIVE_HPP
#define CREDAL_RELATIVE_HPP

#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "credal/discount.hpp"
#include "credal/fuzzy.hpp"

namespace credal {

/// Monotone transform applied to the raw compatibility value when a
/// proposition carries relative credibility.
struct GTransform {
    enum class Kind { Identity, Const, Power, Cap };
    Kind kind = Kind::Identity;
    double param = 0.0;

    static GTransform identity() { return {Kind::Identity, 0.0}; }
    static GTransform constant(double a);
    static GTransform power(double q);
    static GTransform cap(double c);
};

double g_apply(const GTransform& g, double v);

/// Compatibility of evidence e with preeminent knowledge k: Poss[e/k].
double relative_alpha(const FuzzySet& e, const FuzzySet& k);

struct Proposition {
    enum class Qualifier { None, Scalar, Linguistic, Relative };

    std::string id;
    FuzzySet content;
    Qualifier qualifier = Qualifier::None;
    double alpha = 1.0;               // Scalar
    std::string linguistic;           // Linguistic: granule name
    GTransform g;                     // Relative
    int priority = 1;                 // 1 = highest
    std::optional<DiscountModel> model;  // falls back to the default conorm
};

using LinguisticTable = std::map<std::string, LinguisticCredibility>;

struct AdjudicationReport {
    struct Entry {
        std::string id;
        int priority = 1;
        std::optional<double> alpha;  // computed, for Relative propositions
        FuzzySet effective;           // F: the discounted content
    };
    std::vector<Entry> entries;       // input order
    FuzzySet combined;                // K: pointwise min of all effective sets
    std::vector<std::pair<int, bool>> stratum_normality;  // (priority, K_k normal)
};

/// Processes propositions stratum by stratum in increasing priority
/// number. Relative propositions in stratum k get alpha =
/// g(Poss[E/K_{k-1}]) against the running conjunction of all strictly
/// higher strata, then are discounted like any other proposition.
AdjudicationReport adjudicate(std::span<const Proposition> propositions,
                              Conorm default_conorm, const LinguisticTable& granules);

}  // namespace credal

#endif
