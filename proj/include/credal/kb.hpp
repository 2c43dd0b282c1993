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

#ifndef CREDAL_KB_HPP
#define CREDAL_KB_HPP

#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "credal/belief.hpp"
#include "credal/discount.hpp"
#include "credal/relative.hpp"

namespace credal {

/// Syntax or validation failure in a knowledge-base document; positions
/// are 1-based.
class ParseError : public std::runtime_error {
public:
    ParseError(int line, int column, const std::string& message);
    int line() const { return line_; }
    int column() const { return column_; }

private:
    int line_;
    int column_;
};

/// Failure while answering queries over a valid document.
class EvalError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Query {
    enum class Kind { Poss, Cert, Entails, Dist, Pl, Bel };
    Kind kind = Kind::Dist;
    std::string set_name;     // Poss/Cert/Entails/Pl/Bel
    std::string belief_name;  // Pl/Bel
    BeliefMethod method = BeliefMethod::Weighted;
};

struct BeliefDecl {
    std::string name;
    std::string focal_set;
    double mass = 0.0;
};

struct KnowledgeBaseDoc {
    std::vector<UniversePtr> universes;
    std::vector<std::pair<std::string, FuzzySet>> sets;  // declaration order
    LinguisticTable granules;
    std::vector<Proposition> propositions;
    std::vector<BeliefDecl> beliefs;
    std::vector<Query> queries;

    const FuzzySet* find_set(std::string_view name) const;
    const BeliefDecl* find_belief(std::string_view name) const;
};

/// Parses and validates a document; rejects duplicate declarations,
/// forward references, out-of-range grades, and conflicting proximity
/// triples, all with line/column positions.
KnowledgeBaseDoc parse_kb(std::string_view text);

struct QueryResult {
    enum class Kind { Poss, Cert, Entails, Dist, Pl, Bel, AlphaReport };

    struct Type2Entry {
        std::string prop_id;
        Type2FuzzySet dist;
    };

    Kind kind;
    std::string echo;  // the query as parsed, canonical spelling
    std::variant<double, bool, FuzzySet, std::vector<Type2Entry>> payload;
};

/// Adjudicates all propositions once, then answers the queries in
/// order. A dist query over a document with linguistic qualifiers also
/// emits the per-proposition type-2 distributions as a separate report
/// result.
std::vector<QueryResult> evaluate(const KnowledgeBaseDoc& doc);

enum class RenderFormat { Text, Json };

/// Deterministic rendering; scalars at fixed precision, sets in
/// universe order, type-2 grade lists sorted by grade.
std::string render(const std::vector<QueryResult>& results, RenderFormat format,
                   int precision = 6);

}  // namespace credal

#endif
