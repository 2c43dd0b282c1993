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

#include <cstdio>
#include <sstream>

#include <nlohmann/json.hpp>

#include "credal/kb.hpp"

namespace credal {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string fmt(double v, int precision) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*f", precision, v);
    return buf;
}

const char* kind_word(QueryResult::Kind k) {
    switch (k) {
        case QueryResult::Kind::Poss: return "poss";
        case QueryResult::Kind::Cert: return "cert";
        case QueryResult::Kind::Entails: return "entails";
        case QueryResult::Kind::Dist: return "dist";
        case QueryResult::Kind::Pl: return "pl";
        case QueryResult::Kind::Bel: return "bel";
        case QueryResult::Kind::AlphaReport: return "report";
    }
    return "?";
}

std::string grade_list_text(const Type2FuzzySet::GradeList& list, int precision) {
    std::ostringstream os;
    os << '{';
    for (std::size_t i = 0; i < list.size(); ++i) {
        if (i) os << ", ";
        os << fmt(list[i].first, precision) << ':' << fmt(list[i].second, precision);
    }
    os << '}';
    return os.str();
}

void render_text(std::ostringstream& os, const QueryResult& r, int precision) {
    switch (r.kind) {
        case QueryResult::Kind::Poss:
        case QueryResult::Kind::Cert:
        case QueryResult::Kind::Pl:
        case QueryResult::Kind::Bel:
            os << r.echo << " = " << fmt(std::get<double>(r.payload), precision) << '\n';
            break;
        case QueryResult::Kind::Entails:
            os << r.echo << " = " << (std::get<bool>(r.payload) ? "true" : "false") << '\n';
            break;
        case QueryResult::Kind::Dist: {
            const FuzzySet& k = std::get<FuzzySet>(r.payload);
            os << "dist:";
            for (std::size_t i = 0; i < k.size(); ++i) {
                os << ' ' << k.universe()->elements()[i] << '=' << fmt(k[i], precision);
            }
            os << '\n';
            break;
        }
        case QueryResult::Kind::AlphaReport: {
            const auto& entries = std::get<std::vector<QueryResult::Type2Entry>>(r.payload);
            for (const auto& e : entries) {
                os << "report " << e.prop_id << ":\n";
                for (std::size_t i = 0; i < e.dist.size(); ++i) {
                    os << "  " << e.dist.universe()->elements()[i] << ": "
                       << grade_list_text(e.dist[i], precision) << '\n';
                }
            }
            break;
        }
    }
}

ordered_json render_json(const QueryResult& r, int precision) {
    ordered_json obj;
    obj["query"] = r.echo;
    obj["kind"] = kind_word(r.kind);
    switch (r.kind) {
        case QueryResult::Kind::Poss:
        case QueryResult::Kind::Cert:
        case QueryResult::Kind::Pl:
        case QueryResult::Kind::Bel:
            obj["value"] = fmt(std::get<double>(r.payload), precision);
            break;
        case QueryResult::Kind::Entails:
            obj["value"] = std::get<bool>(r.payload);
            break;
        case QueryResult::Kind::Dist: {
            const FuzzySet& k = std::get<FuzzySet>(r.payload);
            ordered_json dist;
            for (std::size_t i = 0; i < k.size(); ++i) {
                dist[k.universe()->elements()[i]] = fmt(k[i], precision);
            }
            obj["value"] = std::move(dist);
            break;
        }
        case QueryResult::Kind::AlphaReport: {
            ordered_json props = ordered_json::array();
            for (const auto& e : std::get<std::vector<QueryResult::Type2Entry>>(r.payload)) {
                ordered_json dist;
                for (std::size_t i = 0; i < e.dist.size(); ++i) {
                    ordered_json list = ordered_json::array();
                    for (const auto& [g, m] : e.dist[i]) {
                        list.push_back({{"grade", fmt(g, precision)},
                                        {"membership", fmt(m, precision)}});
                    }
                    dist[e.dist.universe()->elements()[i]] = std::move(list);
                }
                props.push_back({{"prop", e.prop_id}, {"dist", std::move(dist)}});
            }
            obj["value"] = std::move(props);
            break;
        }
    }
    return obj;
}

}  // namespace

std::string render(const std::vector<QueryResult>& results, RenderFormat format,
                   int precision) {
    if (format == RenderFormat::Text) {
        std::ostringstream os;
        for (const QueryResult& r : results) render_text(os, r, precision);
        return os.str();
    }
    ordered_json arr = ordered_json::array();
    for (const QueryResult& r : results) arr.push_back(render_json(r, precision));
    return arr.dump(2) + "\n";
}

}  // namespace credal
