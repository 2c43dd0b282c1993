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

#include <cctype>
#include <map>
#include <memory>
#include <optional>
#include <sstream>
#include <tuple>

#include "credal/kb.hpp"

namespace credal {

ParseError::ParseError(int line, int column, const std::string& message)
    : std::runtime_error("line " + std::to_string(line) + ", column " +
                         std::to_string(column) + ": " + message),
      line_(line),
      column_(column) {}

const FuzzySet* KnowledgeBaseDoc::find_set(std::string_view name) const {
    for (const auto& [n, s] : sets) {
        if (n == name) return &s;
    }
    return nullptr;
}

const BeliefDecl* KnowledgeBaseDoc::find_belief(std::string_view name) const {
    for (const auto& b : beliefs) {
        if (b.name == name) return &b;
    }
    return nullptr;
}

namespace {

// Scanner over a single statement line; positions are 1-based.
class LineScanner {
public:
    LineScanner(std::string_view text, int line) : text_(text), line_(line) {}

    [[noreturn]] void fail(const std::string& msg) const { fail_at(pos_, msg); }
    [[noreturn]] void fail_at(std::size_t pos, const std::string& msg) const {
        throw ParseError(line_, static_cast<int>(pos) + 1, msg);
    }

    int line() const { return line_; }
    // Position of the next token, for error reporting and lookahead.
    std::size_t pos() {
        skip_space();
        return pos_;
    }
    void seek(std::size_t p) { pos_ = p; }

    void skip_space() {
        while (pos_ < text_.size() && (text_[pos_] == ' ' || text_[pos_] == '\t')) ++pos_;
    }

    bool at_end() {
        skip_space();
        return pos_ >= text_.size();
    }

    void expect_end() {
        if (!at_end()) fail("unexpected trailing input");
    }

    bool peek_char(char c) {
        skip_space();
        return pos_ < text_.size() && text_[pos_] == c;
    }

    void expect_char(char c) {
        skip_space();
        if (pos_ >= text_.size() || text_[pos_] != c) {
            fail(std::string("expected '") + c + "'");
        }
        ++pos_;
    }

    bool peek_ident() {
        skip_space();
        return pos_ < text_.size() &&
               (std::isalpha(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_');
    }

    std::string ident(const char* what) {
        skip_space();
        if (!peek_ident()) fail(std::string("expected ") + what);
        std::size_t start = pos_;
        while (pos_ < text_.size() &&
               (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
            ++pos_;
        }
        return std::string(text_.substr(start, pos_ - start));
    }

    void keyword(const char* kw) {
        skip_space();
        std::size_t start = pos_;
        std::string got = ident("keyword");
        if (got != kw) fail_at(start, std::string("expected '") + kw + "'");
    }

    bool peek_number() {
        skip_space();
        return pos_ < text_.size() &&
               (std::isdigit(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '.');
    }

    // Returns (value, column of first char).
    std::pair<double, std::size_t> number(const char* what) {
        skip_space();
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (pos_ < text_.size() && text_[pos_] == '.') {
            ++pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
                ++pos_;
            }
        }
        if (pos_ == start || (pos_ == start + 1 && text_[start] == '.')) {
            fail_at(start, std::string("expected ") + what);
        }
        return {std::stod(std::string(text_.substr(start, pos_ - start))), start};
    }

    int integer(const char* what) {
        auto [v, col] = number(what);
        if (v != static_cast<double>(static_cast<long long>(v))) {
            fail_at(col, std::string("expected integer ") + what);
        }
        return static_cast<int>(v);
    }

private:
    std::string_view text_;
    int line_;
    std::size_t pos_ = 0;
};

enum class NameKind { Universe, Set, Ling, Prop, Belief };

const char* kind_word(NameKind k) {
    switch (k) {
        case NameKind::Universe: return "universe";
        case NameKind::Set: return "set";
        case NameKind::Ling: return "linguistic value";
        case NameKind::Prop: return "proposition";
        case NameKind::Belief: return "belief structure";
    }
    return "?";
}

class Parser {
public:
    KnowledgeBaseDoc parse(std::string_view text) {
        int line_no = 0;
        std::size_t begin = 0;
        while (begin <= text.size()) {
            std::size_t end = text.find('\n', begin);
            if (end == std::string_view::npos) end = text.size();
            std::string_view line = text.substr(begin, end - begin);
            ++line_no;
            if (auto hash = line.find('#'); hash != std::string_view::npos) {
                line = line.substr(0, hash);
            }
            LineScanner sc(line, line_no);
            if (!sc.at_end()) statement(sc);
            if (end == text.size()) break;
            begin = end + 1;
        }
        return std::move(doc_);
    }

private:
    void statement(LineScanner& sc) {
        std::size_t start = sc.pos();
        std::string head = sc.ident("statement keyword");
        if (head == "universe") parse_universe(sc);
        else if (head == "proximity") parse_proximity(sc);
        else if (head == "set") parse_set(sc);
        else if (head == "ling") parse_ling(sc);
        else if (head == "prop") parse_prop(sc);
        else if (head == "belief") parse_belief(sc);
        else if (head == "query") parse_query(sc);
        else sc.fail_at(start, "unknown statement '" + head + "'");
    }

    void declare(LineScanner& sc, std::size_t col, const std::string& name, NameKind kind) {
        auto [it, inserted] = names_.emplace(name, kind);
        if (!inserted) {
            sc.fail_at(col, "duplicate declaration of '" + name + "' (already a " +
                                std::string(kind_word(it->second)) + ")");
        }
    }

    template <typename T>
    T& resolve(LineScanner& sc, std::size_t col, const std::string& name, NameKind kind,
               std::map<std::string, T>& table) {
        auto it = table.find(name);
        if (it == table.end()) {
            sc.fail_at(col, std::string("unknown ") + kind_word(kind) + " '" + name + "'");
        }
        return it->second;
    }

    double grade(LineScanner& sc, const char* what) {
        auto [v, col] = sc.number(what);
        if (!(v >= 0.0 && v <= 1.0)) sc.fail_at(col, "grade outside [0,1]");
        return v;
    }

    void parse_universe(LineScanner& sc) {
        std::size_t col = sc.pos();
        std::string name = sc.ident("universe name");
        sc.expect_char('=');
        std::vector<std::string> elems;
        for (;;) {
            std::size_t ecol = sc.pos();
            std::string e = sc.ident("element label");
            for (const auto& prev : elems) {
                if (prev == e) sc.fail_at(ecol, "duplicate element label '" + e + "'");
            }
            elems.push_back(std::move(e));
            if (!sc.peek_char(',')) break;
            sc.expect_char(',');
        }
        sc.expect_end();
        declare(sc, col, name, NameKind::Universe);
        auto u = std::make_shared<Universe>(name, std::move(elems));
        universes_.emplace(name, u);
        doc_.universes.push_back(u);
    }

    void parse_proximity(LineScanner& sc) {
        std::size_t ucol = sc.pos();
        std::string uname = sc.ident("universe name");
        auto& u = resolve(sc, ucol, uname, NameKind::Universe, universes_);
        std::size_t xcol = sc.pos();
        std::string x = sc.ident("element label");
        std::size_t ycol = sc.pos();
        std::string y = sc.ident("element label");
        auto [v, vcol] = sc.number("proximity value");
        if (!(v >= 0.0 && v <= 1.0)) sc.fail_at(vcol, "grade outside [0,1]");
        sc.expect_end();
        auto i = u->index_of(x);
        if (!i) sc.fail_at(xcol, "unknown element '" + x + "' in universe " + uname);
        auto j = u->index_of(y);
        if (!j) sc.fail_at(ycol, "unknown element '" + y + "' in universe " + uname);
        if (*i == *j && v != 1.0) sc.fail_at(vcol, "proximity p(x,x) must be 1");
        auto key = std::tuple(uname, std::min(*i, *j), std::max(*i, *j));
        auto [it, inserted] = prox_seen_.emplace(key, v);
        if (!inserted && it->second != v) {
            sc.fail_at(vcol, "conflicting proximity for pair (" + x + ", " + y + ")");
        }
        u->set_proximity(x, y, v);
    }

    void parse_set(LineScanner& sc) {
        std::size_t col = sc.pos();
        std::string name = sc.ident("set name");
        sc.keyword("on");
        std::size_t ucol = sc.pos();
        std::string uname = sc.ident("universe name");
        auto& u = resolve(sc, ucol, uname, NameKind::Universe, universes_);
        sc.expect_char('=');
        std::vector<double> grades(u->size(), 0.0);
        if (!sc.at_end()) {
            for (;;) {
                std::size_t ecol = sc.pos();
                std::string e = sc.ident("element label");
                auto idx = u->index_of(e);
                if (!idx) sc.fail_at(ecol, "unknown element '" + e + "' in universe " + uname);
                sc.expect_char(':');
                grades[*idx] = grade(sc, "membership grade");
                if (!sc.peek_char(',')) break;
                sc.expect_char(',');
            }
        }
        sc.expect_end();
        declare(sc, col, name, NameKind::Set);
        set_universe_.emplace(name, uname);
        doc_.sets.emplace_back(name, FuzzySet(u, std::move(grades)));
    }

    void parse_ling(LineScanner& sc) {
        std::size_t col = sc.pos();
        std::string name = sc.ident("linguistic value name");
        sc.expect_char('=');
        std::vector<std::pair<double, double>> pts;
        for (;;) {
            auto [y, ycol] = sc.number("abscissa");
            if (!(y >= 0.0 && y <= 1.0)) sc.fail_at(ycol, "grade outside [0,1]");
            if (!pts.empty() && y <= pts.back().first) {
                sc.fail_at(ycol, "abscissas must be strictly increasing");
            }
            sc.expect_char(':');
            double g = grade(sc, "membership grade");
            pts.emplace_back(y, g);
            if (!sc.peek_char(',')) break;
            sc.expect_char(',');
        }
        sc.expect_end();
        declare(sc, col, name, NameKind::Ling);
        doc_.granules.emplace(name, LinguisticCredibility(name, std::move(pts)));
    }

    void parse_prop(LineScanner& sc) {
        std::size_t col = sc.pos();
        std::string name = sc.ident("proposition name");
        sc.expect_char(':');
        sc.keyword("V");
        sc.keyword("is");
        std::size_t scol = sc.pos();
        std::string sname = sc.ident("set name");
        const FuzzySet* content = doc_.find_set(sname);
        if (!content) sc.fail_at(scol, "unknown set '" + sname + "'");
        if (!prop_universe_.empty() && set_universe_.at(sname) != prop_universe_) {
            sc.fail_at(scol, "propositions must share one universe (already using " +
                                 prop_universe_ + ")");
        }

        Proposition p{.id = name, .content = *content};
        bool have_qualifier = false, have_model = false, have_priority = false;
        while (!sc.at_end()) {
            std::size_t kcol = sc.pos();
            std::string kw = sc.ident("clause keyword");
            if (kw == "cred") {
                if (have_qualifier) sc.fail_at(kcol, "duplicate credibility clause");
                have_qualifier = true;
                if (sc.peek_number()) {
                    p.qualifier = Proposition::Qualifier::Scalar;
                    p.alpha = grade(sc, "credibility");
                } else {
                    std::size_t lcol = sc.pos();
                    std::string lname = sc.ident("linguistic value name");
                    if (!doc_.granules.contains(lname)) {
                        sc.fail_at(lcol, "unknown linguistic value '" + lname + "'");
                    }
                    p.qualifier = Proposition::Qualifier::Linguistic;
                    p.linguistic = lname;
                }
            } else if (kw == "relcred") {
                if (have_qualifier) sc.fail_at(kcol, "duplicate credibility clause");
                if (have_priority) sc.fail_at(kcol, "priority already given");
                have_qualifier = have_priority = true;
                p.qualifier = Proposition::Qualifier::Relative;
                sc.keyword("priority");
                std::size_t pcol = sc.pos();
                p.priority = sc.integer("priority");
                if (p.priority < 2) {
                    sc.fail_at(pcol, "relative credibility needs priority >= 2");
                }
                p.g = parse_g(sc);
            } else if (kw == "conorm") {
                if (have_model) sc.fail_at(kcol, "duplicate model clause");
                have_model = true;
                p.model = DiscountModel::conorm(parse_conorm(sc));
            } else if (kw == "model") {
                if (have_model) sc.fail_at(kcol, "duplicate model clause");
                have_model = true;
                sc.keyword("exp");
                p.model = DiscountModel::exponential();
            } else if (kw == "priority") {
                if (have_priority) sc.fail_at(kcol, "duplicate priority clause");
                have_priority = true;
                std::size_t pcol = sc.pos();
                p.priority = sc.integer("priority");
                if (p.priority < 1) sc.fail_at(pcol, "priority must be >= 1");
            } else {
                sc.fail_at(kcol, "unknown clause '" + kw + "'");
            }
        }
        declare(sc, col, name, NameKind::Prop);
        if (prop_universe_.empty()) prop_universe_ = set_universe_.at(sname);
        doc_.propositions.push_back(std::move(p));
    }

    GTransform parse_g(LineScanner& sc) {
        if (sc.at_end() || !sc.peek_ident()) return GTransform::identity();
        std::size_t gcol = sc.pos();
        std::string kw = sc.ident("clause keyword");
        if (kw != "g") {
            sc.seek(gcol);  // some other clause follows; leave it to the caller
            return GTransform::identity();
        }
        std::size_t col = sc.pos();
        std::string tag = sc.ident("transform name");
        if (tag == "identity") return GTransform::identity();
        sc.expect_char('(');
        auto [v, vcol] = sc.number("transform parameter");
        sc.expect_char(')');
        if (tag == "const") {
            if (!(v >= 0.0 && v <= 1.0)) sc.fail_at(vcol, "grade outside [0,1]");
            return GTransform::constant(v);
        }
        if (tag == "power") {
            if (!(v > 0.0)) sc.fail_at(vcol, "power transform needs q > 0");
            return GTransform::power(v);
        }
        if (tag == "cap") {
            if (!(v >= 0.0 && v <= 1.0)) sc.fail_at(vcol, "grade outside [0,1]");
            return GTransform::cap(v);
        }
        sc.fail_at(col, "unknown transform '" + tag + "'");
    }

    Conorm parse_conorm(LineScanner& sc) {
        std::size_t col = sc.pos();
        std::string tag = sc.ident("conorm name");
        if (tag == "max") return Conorm::Max;
        if (tag == "probsum") return Conorm::ProbSum;
        if (tag == "bounded") return Conorm::Bounded;
        sc.fail_at(col, "unknown conorm '" + tag + "'");
    }

    void parse_belief(LineScanner& sc) {
        std::size_t col = sc.pos();
        std::string name = sc.ident("belief name");
        sc.expect_char('=');
        sc.keyword("support");
        std::size_t scol = sc.pos();
        std::string sname = sc.ident("set name");
        if (!doc_.find_set(sname)) sc.fail_at(scol, "unknown set '" + sname + "'");
        sc.keyword("mass");
        double mass = grade(sc, "mass");
        sc.expect_end();
        declare(sc, col, name, NameKind::Belief);
        doc_.beliefs.push_back({name, sname, mass});
    }

    void parse_query(LineScanner& sc) {
        std::size_t col = sc.pos();
        std::string kw = sc.ident("query kind");
        Query q;
        if (kw == "dist") {
            q.kind = Query::Kind::Dist;
            sc.expect_end();
            doc_.queries.push_back(std::move(q));
            return;
        }
        if (kw == "poss") q.kind = Query::Kind::Poss;
        else if (kw == "cert") q.kind = Query::Kind::Cert;
        else if (kw == "entails") q.kind = Query::Kind::Entails;
        else if (kw == "pl") q.kind = Query::Kind::Pl;
        else if (kw == "bel") q.kind = Query::Kind::Bel;
        else sc.fail_at(col, "unknown query kind '" + kw + "'");

        std::size_t scol = sc.pos();
        q.set_name = sc.ident("set name");
        if (!doc_.find_set(q.set_name)) sc.fail_at(scol, "unknown set '" + q.set_name + "'");
        if (q.kind == Query::Kind::Pl || q.kind == Query::Kind::Bel) {
            sc.keyword("under");
            std::size_t bcol = sc.pos();
            q.belief_name = sc.ident("belief name");
            if (!doc_.find_belief(q.belief_name)) {
                sc.fail_at(bcol, "unknown belief structure '" + q.belief_name + "'");
            }
            if (!sc.at_end()) {
                sc.keyword("method");
                std::size_t mcol = sc.pos();
                std::string m = sc.ident("method name");
                if (m == "weighted") q.method = BeliefMethod::Weighted;
                else if (m == "contour") q.method = BeliefMethod::Contour;
                else sc.fail_at(mcol, "unknown method '" + m + "'");
            }
        }
        sc.expect_end();
        doc_.queries.push_back(std::move(q));
    }

    KnowledgeBaseDoc doc_;
    std::map<std::string, NameKind> names_;
    std::map<std::string, std::shared_ptr<Universe>> universes_;
    std::map<std::string, std::string> set_universe_;
    std::string prop_universe_;
    std::map<std::tuple<std::string, std::size_t, std::size_t>, double> prox_seen_;
};

}  // namespace

KnowledgeBaseDoc parse_kb(std::string_view text) { return Parser().parse(text); }

}  // namespace credal
