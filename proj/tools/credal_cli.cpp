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

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "credal/kb.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitEvalError = 1;
constexpr int kExitParseError = 2;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open file: " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

int check(const std::string& path) {
    try {
        credal::parse_kb(read_file(path));
    } catch (const credal::ParseError& e) {
        std::cerr << path << ": parse error at " << e.what() << "\n";
        return kExitParseError;
    } catch (const std::exception& e) {
        std::cerr << path << ": " << e.what() << "\n";
        return kExitEvalError;
    }
    std::cout << path << ": ok\n";
    return kExitOk;
}

int run(const std::string& path, const std::string& format, int precision) {
    credal::KnowledgeBaseDoc doc;
    try {
        doc = credal::parse_kb(read_file(path));
    } catch (const credal::ParseError& e) {
        std::cerr << path << ": parse error at " << e.what() << "\n";
        return kExitParseError;
    } catch (const std::exception& e) {
        std::cerr << path << ": " << e.what() << "\n";
        return kExitEvalError;
    }
    try {
        auto results = credal::evaluate(doc);
        auto fmt = format == "json" ? credal::RenderFormat::Json : credal::RenderFormat::Text;
        std::cout << credal::render(results, fmt, precision);
    } catch (const std::exception& e) {
        std::cerr << path << ": " << e.what() << "\n";
        return kExitEvalError;
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Approximate-reasoning engine with credibility discounting"};
    app.require_subcommand(1);

    std::string path;
    std::string format = "text";
    int precision = 6;

    auto* check_cmd = app.add_subcommand("check", "Validate a knowledge-base file");
    check_cmd->add_option("file", path, "knowledge-base file")->required();

    auto* run_cmd = app.add_subcommand("run", "Evaluate the queries of a knowledge-base file");
    run_cmd->add_option("file", path, "knowledge-base file")->required();
    run_cmd->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"text", "json"}));
    run_cmd->add_option("--precision", precision, "decimals in rendered numbers")
        ->check(CLI::Range(0, 17));

    CLI11_PARSE(app, argc, argv);

    if (app.got_subcommand(check_cmd)) return check(path);
    return run(path, format, precision);
}
