#pragma once

#include <istream>
#include <stdexcept>
#include <string>
#include <vector>

#include "fct/configuration.h"
#include "fct/dispatch.h"
#include "fct/graph.h"
#include "fct/rules.h"

namespace fct {

/// Malformed or invalid input. line is 0 when the problem is not tied to one.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, int line = 0, std::string record = {})
        : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what : what),
          line(line), record(std::move(record)) {}
    int line;
    std::string record;
};

/// `<id> : <n1> <n2> ... ;` per vertex, ids 1..n, neighbours clockwise.
Graph parse_graph(std::istream& in);
std::string emit_graph(const Graph& g);

/// Records `config` / `ring` / `internal` / vertex lines / `end`. The ring is
/// 1..R clockwise and only internal vertices are listed.
std::vector<Configuration> parse_configs(std::istream& in);
std::string emit_config(const Configuration& k);
std::string emit_configs(const std::vector<Configuration>& ks);

/// Rules are validated and laid onto parts for hub degrees 5..11. Values of q
/// other than 1 and 2 are legal but reported through warnings.
RuleSet parse_rules(std::istream& in, std::vector<std::string>* warnings = nullptr);
std::string emit_rule(const Rule& r);
std::string emit_rules(const RuleSet& rs);

/// `L<depth> ...` lines for one hub degree; depths and hubcaps are checked
/// while parsing.
Presentation parse_presentation(std::istream& in, int degree);
std::string emit_presentation(const Presentation& p);

/// Reads a whole file; throws ParseError when it cannot be opened.
std::string read_file(const std::string& path);

}  // namespace fct
