#pragma once

// Text formats.
//
// Elections (.soc): lines starting with '#' are comments; the first other
// line is the number of candidates m; every following line is a vote group
// "count: c1,c2,...,cm" with candidates numbered 1..m. A file without the
// count line is accepted if a "# NUMBER ALTERNATIVES: m" comment precedes
// the votes.
//
// Graphs: one "u v" edge per line, 0-based. "# vertices N" fixes the
// vertex count; otherwise it is one more than the largest endpoint.
//
// Matchings: one "left right" pair per line, 0-based.

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>

#include "subelect/core.hpp"
#include "subelect/graph.hpp"

namespace subelect {

class ParseError : public std::runtime_error {
 public:
  // what() reads "[source:]line:column: message".
  ParseError(int line, int column, const std::string& message, const std::string& source = "");
  int line() const { return line_; }
  int column() const { return column_; }
  const std::string& message() const { return message_; }

 private:
  int line_, column_;
  std::string message_;
};

Election parse_election(std::string_view text);
// Consecutive identical votes are grouped, so voter order is preserved.
std::string write_election(const Election& e);

Graph parse_graph(std::string_view text);
std::string write_graph(const Graph& g);

// Both matching types share one format.
std::vector<std::pair<int, int>> parse_pairs(std::string_view text);
std::string write_pairs(const std::vector<std::pair<int, int>>& pairs);

// File helpers; they throw std::runtime_error on I/O failure and prefix
// ParseError messages with the path.
std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, std::string_view text);
Election read_election_file(const std::filesystem::path& path);
Graph read_graph_file(const std::filesystem::path& path);
std::vector<std::pair<int, int>> read_pairs_file(const std::filesystem::path& path);

}  // namespace subelect
