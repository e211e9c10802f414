#include "subelect/io.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <optional>
#include <sstream>

namespace subelect {

ParseError::ParseError(int line, int column, const std::string& message, const std::string& source)
    : std::runtime_error((source.empty() ? "" : source + ":") + std::to_string(line) + ":" + std::to_string(column) +
                         ": " + message),
      line_(line),
      column_(column),
      message_(message) {}

namespace {

// Walks a single line, tracking the 1-based column for error messages.
class LineCursor {
 public:
  LineCursor(std::string_view line, int number) : line_(line), number_(number) {}

  void skip_blanks() {
    while (pos_ < line_.size() && (line_[pos_] == ' ' || line_[pos_] == '\t' || line_[pos_] == '\r')) ++pos_;
  }
  bool at_end() {
    skip_blanks();
    return pos_ >= line_.size();
  }
  bool accept(char c) {
    skip_blanks();
    if (pos_ < line_.size() && line_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }
  long long integer(const char* what) {
    skip_blanks();
    long long x = 0;
    const char* first = line_.data() + pos_;
    const char* last = line_.data() + line_.size();
    auto res = std::from_chars(first, last, x);
    if (res.ec != std::errc() || first == res.ptr) fail(std::string("expected ") + what);
    pos_ += static_cast<std::size_t>(res.ptr - first);
    // Reject trailing garbage glued to the number, e.g. "3x".
    if (pos_ < line_.size() && (std::isalnum(static_cast<unsigned char>(line_[pos_])) || line_[pos_] == '.'))
      fail(std::string("unknown token in ") + what);
    return x;
  }
  [[noreturn]] void fail(const std::string& message) const { fail_at(column(), message); }
  [[noreturn]] void fail_at(int column, const std::string& message) const {
    throw ParseError(number_, column, message);
  }
  int column() const { return static_cast<int>(pos_) + 1; }

 private:
  std::string_view line_;
  int number_;
  std::size_t pos_ = 0;
};

template <class F>
void for_each_line(std::string_view text, F&& f) {
  std::size_t start = 0;
  int number = 0;
  while (start < text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    f(text.substr(start, end - start), ++number);
    start = end + 1;
  }
}

bool is_blank(std::string_view line) {
  for (char c : line)
    if (!std::isspace(static_cast<unsigned char>(c))) return false;
  return true;
}

std::optional<int> metadata_alternatives(std::string_view line, int number) {
  constexpr std::string_view key = "# NUMBER ALTERNATIVES:";
  if (!line.starts_with(key)) return std::nullopt;
  LineCursor cur(line.substr(key.size()), number);
  const long long m = cur.integer("number of alternatives");
  if (m < 1 || m > 1'000'000) throw ParseError(number, static_cast<int>(key.size()) + 1, "bad candidate count");
  return static_cast<int>(m);
}

}  // namespace

Election parse_election(std::string_view text) {
  std::optional<int> m, declared;
  std::vector<Vote> votes;
  int last_line = 0;
  for_each_line(text, [&](std::string_view line, int number) {
    last_line = number;
    if (line.starts_with('#')) {
      if (auto a = metadata_alternatives(line, number)) {
        if (declared && *declared != *a) throw ParseError(number, 1, "conflicting candidate counts");
        declared = a;
      }
      return;
    }
    if (is_blank(line)) return;
    LineCursor cur(line, number);
    if (!m) {
      if (line.find(':') == std::string_view::npos) {
        const long long count = cur.integer("candidate count");
        if (count < 1 || count > 1'000'000) cur.fail_at(1, "bad candidate count");
        if (!cur.at_end()) cur.fail("unknown token after candidate count");
        if (declared && *declared != count) cur.fail_at(1, "candidate count disagrees with NUMBER ALTERNATIVES");
        m = static_cast<int>(count);
        return;
      }
      if (!declared) cur.fail_at(1, "missing candidate count line");
      m = declared;
    }
    const int column = cur.column();
    const long long count = cur.integer("vote count");
    if (count < 1 || count > 100'000'000) cur.fail_at(column, "bad vote count");
    cur.expect(':');
    Vote vote;
    std::vector<char> seen(static_cast<std::size_t>(*m), 0);
    do {
      const int at = (cur.skip_blanks(), cur.column());
      const long long c = cur.integer("candidate");
      if (c < 1 || c > *m) cur.fail_at(at, "unknown candidate " + std::to_string(c));
      if (seen[c - 1]) cur.fail_at(at, "repeated candidate " + std::to_string(c));
      seen[c - 1] = 1;
      vote.push_back(static_cast<Candidate>(c - 1));
    } while (cur.accept(','));
    if (!cur.at_end()) cur.fail("unknown token");
    if (static_cast<int>(vote.size()) != *m)
      cur.fail("vote ranks " + std::to_string(vote.size()) + " of " + std::to_string(*m) + " candidates");
    for (long long i = 0; i < count; ++i) votes.push_back(vote);
  });
  if (votes.empty()) throw ParseError(last_line + 1, 1, "no votes");
  return Election(*m, std::move(votes));
}

std::string write_election(const Election& e) {
  std::ostringstream out;
  const int m = e.num_candidates(), n = e.num_voters();
  out << "# NUMBER ALTERNATIVES: " << m << '\n';
  out << "# NUMBER VOTERS: " << n << '\n';
  out << m << '\n';
  for (int i = 0; i < n;) {
    int j = i + 1;
    while (j < n && e.vote(j) == e.vote(i)) ++j;
    out << (j - i) << ": ";
    for (int p = 0; p < m; ++p) out << (p ? "," : "") << e.vote(i)[p] + 1;
    out << '\n';
    i = j;
  }
  return out.str();
}

Graph parse_graph(std::string_view text) {
  std::optional<int> declared;
  std::vector<std::pair<int, int>> edges;
  int max_vertex = -1;
  for_each_line(text, [&](std::string_view line, int number) {
    constexpr std::string_view key = "# vertices";
    if (line.starts_with(key)) {
      LineCursor cur(line.substr(key.size()), number);
      const long long n = cur.integer("vertex count");
      if (n < 0 || n > 1'000'000) throw ParseError(number, 1, "bad vertex count");
      declared = static_cast<int>(n);
      return;
    }
    if (line.starts_with('#') || is_blank(line)) return;
    LineCursor cur(line, number);
    const long long a = cur.integer("vertex");
    const long long b = cur.integer("vertex");
    if (!cur.at_end()) cur.fail("unknown token");
    if (a < 0 || b < 0 || a > 1'000'000 || b > 1'000'000) cur.fail_at(1, "vertex index out of range");
    if (a == b) cur.fail_at(1, "self-loop");
    edges.emplace_back(static_cast<int>(a), static_cast<int>(b));
    max_vertex = std::max<int>(max_vertex, static_cast<int>(std::max(a, b)));
  });
  const int n = declared ? *declared : max_vertex + 1;
  if (max_vertex >= n) throw ParseError(1, 1, "edge endpoint exceeds declared vertex count");
  Graph g(n);
  for (auto [a, b] : edges) g.add_edge(a, b);
  return g;
}

std::string write_graph(const Graph& g) {
  std::ostringstream out;
  out << "# vertices " << g.num_vertices() << '\n';
  for (auto [a, b] : g.edges()) out << a << ' ' << b << '\n';
  return out.str();
}

std::vector<std::pair<int, int>> parse_pairs(std::string_view text) {
  std::vector<std::pair<int, int>> pairs;
  for_each_line(text, [&](std::string_view line, int number) {
    if (line.starts_with('#') || is_blank(line)) return;
    LineCursor cur(line, number);
    const long long a = cur.integer("index");
    const long long b = cur.integer("index");
    if (!cur.at_end()) cur.fail("unknown token");
    if (a < 0 || b < 0 || a > 100'000'000 || b > 100'000'000) cur.fail_at(1, "index out of range");
    pairs.emplace_back(static_cast<int>(a), static_cast<int>(b));
  });
  return pairs;
}

std::string write_pairs(const std::vector<std::pair<int, int>>& pairs) {
  std::ostringstream out;
  for (auto [a, b] : pairs) out << a << ' ' << b << '\n';
  return out.str();
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw std::runtime_error("cannot read " + path.string());
  return buf.str();
}

void write_text_file(const std::filesystem::path& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot create " + path.string());
  out.write(text.data(), static_cast<std::streamsize>(text.size()));
  out.flush();
  if (!out) throw std::runtime_error("cannot write " + path.string());
}

namespace {

template <class F>
auto parse_file(const std::filesystem::path& path, F&& parse) {
  const std::string text = read_text_file(path);
  try {
    return parse(text);
  } catch (const ParseError& e) {
    throw ParseError(e.line(), e.column(), e.message(), path.string());
  }
}

}  // namespace

Election read_election_file(const std::filesystem::path& path) {
  return parse_file(path, [](std::string_view t) { return parse_election(t); });
}

Graph read_graph_file(const std::filesystem::path& path) {
  return parse_file(path, [](std::string_view t) { return parse_graph(t); });
}

std::vector<std::pair<int, int>> read_pairs_file(const std::filesystem::path& path) {
  return parse_file(path, [](std::string_view t) { return parse_pairs(t); });
}

}  // namespace subelect
