#include "subelect/ilp.hpp"

#include <sstream>
#include <stdexcept>

namespace subelect {

std::string IlpModel::variable_name(int index) const {
  if (index < num_n_variables())
    return "N_" + std::to_string(index / n2_) + "_" + std::to_string(index % n2_);
  index -= num_n_variables();
  return "M_" + std::to_string(index / m_) + "_" + std::to_string(index % m_);
}

bool IlpModel::w(int v, int u, int c, int d) const {
  return pos1_[static_cast<std::size_t>(v) * m_ + c] == pos2_[static_cast<std::size_t>(u) * m_ + d];
}

IlpModel build_ilp(const Election& e1, const Election& e2) {
  if (e1.num_candidates() != e2.num_candidates())
    throw std::invalid_argument("build_ilp: elections have different numbers of candidates");
  IlpModel model;
  model.n1_ = e1.num_voters();
  model.n2_ = e2.num_voters();
  model.m_ = e1.num_candidates();
  const int n1 = model.n1_, n2 = model.n2_, m = model.m_;
  for (int v = 0; v < n1; ++v)
    for (int p : e1.positions(v)) model.pos1_.push_back(p);
  for (int u = 0; u < n2; ++u)
    for (int p : e2.positions(u)) model.pos2_.push_back(p);

  auto& rows = model.constraints_;
  for (int v = 0; v < n1; ++v) {
    LinearConstraint row{"v_" + std::to_string(v), {}, Sense::LessEqual, 1};
    for (int u = 0; u < n2; ++u) row.terms.push_back({model.n_var(v, u), 1});
    rows.push_back(std::move(row));
  }
  for (int u = 0; u < n2; ++u) {
    LinearConstraint row{"u_" + std::to_string(u), {}, Sense::LessEqual, 1};
    for (int v = 0; v < n1; ++v) row.terms.push_back({model.n_var(v, u), 1});
    rows.push_back(std::move(row));
  }
  for (int c = 0; c < m; ++c) {
    LinearConstraint row{"c_" + std::to_string(c), {}, Sense::Equal, 1};
    for (int d = 0; d < m; ++d) row.terms.push_back({model.m_var(c, d), 1});
    rows.push_back(std::move(row));
  }
  for (int d = 0; d < m; ++d) {
    LinearConstraint row{"d_" + std::to_string(d), {}, Sense::Equal, 1};
    for (int c = 0; c < m; ++c) row.terms.push_back({model.m_var(c, d), 1});
    rows.push_back(std::move(row));
  }
  for (int v = 0; v < n1; ++v) {
    for (int u = 0; u < n2; ++u) {
      LinearConstraint row{"w_" + std::to_string(v) + "_" + std::to_string(u), {}, Sense::GreaterEqual, 0};
      row.terms.push_back({model.n_var(v, u), -m});
      for (int c = 0; c < m; ++c)
        for (int d = 0; d < m; ++d)
          if (model.w(v, u, c, d)) row.terms.push_back({model.m_var(c, d), 1});
      rows.push_back(std::move(row));
    }
  }
  return model;
}

namespace {

constexpr std::size_t kLineWidth = 78;

// Appends " + 3 X" style terms, wrapping long rows.
class RowWriter {
 public:
  RowWriter(std::ostream& out, std::string head) : out_(out), line_(std::move(head)) {}

  void term(int coefficient, const std::string& name, bool first) {
    std::string piece;
    if (coefficient < 0) {
      piece = first ? "-" : " - ";
    } else if (!first) {
      piece = " + ";
    }
    const int magnitude = coefficient < 0 ? -coefficient : coefficient;
    if (magnitude != 1) piece += std::to_string(magnitude) + " ";
    piece += name;
    append(piece);
  }

  void append(const std::string& piece) {
    if (line_.size() + piece.size() > kLineWidth && line_.find_first_not_of(' ') != std::string::npos) {
      out_ << line_ << '\n';
      line_ = "   ";
      // A continuation starts with the operator; drop the separating blank.
      line_ += piece.front() == ' ' ? piece.substr(1) : piece;
      return;
    }
    line_ += piece;
  }

  void finish() { out_ << line_ << '\n'; }

 private:
  std::ostream& out_;
  std::string line_;
};

}  // namespace

void write_lp(const IlpModel& model, std::ostream& out) {
  out << "\\ Maximum common voter subelection: " << model.n1() << " x " << model.n2() << " voters, " << model.m()
      << " candidates\n";
  out << "Maximize\n";
  {
    RowWriter row(out, " obj: ");
    for (int i = 0; i < model.num_n_variables(); ++i) row.term(1, model.variable_name(i), i == 0);
    if (model.num_n_variables() == 0) row.append("0");
    row.finish();
  }
  out << "Subject To\n";
  for (const auto& c : model.constraints()) {
    RowWriter row(out, " " + c.name + ": ");
    bool first = true;
    for (const auto& t : c.terms) {
      row.term(t.coefficient, model.variable_name(t.variable), first);
      first = false;
    }
    const char* op = c.sense == Sense::LessEqual ? " <= " : c.sense == Sense::Equal ? " = " : " >= ";
    row.append(op + std::to_string(c.rhs));
    row.finish();
  }
  out << "Binary\n";
  {
    RowWriter row(out, " ");
    for (int i = 0; i < model.num_variables(); ++i) row.append((i == 0 ? "" : " ") + model.variable_name(i));
    row.finish();
  }
  out << "End\n";
  if (!out) throw std::runtime_error("write_lp: write failed");
}

std::string lp_text(const IlpModel& model) {
  std::ostringstream out;
  write_lp(model, out);
  return out.str();
}

LpSummary parse_lp_summary(std::string_view text) {
  enum class Section { Preamble, Objective, Constraints, Binary, End } section = Section::Preamble;
  LpSummary s;
  bool saw_objective = false, saw_constraints = false, saw_binary = false, saw_end = false;
  auto count_variables = [](std::string_view line) {
    int count = 0;
    std::size_t i = 0;
    while (i < line.size()) {
      while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
      std::size_t j = i;
      while (j < line.size() && line[j] != ' ' && line[j] != '\t') ++j;
      const std::string_view token = line.substr(i, j - i);
      if (token.size() > 2 && (token[0] == 'N' || token[0] == 'M') && token[1] == '_') ++count;
      i = j;
    }
    return count;
  };
  std::size_t start = 0;
  while (start < text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    start = end + 1;
    if (line.empty() || line.front() == '\\') continue;
    if (line == "Maximize") {
      section = Section::Objective;
      saw_objective = true;
      continue;
    }
    if (line == "Subject To") {
      section = Section::Constraints;
      saw_constraints = true;
      continue;
    }
    if (line == "Binary") {
      section = Section::Binary;
      saw_binary = true;
      continue;
    }
    if (line == "End") {
      section = Section::End;
      saw_end = true;
      continue;
    }
    std::string_view body = line;
    if (auto colon = line.find(':'); colon != std::string_view::npos) {
      if (section == Section::Constraints) ++s.constraints;
      body = line.substr(colon + 1);
    }
    switch (section) {
      case Section::Objective:
        s.objective_terms += count_variables(body);
        break;
      case Section::Binary:
        s.binaries += count_variables(body);
        break;
      case Section::Constraints:
        break;
      case Section::Preamble:
      case Section::End:
        throw std::invalid_argument("parse_lp_summary: text outside a section");
    }
  }
  if (!saw_objective || !saw_constraints || !saw_binary || !saw_end)
    throw std::invalid_argument("parse_lp_summary: missing section");
  return s;
}

std::optional<std::int64_t> verify_ilp_assignment(const IlpModel& model, const IlpAssignment& a) {
  if (static_cast<int>(a.n_values.size()) != model.num_n_variables() ||
      static_cast<int>(a.m_values.size()) != model.num_m_variables())
    throw std::invalid_argument("verify_ilp_assignment: missing variable values");
  for (int x : a.n_values)
    if (x != 0 && x != 1) throw std::invalid_argument("verify_ilp_assignment: N values must be 0 or 1");
  for (int x : a.m_values)
    if (x != 0 && x != 1) throw std::invalid_argument("verify_ilp_assignment: M values must be 0 or 1");
  auto value = [&](int var) {
    return var < model.num_n_variables() ? a.n_values[var] : a.m_values[var - model.num_n_variables()];
  };
  for (const auto& row : model.constraints()) {
    std::int64_t lhs = 0;
    for (const auto& t : row.terms) lhs += static_cast<std::int64_t>(t.coefficient) * value(t.variable);
    const bool ok = row.sense == Sense::LessEqual ? lhs <= row.rhs
                    : row.sense == Sense::Equal   ? lhs == row.rhs
                                                  : lhs >= row.rhs;
    if (!ok) return std::nullopt;
  }
  std::int64_t objective = 0;
  for (int x : a.n_values) objective += x;
  return objective;
}

IlpAssignment assignment_from_witness(const IlpModel& model, const IsoWitness& w) {
  const int m = model.m();
  IlpAssignment a;
  a.n_values.assign(static_cast<std::size_t>(model.num_n_variables()), 0);
  a.m_values.assign(static_cast<std::size_t>(model.num_m_variables()), 0);
  for (auto [v, u] : w.pi.pairs()) {
    if (v < 0 || v >= model.n1() || u < 0 || u >= model.n2())
      throw std::invalid_argument("assignment_from_witness: voter index out of range");
    a.n_values[static_cast<std::size_t>(model.n_var(v, u))] = 1;
  }
  std::vector<int> image = w.sigma.forward(m);
  std::vector<char> used(static_cast<std::size_t>(m), 0);
  for (int d : image)
    if (d >= 0) used[d] = 1;
  int next = 0;
  for (int c = 0; c < m; ++c) {
    if (image[c] < 0) {
      while (used[next]) ++next;
      image[c] = next;
      used[next] = 1;
    }
    a.m_values[static_cast<std::size_t>(model.m_var(c, image[c]) - model.num_n_variables())] = 1;
  }
  return a;
}

}  // namespace subelect
