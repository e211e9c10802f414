#pragma once

// Integer program for maximum common voter subelection without matchings.
// N_v_u = 1 when voter v of E1 is matched to voter u of E2; M_c_d = 1 when
// candidate c of E1 is mapped to candidate d of E2 (M is a permutation).

#include <cstdint>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "subelect/core.hpp"

namespace subelect {

enum class Sense { LessEqual, Equal, GreaterEqual };

struct LinearTerm {
  int variable;
  int coefficient;
};

struct LinearConstraint {
  std::string name;
  std::vector<LinearTerm> terms;  // sorted by variable index
  Sense sense;
  int rhs;
};

class IlpModel {
 public:
  int n1() const { return n1_; }
  int n2() const { return n2_; }
  int m() const { return m_; }

  int num_n_variables() const { return n1_ * n2_; }
  int num_m_variables() const { return m_ * m_; }
  int num_variables() const { return num_n_variables() + num_m_variables(); }

  // N variables come first (row-major in v, u), then M (row-major in c, d).
  int n_var(int v, int u) const { return v * n2_ + u; }
  int m_var(int c, int d) const { return num_n_variables() + c * m_ + d; }
  std::string variable_name(int index) const;

  // 1 iff voter v ranks c at the same position as voter u ranks d.
  bool w(int v, int u, int c, int d) const;

  // Rows in order: one per v (sum_u N <= 1), one per u (sum_v N <= 1), one
  // per c (sum_d M = 1), one per d (sum_c M = 1), then one coupling row per
  // (v, u) in row-major order: sum_{c,d} w * M_c_d - m * N_v_u >= 0.
  const std::vector<LinearConstraint>& constraints() const { return constraints_; }

 private:
  friend IlpModel build_ilp(const Election& e1, const Election& e2);
  int n1_ = 0, n2_ = 0, m_ = 0;
  std::vector<int> pos1_, pos2_;  // positions, voter-major
  std::vector<LinearConstraint> constraints_;
};

// Throws std::invalid_argument if the candidate counts differ.
IlpModel build_ilp(const Election& e1, const Election& e2);

// LP-format text: Maximize / Subject To / Binary / End. Long rows are
// wrapped onto indented continuation lines.
void write_lp(const IlpModel& model, std::ostream& out);
std::string lp_text(const IlpModel& model);

// Counts recovered from LP text; enough to check a round trip.
struct LpSummary {
  int objective_terms = 0;
  int constraints = 0;
  int binaries = 0;
};
// Throws std::invalid_argument on text that lacks the expected sections.
LpSummary parse_lp_summary(std::string_view text);

// 0/1 values for the N block and the M block (same layout as above).
struct IlpAssignment {
  std::vector<int> n_values;
  std::vector<int> m_values;
};

// Objective if every row holds, otherwise nullopt. Throws
// std::invalid_argument if a block has the wrong length or a value is not
// 0 or 1.
std::optional<std::int64_t> verify_ilp_assignment(const IlpModel& model, const IlpAssignment& a);

// Encodes a voter-subelection witness. Candidates left unmatched by the
// witness are completed to a permutation in increasing order.
IlpAssignment assignment_from_witness(const IlpModel& model, const IsoWitness& w);

}  // namespace subelect
