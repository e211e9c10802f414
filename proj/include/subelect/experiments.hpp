#pragma once

// Similarity matrices between cultures, solver timing sweeps and the
// identical-votes statistic.

#include <cstdint>
#include <filesystem>
#include <ostream>
#include <string>
#include <vector>

#include "subelect/cultures.hpp"

namespace subelect {

struct CellStats {
  double mean = 0.0;
  double stddev = 0.0;  // population
  int pairs = 0;
  bool operator==(const CellStats&) const = default;
};

// Fraction of voters in a maximum common voter subelection, per ordered
// pair of models. Symmetric by construction.
class SimilarityMatrix {
 public:
  SimilarityMatrix(std::vector<Culture> models, int m, int n);

  const std::vector<Culture>& models() const { return models_; }
  int size() const { return static_cast<int>(models_.size()); }
  int m() const { return m_; }
  int n() const { return n_; }
  const CellStats& cell(int a, int b) const { return cells_[static_cast<std::size_t>(a) * size() + b]; }
  CellStats& cell(int a, int b) { return cells_[static_cast<std::size_t>(a) * size() + b]; }

  friend bool operator==(const SimilarityMatrix&, const SimilarityMatrix&) = default;

 private:
  std::vector<Culture> models_;
  int m_, n_;
  std::vector<CellStats> cells_;
};

enum class MatrixSolver { Poly, IlpExport };

struct MatrixOptions {
  std::vector<Culture> models;
  int m = 10;
  int n = 50;
  int pairs = 100;
  std::uint64_t seed = 0;
  int jobs = 0;  // 0 = hardware concurrency
  MatrixSolver solver = MatrixSolver::Poly;
  // With IlpExport, every sampled pair's model is written here as
  // <a>-<b>-<pair>.lp (model indices in the roster); values still come
  // from the polynomial solver.
  std::filesystem::path ilp_dir;
};

// Each election pair depends only on (seed, the two model labels, pair
// index), so cells do not change when the roster is reordered or extended.
SimilarityMatrix run_similarity_matrix(const MatrixOptions& options);

// Per-pair election seeds used by run_similarity_matrix; side is 0 or 1.
std::uint64_t pair_seed(std::uint64_t seed, const Culture& a, const Culture& b, int pair, int side);

void write_matrix_csv(const SimilarityMatrix& matrix, std::ostream& out);
void render_svg_heatmap(const SimilarityMatrix& matrix, std::ostream& out);

struct TimingOptions {
  std::vector<Culture> models;
  bool vary_voters = true;  // vary n at fixed m, or m at fixed n
  int fixed = 10;
  int from = 5, to = 50, step = 5;
  int pairs = 50;
  std::uint64_t seed = 0;
};

struct TimingRow {
  Culture model;
  int m = 0;
  int n = 0;
  int pairs = 0;
  double mean_seconds = 0.0;
};

// Mean wall time of max_common_voter_subelection (no matchings) on pairs of
// elections drawn from the same model. Sampling is not timed.
std::vector<TimingRow> run_timing(const TimingOptions& options);
void write_timing_csv(const std::vector<TimingRow>& rows, std::ostream& out);

struct MeanStd {
  double mean = 0.0;
  double stddev = 0.0;
  bool operator==(const MeanStd&) const = default;
};

// Statistics of most_frequent_vote_count / n over `samples` elections
// drawn with seeds derived from spec.seed.
MeanStd identical_votes_stat(const CultureSpec& spec, int samples);

// Population mean and standard deviation, summed in the given order.
MeanStd mean_and_stddev(const std::vector<double>& xs);

}  // namespace subelect
