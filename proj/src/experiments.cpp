#include "subelect/experiments.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <exception>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "subelect/ilp.hpp"
#include "subelect/io.hpp"
#include "subelect/iso.hpp"

namespace subelect {

SimilarityMatrix::SimilarityMatrix(std::vector<Culture> models, int m, int n)
    : models_(std::move(models)), m_(m), n_(n), cells_(models_.size() * models_.size()) {}

MeanStd mean_and_stddev(const std::vector<double>& xs) {
  if (xs.empty()) return {};
  double sum = 0;
  for (double x : xs) sum += x;
  const double mean = sum / static_cast<double>(xs.size());
  double sq = 0;
  for (double x : xs) sq += (x - mean) * (x - mean);
  return {mean, std::sqrt(sq / static_cast<double>(xs.size()))};
}

namespace {

std::uint64_t fnv1a(std::string_view s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::string shortest(double x) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

// Runs task(i) for i in [0, count) on `jobs` threads; rethrows the first
// exception after all workers stop.
template <class Task>
void parallel_for(int count, int jobs, Task&& task) {
  if (jobs <= 0) jobs = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  jobs = std::min(jobs, std::max(count, 1));
  std::atomic<int> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto worker = [&] {
    while (true) {
      const int i = next.fetch_add(1);
      if (i >= count) return;
      try {
        task(i);
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error) error = std::current_exception();
        next = count;
      }
    }
  };
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (int j = 0; j < jobs; ++j) pool.emplace_back(worker);
  }
  if (error) std::rethrow_exception(error);
}

}  // namespace

std::uint64_t pair_seed(std::uint64_t seed, const Culture& a, const Culture& b, int pair, int side) {
  // The label pair is ordered so that (a, b) and (b, a) share elections.
  std::string la = to_string(a), lb = to_string(b);
  if (lb < la) {
    std::swap(la, lb);
    side = 1 - side;
  }
  return derive_seed(seed, fnv1a(la + "|" + lb), static_cast<std::uint64_t>(pair), static_cast<std::uint64_t>(side));
}

SimilarityMatrix run_similarity_matrix(const MatrixOptions& o) {
  if (o.models.empty()) throw std::invalid_argument("run_similarity_matrix: no models");
  if (o.pairs < 1 || o.m < 1 || o.n < 1) throw std::invalid_argument("run_similarity_matrix: bad sizes");
  const int k = static_cast<int>(o.models.size());
  std::vector<std::pair<int, int>> cells;
  for (int a = 0; a < k; ++a)
    for (int b = a; b < k; ++b) cells.emplace_back(a, b);
  const int tasks = static_cast<int>(cells.size()) * o.pairs;
  std::vector<double> fraction(static_cast<std::size_t>(tasks));

  if (o.solver == MatrixSolver::IlpExport) std::filesystem::create_directories(o.ilp_dir);

  parallel_for(tasks, o.jobs, [&](int t) {
    const auto [a, b] = cells[static_cast<std::size_t>(t / o.pairs)];
    const int p = t % o.pairs;
    const Culture& ca = o.models[a];
    const Culture& cb = o.models[b];
    const Election e1 = sample({ca, o.m, o.n, pair_seed(o.seed, ca, cb, p, 0)});
    const Election e2 = sample({cb, o.m, o.n, pair_seed(o.seed, ca, cb, p, 1)});
    const IsoWitness w = max_common_voter_subelection(e1, e2, MatchingCase::none());
    // Two elections over the same number of candidates always share a vote
    // up to renaming, so the value is at least 1.
    if (w.value < 1 || w.value > o.n) throw std::logic_error("run_similarity_matrix: value out of range");
    fraction[static_cast<std::size_t>(t)] = static_cast<double>(w.value) / o.n;
    if (o.solver == MatrixSolver::IlpExport) {
      const auto path = o.ilp_dir / (std::to_string(a) + "-" + std::to_string(b) + "-" + std::to_string(p) + ".lp");
      write_text_file(path, lp_text(build_ilp(e1, e2)));
    }
  });

  SimilarityMatrix matrix(o.models, o.m, o.n);
  for (std::size_t c = 0; c < cells.size(); ++c) {
    const auto [a, b] = cells[c];
    std::vector<double> xs(fraction.begin() + static_cast<std::ptrdiff_t>(c * o.pairs),
                           fraction.begin() + static_cast<std::ptrdiff_t>((c + 1) * o.pairs));
    const MeanStd s = mean_and_stddev(xs);
    matrix.cell(a, b) = matrix.cell(b, a) = CellStats{s.mean, s.stddev, o.pairs};
  }
  return matrix;
}

void write_matrix_csv(const SimilarityMatrix& matrix, std::ostream& out) {
  out << "model_a,model_b,m,n,pairs,mean,stddev\n";
  for (int a = 0; a < matrix.size(); ++a) {
    for (int b = 0; b < matrix.size(); ++b) {
      const CellStats& c = matrix.cell(a, b);
      // Labels such as urn(alpha=0.1) contain no commas or quotes.
      out << to_string(matrix.models()[a]) << ',' << to_string(matrix.models()[b]) << ',' << matrix.m() << ','
          << matrix.n() << ',' << c.pairs << ',' << shortest(c.mean) << ',' << shortest(c.stddev) << '\n';
    }
  }
  if (!out) throw std::runtime_error("write_matrix_csv: write failed");
}

namespace {

std::string xml_escape(const std::string& s) {
  std::string r;
  for (char c : s) {
    switch (c) {
      case '&':
        r += "&amp;";
        break;
      case '<':
        r += "&lt;";
        break;
      case '>':
        r += "&gt;";
        break;
      case '"':
        r += "&quot;";
        break;
      default:
        r += c;
    }
  }
  return r;
}

std::string fixed(double x, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, x);
  return buf;
}

// White (0) to dark blue (1).
std::string cell_colour(double t) {
  t = std::clamp(t, 0.0, 1.0);
  auto channel = [&](int from, int to) { return static_cast<int>(std::lround(from + (to - from) * t)); };
  char buf[16];
  std::snprintf(buf, sizeof buf, "#%02x%02x%02x", channel(255, 8), channel(255, 48), channel(255, 107));
  return buf;
}

}  // namespace

void render_svg_heatmap(const SimilarityMatrix& matrix, std::ostream& out) {
  const int k = matrix.size();
  const int cell = 64, left = 150, top = 150, pad = 20;
  const int width = left + k * cell + pad, height = top + k * cell + pad;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
      << "\" viewBox=\"0 0 " << width << ' ' << height << "\" font-family=\"sans-serif\">\n";
  out << "  <title>Matched votes (%), m=" << matrix.m() << ", n=" << matrix.n() << "</title>\n";
  out << "  <rect width=\"" << width << "\" height=\"" << height << "\" fill=\"#ffffff\"/>\n";
  for (int i = 0; i < k; ++i) {
    const std::string label = xml_escape(to_string(matrix.models()[i]));
    const int centre = i * cell + cell / 2;
    out << "  <text x=\"" << left - 8 << "\" y=\"" << top + centre + 4
        << "\" font-size=\"12\" text-anchor=\"end\">" << label << "</text>\n";
    out << "  <text x=\"" << left + centre << "\" y=\"" << top - 8 << "\" font-size=\"12\" transform=\"rotate(-45 "
        << left + centre << ' ' << top - 8 << ")\">" << label << "</text>\n";
  }
  for (int a = 0; a < k; ++a) {
    for (int b = 0; b < k; ++b) {
      const CellStats& c = matrix.cell(a, b);
      const int x = left + b * cell, y = top + a * cell;
      const char* ink = c.mean > 0.5 ? "#ffffff" : "#000000";
      out << "  <rect x=\"" << x << "\" y=\"" << y << "\" width=\"" << cell << "\" height=\"" << cell << "\" fill=\""
          << cell_colour(c.mean) << "\" stroke=\"#808080\" stroke-width=\"0.5\"/>\n";
      out << "  <text x=\"" << x + cell / 2 << "\" y=\"" << y + cell / 2 + 2 << "\" font-size=\"20\" fill=\"" << ink
          << "\" text-anchor=\"middle\">" << fixed(100 * c.mean, 0) << "</text>\n";
      out << "  <text x=\"" << x + cell / 2 << "\" y=\"" << y + cell / 2 + 20 << "\" font-size=\"11\" fill=\"" << ink
          << "\" text-anchor=\"middle\">&#177;" << fixed(100 * c.stddev, 0) << "</text>\n";
    }
  }
  out << "</svg>\n";
  if (!out) throw std::runtime_error("render_svg_heatmap: write failed");
}

std::vector<TimingRow> run_timing(const TimingOptions& o) {
  if (o.models.empty() || o.pairs < 1 || o.step < 1 || o.from < 1 || o.to < o.from || o.fixed < 1)
    throw std::invalid_argument("run_timing: bad options");
  std::vector<TimingRow> rows;
  for (const Culture& model : o.models) {
    for (int size = o.from; size <= o.to; size += o.step) {
      const int m = o.vary_voters ? o.fixed : size;
      const int n = o.vary_voters ? size : o.fixed;
      double total = 0;
      for (int p = 0; p < o.pairs; ++p) {
        const std::uint64_t base = derive_seed(o.seed, fnv1a(to_string(model)), static_cast<std::uint64_t>(m) << 32 | n,
                                               static_cast<std::uint64_t>(p));
        const Election e1 = sample({model, m, n, derive_seed(base, 0)});
        const Election e2 = sample({model, m, n, derive_seed(base, 1)});
        const auto start = std::chrono::steady_clock::now();
        const IsoWitness w = max_common_voter_subelection(e1, e2, MatchingCase::none());
        const auto stop = std::chrono::steady_clock::now();
        if (w.value < 1) throw std::logic_error("run_timing: empty common subelection");
        total += std::chrono::duration<double>(stop - start).count();
      }
      rows.push_back({model, m, n, o.pairs, total / o.pairs});
    }
  }
  return rows;
}

void write_timing_csv(const std::vector<TimingRow>& rows, std::ostream& out) {
  out << "model,m,n,pairs,mean_seconds\n";
  for (const auto& r : rows)
    out << to_string(r.model) << ',' << r.m << ',' << r.n << ',' << r.pairs << ',' << shortest(r.mean_seconds) << '\n';
  if (!out) throw std::runtime_error("write_timing_csv: write failed");
}

MeanStd identical_votes_stat(const CultureSpec& spec, int samples) {
  if (samples < 1) throw std::invalid_argument("identical_votes_stat: samples must be positive");
  std::vector<double> xs;
  xs.reserve(static_cast<std::size_t>(samples));
  for (int s = 0; s < samples; ++s) {
    CultureSpec one = spec;
    one.seed = derive_seed(spec.seed, static_cast<std::uint64_t>(s));
    const Election e = sample(one);
    xs.push_back(static_cast<double>(most_frequent_vote_count(e)) / e.num_voters());
  }
  return mean_and_stddev(xs);
}

}  // namespace subelect
