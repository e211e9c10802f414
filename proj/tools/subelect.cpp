// subelect: command-line front end.
//
// Exit codes: 0 found / optimum, 1 not found (or below --threshold),
// 2 usage error, 3 size limit exceeded, 4 input or I/O error.

#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "subelect/core.hpp"
#include "subelect/cultures.hpp"
#include "subelect/experiments.hpp"
#include "subelect/hard.hpp"
#include "subelect/ilp.hpp"
#include "subelect/io.hpp"
#include "subelect/reductions.hpp"
#include "subelect/solve.hpp"

namespace {

using namespace subelect;

constexpr int kExitFound = 0;
constexpr int kExitNotFound = 1;
constexpr int kExitUsage = 2;
constexpr int kExitSizeLimit = 3;
constexpr int kExitInput = 4;

// Problems with the combination of flags, found after CLI11 parsing.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

const char* kDefaultRoster =
    "id,ic,urn(alpha=0.1),urn(alpha=0.5),mallows(normphi=1/3),mallows(normphi=2/3),1d,walsh,conitzer";

void emit(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    std::cout.flush();
    if (!std::cout) throw std::runtime_error("cannot write to standard output");
  } else {
    write_text_file(path, text);
  }
}

Culture culture_arg(const std::string& text) {
  try {
    return parse_culture(text);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

std::vector<Culture> culture_list_arg(const std::string& text) {
  try {
    return parse_culture_list(text);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

std::string format_pairs(const char* key, const std::vector<std::pair<int, int>>& pairs) {
  std::string s = std::string(key) + ":";
  for (auto [a, b] : pairs) s += " " + std::to_string(a) + "->" + std::to_string(b);
  return s + "\n";
}

struct SolveArgs {
  std::string variant = "max-common-voter";
  std::string kind = "none";
  std::string sigma_file, pi_file;
  std::optional<std::int64_t> threshold;
  std::string method = "auto";
  std::string sigma_out, pi_out;
  std::string first, second;
};

int run_solve(const SolveArgs& a) {
  const auto variant = parse_variant(a.variant);
  const auto kind = parse_case_kind(a.kind);
  if (!variant) throw UsageError("unknown variant '" + a.variant + "'");
  if (!kind) throw UsageError("unknown matching case '" + a.kind + "'");
  const bool wants_sigma = *kind == CaseKind::CandidateMatchingGiven || *kind == CaseKind::BothMatchingsGiven;
  const bool wants_pi = *kind == CaseKind::VoterMatchingGiven || *kind == CaseKind::BothMatchingsGiven;
  if (wants_sigma != !a.sigma_file.empty())
    throw UsageError(wants_sigma ? "--case " + a.kind + " needs --sigma" : "--sigma requires --case cand or both");
  if (wants_pi != !a.pi_file.empty())
    throw UsageError(wants_pi ? "--case " + a.kind + " needs --pi" : "--pi requires --case voter or both");
  if (a.method == "brute" && is_decision_variant(*variant))
    throw UsageError("--method brute applies to the max-common variants only");

  const Election e1 = read_election_file(a.first);
  const Election e2 = read_election_file(a.second);
  std::optional<CandidateMatching> sigma;
  std::optional<VoterMatching> pi;
  if (wants_sigma) sigma = CandidateMatching(read_pairs_file(a.sigma_file));
  if (wants_pi) pi = VoterMatching(read_pairs_file(a.pi_file));
  const MatchingCase mc = sigma && pi ? MatchingCase::both(*sigma, *pi)
                          : sigma     ? MatchingCase::candidates(*sigma)
                          : pi        ? MatchingCase::voters(*pi)
                                      : MatchingCase::none();
  const SolveMethod method = a.method == "brute" ? SolveMethod::BruteForce : SolveMethod::Auto;
  const SolveOutcome out = solve(e1, e2, *variant, mc, a.threshold, method);

  std::ostringstream text;
  text << "variant: " << to_string(*variant) << "\n";
  text << "case: " << to_string(*kind) << "\n";
  text << "answer: " << (out.success ? "yes" : "no") << "\n";
  if (out.witness) {
    const IsoWitness& w = *out.witness;
    text << "value: " << w.value << "\n";
    text << "kept_candidates: " << w.sigma.size() << "\n";
    text << "kept_voters: " << w.pi.size() << "\n";
    text << format_pairs("sigma", w.sigma.pairs());
    text << format_pairs("pi", w.pi.pairs());
    if (!a.sigma_out.empty()) write_text_file(a.sigma_out, write_pairs(w.sigma.pairs()));
    if (!a.pi_out.empty()) write_text_file(a.pi_out, write_pairs(w.pi.pairs()));
  }
  emit("", text.str());
  return out.success ? kExitFound : kExitNotFound;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Isomorphic subelections: solvers, samplers and experiments"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "subelect 1.0.0");

  // solve
  SolveArgs sa;
  auto* solve_cmd = app.add_subcommand("solve", "Solve one (sub)isomorphism or maximum common subelection instance");
  solve_cmd->add_option("--variant", sa.variant, "Problem variant")
      ->check(CLI::IsMember({"iso", "subiso", "cand-subiso", "voter-subiso", "max-common", "max-common-cand",
                             "max-common-voter"}))
      ->capture_default_str();
  solve_cmd->add_option("--case", sa.kind, "Which matchings are given")
      ->check(CLI::IsMember({"none", "voter", "cand", "both"}))
      ->capture_default_str();
  solve_cmd->add_option("--sigma", sa.sigma_file, "Candidate matching file (left right per line)");
  solve_cmd->add_option("--pi", sa.pi_file, "Voter matching file (left right per line)");
  solve_cmd->add_option("--threshold", sa.threshold, "Succeed iff the optimum reaches this value")
      ->check(CLI::NonNegativeNumber);
  solve_cmd->add_option("--method", sa.method, "auto or brute (exhaustive, small inputs only)")
      ->check(CLI::IsMember({"auto", "brute"}))
      ->capture_default_str();
  solve_cmd->add_option("--sigma-out", sa.sigma_out, "Write the witness candidate matching here");
  solve_cmd->add_option("--pi-out", sa.pi_out, "Write the witness voter matching here");
  solve_cmd->add_option("first", sa.first, "First election (.soc)")->required();
  solve_cmd->add_option("second", sa.second, "Second election (.soc)")->required();

  // sample
  std::string culture_text, sample_out, axis_out;
  int sample_m = 0, sample_n = 0;
  std::uint64_t sample_seed = 0;
  auto* sample_cmd = app.add_subcommand("sample", "Draw an election from a statistical culture");
  sample_cmd->add_option("--culture", culture_text, "id, ic, urn(alpha=A), mallows(normphi=P), 1d, walsh, conitzer")
      ->required();
  sample_cmd->add_option("-m", sample_m, "Number of candidates")->required()->check(CLI::PositiveNumber);
  sample_cmd->add_option("-n", sample_n, "Number of voters")->required()->check(CLI::PositiveNumber);
  sample_cmd->add_option("--seed", sample_seed, "Random seed")->capture_default_str();
  sample_cmd->add_option("-o,--output", sample_out, "Output file (default: standard output)");
  sample_cmd->add_option("--axis-out", axis_out, "Write the societal axis (single-peaked cultures)");

  // experiment
  auto* exp_cmd = app.add_subcommand("experiment", "Similarity matrices, timing sweeps, identical-vote statistics");
  exp_cmd->require_subcommand(1);

  MatrixOptions mo;
  std::string models_text = kDefaultRoster, csv_out, svg_out, solver_name = "poly", ilp_dir = "ilp";
  auto* matrix_cmd = exp_cmd->add_subcommand("matrix", "Mean fraction of matched voters between culture pairs");
  matrix_cmd->add_option("--models", models_text, "Comma-separated cultures")->capture_default_str();
  matrix_cmd->add_option("-m", mo.m, "Number of candidates")->check(CLI::PositiveNumber)->capture_default_str();
  matrix_cmd->add_option("-n", mo.n, "Number of voters")->check(CLI::PositiveNumber)->capture_default_str();
  matrix_cmd->add_option("--pairs", mo.pairs, "Election pairs per cell")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  matrix_cmd->add_option("--seed", mo.seed, "Random seed")->capture_default_str();
  matrix_cmd->add_option("--jobs", mo.jobs, "Worker threads (0 = all cores)")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  matrix_cmd->add_option("--solver", solver_name, "poly, or ilp-export to also write every model as LP")
      ->check(CLI::IsMember({"poly", "ilp-export"}))
      ->capture_default_str();
  matrix_cmd->add_option("--ilp-dir", ilp_dir, "Directory for --solver ilp-export")->capture_default_str();
  matrix_cmd->add_option("--csv", csv_out, "CSV output (default: standard output)");
  matrix_cmd->add_option("--svg", svg_out, "SVG heatmap output");

  TimingOptions to;
  std::string timing_models = "id,ic,urn(alpha=0.1),mallows(normphi=1/3),walsh,conitzer", vary = "voters",
              timing_csv;
  auto* timing_cmd = exp_cmd->add_subcommand("timing", "Mean solve time of maximum common voter subelection");
  timing_cmd->add_option("--models", timing_models, "Comma-separated cultures")->capture_default_str();
  timing_cmd->add_option("--vary", vary, "voters (n ranges, m fixed) or candidates")
      ->check(CLI::IsMember({"voters", "candidates"}))
      ->capture_default_str();
  timing_cmd->add_option("--fixed", to.fixed, "Value of the fixed dimension")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  timing_cmd->add_option("--from", to.from, "First size")->check(CLI::PositiveNumber)->capture_default_str();
  timing_cmd->add_option("--to", to.to, "Last size")->check(CLI::PositiveNumber)->capture_default_str();
  timing_cmd->add_option("--step", to.step, "Size step")->check(CLI::PositiveNumber)->capture_default_str();
  timing_cmd->add_option("--pairs", to.pairs, "Election pairs per size")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  timing_cmd->add_option("--seed", to.seed, "Random seed")->capture_default_str();
  timing_cmd->add_option("--csv", timing_csv, "CSV output (default: standard output)");

  std::string ident_culture;
  int ident_m = 10, ident_n = 50, ident_samples = 200;
  std::uint64_t ident_seed = 0;
  auto* ident_cmd = exp_cmd->add_subcommand("identical", "How often the most frequent vote appears");
  ident_cmd->add_option("--culture", ident_culture, "Culture")->required();
  ident_cmd->add_option("-m", ident_m, "Number of candidates")->check(CLI::PositiveNumber)->capture_default_str();
  ident_cmd->add_option("-n", ident_n, "Number of voters")->check(CLI::PositiveNumber)->capture_default_str();
  ident_cmd->add_option("--samples", ident_samples, "Elections to draw")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  ident_cmd->add_option("--seed", ident_seed, "Random seed")->capture_default_str();

  // reduce
  auto* reduce_cmd = app.add_subcommand("reduce", "Build hard instances from a graph");
  reduce_cmd->require_subcommand(1);
  std::string graph_file, prefix;
  int clique_k = 3;
  auto* subiso_red = reduce_cmd->add_subcommand(
      "clique-subiso", "Clique -> Subelection Isomorphism: writes PREFIX-E1.soc (K_k) and PREFIX-E2.soc (G)");
  subiso_red->alias("thm2");
  subiso_red->add_option("--graph", graph_file, "Edge list (u v per line, 0-based)")->required();
  subiso_red->add_option("-k", clique_k, "Clique size")->required()->check(CLI::Range(2, 1000));
  subiso_red->add_option("-o,--output", prefix, "Output prefix")->required();
  auto* cand_red = reduce_cmd->add_subcommand(
      "clique-common-cand",
      "Clique -> Max. Common Cand.-Subelection with both matchings: writes PREFIX-E1.soc, PREFIX-E2.soc, "
      "PREFIX-sigma.txt, PREFIX-pi.txt");
  cand_red->alias("thm4");
  cand_red->add_option("--graph", graph_file, "Edge list (u v per line, 0-based)")->required();
  cand_red->add_option("-o,--output", prefix, "Output prefix")->required();

  // export-ilp
  std::string ilp_first, ilp_second, ilp_out;
  auto* ilp_cmd = app.add_subcommand("export-ilp", "Write the maximum common voter subelection ILP in LP format");
  ilp_cmd->add_option("first", ilp_first, "First election (.soc)")->required();
  ilp_cmd->add_option("second", ilp_second, "Second election (.soc)")->required();
  ilp_cmd->add_option("-o,--output", ilp_out, "Output .lp file (default: standard output)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*solve_cmd) return run_solve(sa);

    if (*sample_cmd) {
      const CultureSample s = sample_with_axis({culture_arg(culture_text), sample_m, sample_n, sample_seed});
      emit(sample_out, write_election(s.election));
      if (!axis_out.empty()) {
        std::string text;
        for (std::size_t i = 0; i < s.axis.size(); ++i) text += (i ? " " : "") + std::to_string(s.axis[i]);
        write_text_file(axis_out, text + "\n");
      }
      return kExitFound;
    }

    if (*matrix_cmd) {
      mo.models = culture_list_arg(models_text);
      mo.solver = solver_name == "ilp-export" ? MatrixSolver::IlpExport : MatrixSolver::Poly;
      mo.ilp_dir = ilp_dir;
      const SimilarityMatrix matrix = run_similarity_matrix(mo);
      std::ostringstream csv;
      write_matrix_csv(matrix, csv);
      emit(csv_out, csv.str());
      if (!svg_out.empty()) {
        std::ostringstream svg;
        render_svg_heatmap(matrix, svg);
        write_text_file(svg_out, svg.str());
      }
      return kExitFound;
    }

    if (*timing_cmd) {
      to.models = culture_list_arg(timing_models);
      to.vary_voters = vary == "voters";
      if (to.to < to.from) throw UsageError("--to must not be smaller than --from");
      std::ostringstream csv;
      write_timing_csv(run_timing(to), csv);
      emit(timing_csv, csv.str());
      return kExitFound;
    }

    if (*ident_cmd) {
      const Culture culture = culture_arg(ident_culture);
      const MeanStd s = identical_votes_stat({culture, ident_m, ident_n, ident_seed}, ident_samples);
      std::cout << "culture: " << to_string(culture) << "\nmean: " << s.mean
                << "\nstddev: " << s.stddev << "\n";
      return kExitFound;
    }

    if (*subiso_red) {
      const auto [ek, eg] = clique_to_subiso_instance(read_graph_file(graph_file), clique_k);
      write_text_file(prefix + "-E1.soc", write_election(ek));
      write_text_file(prefix + "-E2.soc", write_election(eg));
      return kExitFound;
    }

    if (*cand_red) {
      const CommonCandInstance inst = clique_to_common_cand_instance(read_graph_file(graph_file));
      write_text_file(prefix + "-E1.soc", write_election(inst.e1));
      write_text_file(prefix + "-E2.soc", write_election(inst.e2));
      write_text_file(prefix + "-sigma.txt", write_pairs(inst.sigma.pairs()));
      write_text_file(prefix + "-pi.txt", write_pairs(inst.pi.pairs()));
      return kExitFound;
    }

    if (*ilp_cmd) {
      const IlpModel model = build_ilp(read_election_file(ilp_first), read_election_file(ilp_second));
      emit(ilp_out, lp_text(model));
      return kExitFound;
    }
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const SizeLimitError& e) {
    std::cerr << "size limit: " << e.what() << "\n";
    return kExitSizeLimit;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitUsage;
}
