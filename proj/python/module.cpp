#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "subelect/core.hpp"
#include "subelect/cultures.hpp"
#include "subelect/experiments.hpp"
#include "subelect/hard.hpp"
#include "subelect/ilp.hpp"
#include "subelect/io.hpp"
#include "subelect/solve.hpp"

namespace py = pybind11;
using namespace subelect;

namespace {

using Pairs = std::vector<std::pair<int, int>>;

MatchingCase make_case(const std::optional<Pairs>& sigma, const std::optional<Pairs>& pi) {
  if (sigma && pi) return MatchingCase::both(CandidateMatching(*sigma), VoterMatching(*pi));
  if (sigma) return MatchingCase::candidates(CandidateMatching(*sigma));
  if (pi) return MatchingCase::voters(VoterMatching(*pi));
  return MatchingCase::none();
}

Variant variant_arg(const std::string& name) {
  auto v = parse_variant(name);
  if (!v) throw py::value_error("unknown variant '" + name + "'");
  return *v;
}

}  // namespace

PYBIND11_MODULE(_subelect, m) {
  m.doc() = "Isomorphic subelections: solvers, samplers and experiments";

  py::register_exception<SizeLimitError>(m, "SizeLimitError", PyExc_OverflowError);
  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);

  py::class_<Election>(m, "Election")
      .def(py::init<int, std::vector<Vote>>(), py::arg("num_candidates"), py::arg("votes"))
      .def_property_readonly("num_candidates", &Election::num_candidates)
      .def_property_readonly("num_voters", &Election::num_voters)
      .def_property_readonly("votes", &Election::votes)
      .def("__eq__", [](const Election& a, const Election& b) { return a == b; })
      .def("__repr__", [](const Election& e) {
        return "Election(m=" + std::to_string(e.num_candidates()) + ", n=" + std::to_string(e.num_voters()) + ")";
      });

  py::class_<IsoWitness>(m, "IsoWitness")
      .def_property_readonly("sigma", [](const IsoWitness& w) { return w.sigma.pairs(); })
      .def_property_readonly("pi", [](const IsoWitness& w) { return w.pi.pairs(); })
      .def_readonly("value", &IsoWitness::value)
      .def("__repr__", [](const IsoWitness& w) { return "IsoWitness(value=" + std::to_string(w.value) + ")"; });

  m.def("parse_election", [](const std::string& text) { return parse_election(text); }, py::arg("text"));
  m.def("write_election", &write_election, py::arg("election"));

  m.def(
      "solve",
      [](const Election& e1, const Election& e2, const std::string& variant, std::optional<Pairs> sigma,
         std::optional<Pairs> pi, std::optional<std::int64_t> threshold, bool brute_force) {
        const SolveOutcome out = solve(e1, e2, variant_arg(variant), make_case(sigma, pi), threshold,
                                       brute_force ? SolveMethod::BruteForce : SolveMethod::Auto);
        return std::make_pair(out.success, out.witness);
      },
      py::arg("e1"), py::arg("e2"), py::arg("variant") = "max-common-voter", py::arg("sigma") = py::none(),
      py::arg("pi") = py::none(), py::arg("threshold") = py::none(), py::arg("brute_force") = false,
      "Returns (success, witness or None).");

  m.def(
      "verify_witness",
      [](const Election& e1, const Election& e2, const IsoWitness& w, const std::string& variant,
         std::optional<Pairs> sigma, std::optional<Pairs> pi) {
        return verify_witness(e1, e2, w, variant_arg(variant), make_case(sigma, pi));
      },
      py::arg("e1"), py::arg("e2"), py::arg("witness"), py::arg("variant"), py::arg("sigma") = py::none(),
      py::arg("pi") = py::none());

  m.def(
      "sample",
      [](const std::string& culture, int m_, int n, std::uint64_t seed) {
        return sample({parse_culture(culture), m_, n, seed});
      },
      py::arg("culture"), py::arg("m"), py::arg("n"), py::arg("seed") = 0);
  m.def("expected_swaps", &expected_swaps, py::arg("m"), py::arg("phi"));
  m.def("calibrate_mallows_phi", &calibrate_mallows_phi, py::arg("m"), py::arg("normphi"));

  m.def(
      "identical_votes_stat",
      [](const std::string& culture, int m_, int n, int samples, std::uint64_t seed) {
        const MeanStd s = identical_votes_stat({parse_culture(culture), m_, n, seed}, samples);
        return std::make_pair(s.mean, s.stddev);
      },
      py::arg("culture"), py::arg("m"), py::arg("n"), py::arg("samples"), py::arg("seed") = 0);

  m.def(
      "similarity_matrix",
      [](const std::string& models, int m_, int n, int pairs, std::uint64_t seed, int jobs) {
        MatrixOptions o;
        o.models = parse_culture_list(models);
        o.m = m_;
        o.n = n;
        o.pairs = pairs;
        o.seed = seed;
        o.jobs = jobs;
        SimilarityMatrix matrix = [&] {
          py::gil_scoped_release release;
          return run_similarity_matrix(o);
        }();
        std::vector<std::vector<std::pair<double, double>>> cells(matrix.size());
        for (int a = 0; a < matrix.size(); ++a)
          for (int b = 0; b < matrix.size(); ++b)
            cells[a].emplace_back(matrix.cell(a, b).mean, matrix.cell(a, b).stddev);
        return cells;
      },
      py::arg("models"), py::arg("m"), py::arg("n"), py::arg("pairs"), py::arg("seed") = 0, py::arg("jobs") = 1,
      "Matrix of (mean, stddev) of matched-voter fractions.");

  m.def(
      "lp_text", [](const Election& e1, const Election& e2) { return lp_text(build_ilp(e1, e2)); }, py::arg("e1"),
      py::arg("e2"));
}
