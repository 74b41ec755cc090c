#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "gibbsfrag/coupling.hpp"
#include "gibbsfrag/crp.hpp"
#include "gibbsfrag/lattice.hpp"
#include "gibbsfrag/records.hpp"
#include "gibbsfrag/serialize.hpp"
#include "gibbsfrag/verify.hpp"

namespace py = pybind11;
using namespace gibbsfrag;

namespace {

// Rationals cross the boundary as fractions.Fraction; inputs may be
// Fraction, int, or "p/q" strings.
py::object to_frac(const Rat& value) {
  return py::module_::import("fractions").attr("Fraction")(rat_str(value));
}

Rat from_py(py::handle value) {
  if (py::isinstance<py::int_>(value)) return parse_rational(py::str(value).cast<std::string>());
  return parse_rational(py::str(value).cast<std::string>());
}

std::vector<Rat> rats_from(const py::sequence& seq) {
  std::vector<Rat> out;
  for (py::handle item : seq) out.push_back(from_py(item));
  return out;
}

py::list fracs(const std::vector<Rat>& values) {
  py::list out;
  for (const Rat& v : values) out.append(to_frac(v));
  return out;
}

py::list layer_to_py(const LayerDistribution<RecordVector>& layer) {
  py::list out;
  for (int i = 0; i < layer.size(); ++i) {
    out.append(py::make_tuple(layer.states[i].bitstring(), to_frac(layer.probs[i])));
  }
  return out;
}

py::list blocks_to_py(const SetPartition& p) {
  py::list out;
  for (const auto& block : p.blocks()) {
    py::list b;
    for (int e : block) b.append(e);
    out.append(std::move(b));
  }
  return out;
}

py::list partition_layer_to_py(const LayerDistribution<SetPartition>& layer) {
  py::list out;
  for (int i = 0; i < layer.size(); ++i) {
    out.append(py::make_tuple(blocks_to_py(layer.states[i]), to_frac(layer.probs[i])));
  }
  return out;
}

py::object json_to_py(const json& value) {
  return py::module_::import("json").attr("loads")(value.dump());
}

template <typename State>
py::dict coupling_to_py(const MonotoneCoupling<State>& coupling) {
  py::dict out;
  out["status"] = "feasible";
  py::list edges;
  for (std::size_t e = 0; e < coupling.graph.edges.size(); ++e) {
    const auto [lo, up] = coupling.graph.edges[e];
    edges.append(py::make_tuple(state_name(coupling.lower.states[lo]),
                                state_name(coupling.upper.states[up]),
                                to_frac(coupling.joint[e])));
  }
  out["edges"] = std::move(edges);
  return out;
}

template <typename State>
py::dict certificate_to_py(const ViolationCertificate<State>& cert) {
  py::dict out;
  out["status"] = "infeasible";
  py::list subset;
  for (const State& s : cert.subset_states) subset.append(state_name(s));
  out["subset"] = std::move(subset);
  out["subset_mass"] = to_frac(cert.lhs);
  out["neighborhood_mass"] = to_frac(cert.rhs);
  return out;
}

py::dict couple_records(const std::string& alpha_text, int n, int k, const std::string& extreme,
                        py::object edge) {
  const Alpha alpha = Alpha::parse(alpha_text);
  const auto lower = record_law(alpha, n, k);
  const auto upper = record_law(alpha, n, k + 1);
  const auto graph = build_cover_graph(lower, upper);
  if (!extreme.empty()) {
    if (edge.is_none()) throw std::invalid_argument("extreme coupling needs an edge");
    const auto [lo_s, up_s] = edge.cast<std::pair<std::string, std::string>>();
    const int lo = lower.index_of(RecordVector::from_bitstring(lo_s));
    const int up = upper.index_of(RecordVector::from_bitstring(up_s));
    const int target = graph.edge_index(lo, up);
    if (target < 0) throw std::invalid_argument("not a cover edge");
    const auto direction = extreme == "max" ? ExtremeDirection::max : ExtremeDirection::min;
    return coupling_to_py(extreme_coupling(lower, upper, graph, target, direction));
  }
  auto result = strassen_feasible(lower, upper, graph);
  if (auto* cert = std::get_if<ViolationCertificate<RecordVector>>(&result)) {
    return certificate_to_py(*cert);
  }
  return coupling_to_py(std::get<MonotoneCoupling<RecordVector>>(result));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "exact Gibbs fragmentation toolkit: conditioned partition laws, monotone couplings, "
            "and samplers";

  m.def("rising_factorial",
        [](py::object x, int count, py::object step) {
          return to_frac(rising_factorial(from_py(x), count, from_py(step)));
        },
        py::arg("x"), py::arg("count"), py::arg("step"));

  m.def("gamma_coeff",
        [](int n, int k, const std::string& alpha) {
          return to_frac(gamma_coeff(n, k, Alpha::parse(alpha)));
        },
        py::arg("n"), py::arg("k"), py::arg("alpha"));

  m.def("stirling_table",
        [](const std::string& alpha, int max_n) {
          const StirlingTable table(Alpha::parse(alpha), max_n);
          py::list rows;
          for (const auto& row : table.rows()) rows.append(fracs(row));
          return rows;
        },
        py::arg("alpha"), py::arg("max_n"));

  m.def("bell_polynomial",
        [](int n, int k, const py::sequence& w) { return to_frac(bell_polynomial(n, k, rats_from(w))); },
        py::arg("n"), py::arg("k"), py::arg("w"));

  m.def("weights",
        [](const std::string& alpha, int n) {
          return fracs(WeightSystem(Alpha::parse(alpha)).weights(n));
        },
        py::arg("alpha"), py::arg("n"));

  m.def("v_array",
        [](const std::string& alpha, py::object theta, int max_n) {
          py::list rows;
          for (const auto& row : v_array(Alpha::parse(alpha), from_py(theta), max_n)) {
            rows.append(fracs(row));
          }
          return rows;
        },
        py::arg("alpha"), py::arg("theta"), py::arg("max_n"));

  m.def("verify_v_recursion",
        [](const py::sequence& v, const std::string& alpha, int max_n) {
          std::vector<std::vector<Rat>> rows;
          for (py::handle row : v) rows.push_back(rats_from(row.cast<py::sequence>()));
          const auto check = verify_v_recursion(rows, Alpha::parse(alpha), max_n);
          return py::make_tuple(check.ok, check.n, check.k);
        },
        py::arg("v"), py::arg("alpha"), py::arg("max_n"));

  m.def("block_count_distribution",
        [](const std::string& alpha, py::object theta, int n) {
          return fracs(block_count_distribution(Alpha::parse(alpha), from_py(theta), n).probs);
        },
        py::arg("alpha"), py::arg("theta"), py::arg("n"));

  m.def("poisson_binomial_pmf",
        [](const py::sequence& p) { return fracs(poisson_binomial_pmf(rats_from(p))); },
        py::arg("p"));

  m.def("conditional_bernoulli",
        [](const py::sequence& p, int k) { return layer_to_py(conditional_bernoulli(rats_from(p), k)); },
        py::arg("p"), py::arg("k"));

  m.def("record_law",
        [](const std::string& alpha, int n, int k) {
          return layer_to_py(record_law(Alpha::parse(alpha), n, k));
        },
        py::arg("alpha"), py::arg("n"), py::arg("k"));

  m.def("p_record_last",
        [](const std::string& alpha, int n, int k) {
          return to_frac(p_record_last(Alpha::parse(alpha), n, k));
        },
        py::arg("alpha"), py::arg("n"), py::arg("k"));

  m.def("threshold_law",
        [](const std::string& alpha, int n) {
          return fracs(threshold_law(Alpha::parse(alpha), n).probs);
        },
        py::arg("alpha"), py::arg("n"));

  m.def("efron_check",
        [](const py::sequence& p, const std::vector<std::string>& generators, int k) {
          const auto probs = rats_from(p);
          std::vector<std::uint64_t> masks;
          for (const auto& g : generators) masks.push_back(RecordVector::from_bitstring(g).bits);
          return efron_check(probs, UpSet::closure(static_cast<int>(probs.size()), masks), k);
        },
        py::arg("p"), py::arg("generators"), py::arg("k"));

  m.def("couple", &couple_records, py::arg("alpha"), py::arg("n"), py::arg("k"),
        py::arg("extreme") = std::string(), py::arg("edge") = py::none());

  m.def("gibbs_partition_law",
        [](const py::sequence& w, int n, int k) {
          return partition_layer_to_py(gibbs_partition_law(rats_from(w), n, k));
        },
        py::arg("w"), py::arg("n"), py::arg("k"));

  m.def("record_law_oracle",
        [](const py::sequence& w, int n, int k) {
          return layer_to_py(record_law_oracle(rats_from(w), n, k));
        },
        py::arg("w"), py::arg("n"), py::arg("k"));

  m.def("partition_strassen_explore",
        [](const py::sequence& w, int n) {
          return json_to_py(explore_json(partition_strassen_explore(rats_from(w), n), false));
        },
        py::arg("w"), py::arg("n"));

  m.def("crp_partition",
        [](const std::string& records, const std::vector<int>& choices) {
          SeatingChoices seats{static_cast<int>(records.size()), choices};
          return blocks_to_py(crp_partition(RecordVector::from_bitstring(records), seats));
        },
        py::arg("records"), py::arg("choices"));

  m.def("split_check",
        [](const std::string& b, const std::string& b_next, const std::vector<int>& choices) {
          SeatingChoices seats{static_cast<int>(b.size()), choices};
          return split_check(RecordVector::from_bitstring(b),
                             RecordVector::from_bitstring(b_next), seats);
        },
        py::arg("b"), py::arg("b_next"), py::arg("choices"));

  m.def("sample_fragmentation_crp",
        [](int n, std::uint64_t seed) {
          py::list out;
          for (const auto& p : sample_fragmentation_crp(n, seed).partitions) {
            out.append(blocks_to_py(p));
          }
          return out;
        },
        py::arg("n"), py::arg("seed"));

  m.def("sample_fragmentation_recursive",
        [](int n, std::uint64_t seed) {
          py::list rows;
          for (const auto& row : sample_fragmentation_recursive(n, seed).rows) {
            py::list partitions;
            for (const auto& p : row.partitions) partitions.append(blocks_to_py(p));
            rows.append(std::move(partitions));
          }
          return rows;
        },
        py::arg("n"), py::arg("seed"));

  m.def("sample_record_chain",
        [](const std::string& alpha, int n, std::uint64_t seed) {
          py::list out;
          for (const auto& b : sample_record_chain(Alpha::parse(alpha), n, seed)) {
            out.append(b.bitstring());
          }
          return out;
        },
        py::arg("alpha"), py::arg("n"), py::arg("seed"));

  m.def("run_verify",
        [](const std::vector<std::string>& suites, int max_n, int cases, std::uint64_t seed) {
          verify::Options opt;
          opt.max_n = max_n;
          opt.random_cases = cases;
          opt.seed = seed;
          opt.explore_w.assign(opt.explore_n, Rat(1));
          const auto names = suites.empty() ? verify::suite_names() : suites;
          py::list out;
          for (const auto& result : verify::run_suites(names, opt, 1)) {
            py::dict entry;
            entry["suite"] = result.name;
            entry["passed"] = result.passed;
            entry["cases"] = result.cases;
            entry["detail"] = result.detail;
            out.append(std::move(entry));
          }
          return out;
        },
        py::arg("suites") = std::vector<std::string>{}, py::arg("max_n") = 8,
        py::arg("cases") = 100, py::arg("seed") = 20240101);
}
