#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hfsim/continuous.hpp"
#include "hfsim/error.hpp"
#include "hfsim/io.hpp"
#include "hfsim/madm.hpp"
#include "hfsim/measures.hpp"
#include "hfsim/worked_example.hpp"

namespace py = pybind11;
using namespace hfsim;

namespace {

using Grades = std::vector<double>;
using SetDict = std::vector<std::pair<std::string, Grades>>;

HesitantSet set_from(const py::dict& d) {
  std::vector<HesitantSet::Entry> entries;
  for (const auto& [k, v] : d) {
    entries.emplace_back(py::cast<std::string>(k), make_element(py::cast<Grades>(v)));
  }
  return HesitantSet(std::move(entries));
}

py::dict set_to_dict(const HesitantSet& s) {
  py::dict d;
  for (const auto& [id, e] : s.entries()) d[py::str(id)] = Grades(e.values().begin(), e.values().end());
  return d;
}

std::optional<WeightVector> weights_from(const std::optional<Grades>& w) {
  if (!w) return std::nullopt;
  return WeightVector(*w);
}

DistanceSpec distance_spec(const std::string& name, double p, const std::optional<Grades>& w) {
  auto spec = distance_measure(name, p);
  spec.weights = weights_from(w);
  return spec;
}

SimilaritySpec similarity_spec(const std::string& name, double p, const std::optional<Grades>& w,
                               const std::optional<std::string>& base, const std::string& transform) {
  std::optional<std::string_view> b;
  if (base) b = *base;
  auto spec = similarity_measure(name, p, b, parse_transform(transform));
  if (spec.family == SimilarityFamily::from_distance) {
    spec.base.weights = weights_from(w);
  } else {
    spec.weights = weights_from(w);
  }
  return spec;
}

SampledHesitantFunction sampled(const Grades& nodes, const std::vector<Grades>& values) {
  std::vector<HesitantElement> elements;
  for (const auto& v : values) elements.push_back(make_element(v));
  return {nodes, std::move(elements)};
}

std::optional<SampledWeightFunction> weight_fn(const Grades& nodes, const std::optional<Grades>& density) {
  if (!density) return std::nullopt;
  return SampledWeightFunction(nodes, *density);
}

py::dict ranking_dict(const DecisionProblem& problem, const RankingResult& r) {
  py::dict scores;
  py::list order;
  for (std::size_t i = 0; i < r.scores.size(); ++i) scores[py::str(problem.alternatives()[i].name)] = r.scores[i];
  for (auto i : r.order) order.append(problem.alternatives()[i].name);
  py::dict out;
  out["scores"] = scores;
  out["order"] = order;
  out["ranking"] = ranking_string(problem, r);
  return out;
}

template <class E>
E parse_enum(const std::string& name, std::initializer_list<std::pair<const char*, E>> table) {
  for (const auto& [n, e] : table)
    if (name == n) return e;
  throw InvalidSpec("unknown variant '" + name + "'");
}

}  // namespace

PYBIND11_MODULE(hfsim, m) {
  m.doc() = "Distance and similarity measures on hesitant fuzzy sets, with ideal-alternative ranking.";

  static py::exception<Error> error(m, "Error", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const ValidationError& e) {
      py::set_error(error, (e.invariant() + ": " + e.what()).c_str());
    } catch (const Error& e) {
      py::set_error(error, e.what());
    }
  });

  m.def(
      "element",
      [](const Grades& g, bool dedupe) {
        const auto e = make_element(g, dedupe);
        return Grades(e.values().begin(), e.values().end());
      },
      py::arg("grades"), py::arg("dedupe") = true, "Sorted (descending), validated grades.");

  m.def(
      "compare",
      [](const Grades& a, const Grades& b, const std::string& policy) {
        return std::string(to_string(compare_elements(make_element(a), make_element(b), parse_policy(policy))));
      },
      py::arg("a"), py::arg("b"), py::arg("policy") = "pessimistic");

  m.def(
      "is_quasi_subset",
      [](const py::dict& a, const py::dict& b, const std::string& policy) {
        return is_quasi_subset(set_from(a), set_from(b), parse_policy(policy));
      },
      py::arg("a"), py::arg("b"), py::arg("policy") = "pessimistic");

  m.def(
      "distance",
      [](const py::dict& a, const py::dict& b, const std::string& measure, double p,
         const std::optional<Grades>& weights, const std::string& policy) {
        return distance(set_from(a), set_from(b), distance_spec(measure, p, weights), parse_policy(policy));
      },
      py::arg("a"), py::arg("b"), py::arg("measure"), py::arg("p") = 1.0, py::arg("weights") = py::none(),
      py::arg("policy") = "pessimistic");

  m.def(
      "exponential_distance",
      [](const py::dict& a, const py::dict& b, const std::string& base, double p,
         const std::optional<Grades>& weights, const std::string& policy) {
        return exponential_distance(set_from(a), set_from(b), distance_spec(base, p, weights),
                                    parse_policy(policy));
      },
      py::arg("a"), py::arg("b"), py::arg("base"), py::arg("p") = 1.0, py::arg("weights") = py::none(),
      py::arg("policy") = "pessimistic");

  m.def(
      "similarity",
      [](const py::dict& a, const py::dict& b, const std::string& measure, double p,
         const std::optional<Grades>& weights, const std::optional<std::string>& base,
         const std::string& transform, const std::string& policy) {
        const auto out = evaluate_similarity(set_from(a), set_from(b),
                                             similarity_spec(measure, p, weights, base, transform),
                                             parse_policy(policy));
        return py::make_tuple(out.value, out.outside_unit_interval);
      },
      py::arg("a"), py::arg("b"), py::arg("measure"), py::arg("p") = 1.0, py::arg("weights") = py::none(),
      py::arg("base") = py::none(), py::arg("transform") = "linear", py::arg("policy") = "pessimistic",
      "Returns (value, outside_unit_interval).");

  m.def(
      "continuous_distance",
      [](const Grades& nodes, const std::vector<Grades>& a, const std::vector<Grades>& b,
         const std::string& variant, double p, const std::optional<Grades>& weight,
         const std::string& policy) {
        const auto v = parse_enum<ContinuousDistanceVariant>(
            variant, {{"type2-weighted", ContinuousDistanceVariant::type2_weighted},
                      {"type2-normalized", ContinuousDistanceVariant::type2_normalized},
                      {"lp-weighted", ContinuousDistanceVariant::lp_weighted},
                      {"lp-average", ContinuousDistanceVariant::lp_average}});
        return continuous_distance(sampled(nodes, a), sampled(nodes, b), weight_fn(nodes, weight), p, v,
                                   parse_policy(policy));
      },
      py::arg("nodes"), py::arg("a"), py::arg("b"), py::arg("variant"), py::arg("p") = 1.0,
      py::arg("weight") = py::none(), py::arg("policy") = "pessimistic");

  m.def(
      "continuous_similarity",
      [](const Grades& nodes, const std::vector<Grades>& a, const std::vector<Grades>& b,
         const std::string& variant, double p, const std::optional<Grades>& weight,
         const std::string& policy) {
        using V = ContinuousSimilarityVariant;
        const auto v = parse_enum<V>(variant, {{"geometric-weighted", V::geometric_weighted},
                                               {"geometric-sum-weighted", V::geometric_sum_weighted},
                                               {"geometric-normalized", V::geometric_normalized},
                                               {"geometric-sum-normalized", V::geometric_sum_normalized},
                                               {"set-theoretic-weighted", V::set_theoretic_weighted},
                                               {"set-theoretic-normalized", V::set_theoretic_normalized}});
        return continuous_similarity(sampled(nodes, a), sampled(nodes, b), weight_fn(nodes, weight), p, v,
                                     parse_policy(policy));
      },
      py::arg("nodes"), py::arg("a"), py::arg("b"), py::arg("variant"), py::arg("p") = 1.0,
      py::arg("weight") = py::none(), py::arg("policy") = "pessimistic");

  py::class_<DecisionProblem>(m, "DecisionProblem")
      .def_property_readonly("attributes", &DecisionProblem::attributes)
      .def_property_readonly("weights",
                             [](const DecisionProblem& p) {
                               return Grades(p.weights().values().begin(), p.weights().values().end());
                             })
      .def_property_readonly("alternatives",
                             [](const DecisionProblem& p) {
                               py::dict d;
                               for (const auto& a : p.alternatives()) d[py::str(a.name)] = set_to_dict(a.evaluations);
                               return d;
                             })
      .def("to_json", &emit_problem)
      .def("__eq__", [](const DecisionProblem& a, const DecisionProblem& b) { return a == b; });

  m.def("parse_problem", [](const std::string& text) { return parse_problem(text); }, py::arg("text"));
  m.def("load_problem", [](const std::string& path) { return parse_problem(read_file(path)); }, py::arg("path"));
  m.def("example_problem", &example_problem, "The bundled five-alternative energy-policy matrix.");

  m.def(
      "ideal_alternatives",
      [](const DecisionProblem& problem, const std::string& policy) {
        const auto ideals = ideal_alternatives(problem, parse_policy(policy));
        return py::make_tuple(set_to_dict(ideals.positive), set_to_dict(ideals.negative));
      },
      py::arg("problem"), py::arg("policy") = "pessimistic");

  m.def(
      "rank",
      [](const DecisionProblem& problem, const std::string& measure, double p,
         const std::optional<std::string>& base, const std::string& transform, const std::string& policy) {
        const auto spec = similarity_spec(measure, p, std::nullopt, base, transform);
        return ranking_dict(problem, relative_similarity(problem, spec, parse_policy(policy)));
      },
      py::arg("problem"), py::arg("measure"), py::arg("p") = 1.0, py::arg("base") = py::none(),
      py::arg("transform") = "linear", py::arg("policy") = "pessimistic");

  m.def("reproduce_tables", [] {
    py::list out;
    for (const auto& t : reproduce_tables(example_problem())) {
      py::list rows;
      for (const auto& r : t.rows) {
        py::dict row;
        row["p"] = r.p;
        row["scores"] = r.scores;
        row["reported_scores"] = r.reported_scores;
        row["ranking"] = r.ranking;
        row["reported_ranking"] = r.reported_ranking;
        row["max_deviation"] = r.max_deviation;
        rows.append(row);
      }
      py::dict d;
      d["table"] = t.reported->label;
      d["measure"] = t.reported->measure;
      d["rows"] = rows;
      d["within_tolerance"] = t.within_tolerance();
      d["rankings_match"] = t.rankings_match();
      out.append(d);
    }
    return out;
  });

  m.attr("REPRODUCTION_TOLERANCE") = kReproductionTolerance;
}
