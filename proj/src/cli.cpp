#include "hfsim/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <iomanip>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "hfsim/distance.hpp"
#include "hfsim/error.hpp"
#include "hfsim/io.hpp"
#include "hfsim/madm.hpp"
#include "hfsim/measures.hpp"
#include "hfsim/similarity.hpp"
#include "hfsim/worked_example.hpp"

namespace hfsim::cli {

namespace {

using Json = nlohmann::ordered_json;

// JSON numbers carry the same 6-decimal rounding as the text formats.
double rounded(double v) { return std::stod(format_fixed(v)); }

std::string format_p(double p) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", p);
  return buf;
}

std::string pad(std::string s, std::size_t width) {
  // display width: count UTF-8 lead bytes only
  std::size_t len = 0;
  for (unsigned char c : s) len += (c & 0xC0) != 0x80;
  if (len < width) s.append(width - len, ' ');
  return s;
}

bool is_exponential(std::string_view measure) { return measure == "d18"; }

struct Value {
  double p;
  double value;
  bool flagged;
};

void emit_values(const RunConfig& config, const std::vector<Value>& values, std::ostream& out) {
  switch (config.format) {
    case OutputFormat::plain:
      out << pad("measure", 10) << pad("p", 10) << "value\n";
      for (const auto& v : values) {
        out << pad(config.measure, 10) << pad(format_p(v.p), 10) << format_fixed(v.value) << "\n";
      }
      break;
    case OutputFormat::csv:
      out << "measure,p,value\n";
      for (const auto& v : values) {
        out << config.measure << "," << format_p(v.p) << "," << format_fixed(v.value) << "\n";
      }
      break;
    case OutputFormat::json: {
      Json doc;
      doc["measure"] = config.measure;
      doc["policy"] = std::string(to_string(config.policy));
      Json results = Json::array();
      for (const auto& v : values) {
        Json r;
        r["p"] = v.p;
        r["value"] = rounded(v.value);
        if (v.flagged) r["outside_unit_interval"] = true;
        results.push_back(std::move(r));
      }
      doc["results"] = std::move(results);
      out << doc.dump(2) << "\n";
      break;
    }
  }
}

int run_pair_command(const RunConfig& config, std::ostream& out, std::ostream& err) {
  const SetPair pair = parse_pair(read_file(config.input));
  std::vector<Value> values;
  for (double p : config.p_values) {
    if (config.command == Command::distance) {
      DistanceSpec spec = distance_measure(is_exponential(config.measure) ? *config.base : config.measure, p);
      if (is_weighted(spec.family)) {
        if (!pair.weights) throw InvalidSpec(config.measure + " needs 'weights' in the input");
        spec.weights = pair.weights;
      }
      const double d = is_exponential(config.measure)
                           ? exponential_distance(pair.a, pair.b, spec, config.policy)
                           : distance(pair.a, pair.b, spec, config.policy);
      values.push_back({p, d, false});
    } else {
      SimilaritySpec spec = similarity_measure(
          config.measure, p, config.base,
          config.transform ? parse_transform(*config.transform) : SimilarityTransform::linear);
      const bool needs_weights = spec.family == SimilarityFamily::from_distance
                                     ? is_weighted(spec.base.family)
                                     : spec.weighting == Weighting::weighted;
      if (needs_weights) {
        if (!pair.weights) throw InvalidSpec(config.measure + " needs 'weights' in the input");
        if (spec.family == SimilarityFamily::from_distance) {
          spec.base.weights = pair.weights;
        } else {
          spec.weights = pair.weights;
        }
      }
      const auto outcome = evaluate_similarity(pair.a, pair.b, spec, config.policy);
      if (outcome.outside_unit_interval) {
        err << "warning: " << config.measure << " at p=" << format_p(p) << " is "
            << format_fixed(outcome.value) << ", outside [0,1]\n";
      }
      values.push_back({p, outcome.value, outcome.outside_unit_interval});
    }
  }
  emit_values(config, values, out);
  return kExitOk;
}

int run_rank(const RunConfig& config, std::ostream& out) {
  const DecisionProblem problem = parse_problem(read_file(config.input));
  const auto& alts = problem.alternatives();
  std::vector<RankingResult> results;
  for (double p : config.p_values) {
    results.push_back(relative_similarity(
        problem,
        similarity_measure(config.measure, p, config.base,
                           config.transform ? parse_transform(*config.transform)
                                            : SimilarityTransform::linear),
        config.policy));
  }
  auto rank_of = [](const RankingResult& r) {
    std::vector<std::size_t> rank(r.order.size());
    for (std::size_t k = 0; k < r.order.size(); ++k) rank[r.order[k]] = k + 1;
    return rank;
  };

  switch (config.format) {
    case OutputFormat::plain:
      for (std::size_t k = 0; k < results.size(); ++k) {
        if (k > 0) out << "\n";
        out << describe(results[k].measure) << ", p = " << format_p(config.p_values[k]) << "\n";
        out << pad("alternative", 14) << pad("score", 10) << "rank\n";
        const auto rank = rank_of(results[k]);
        for (std::size_t i = 0; i < alts.size(); ++i) {
          out << pad(alts[i].name, 14) << pad(format_fixed(results[k].scores[i]), 10) << rank[i]
              << "\n";
        }
        out << "ranking: " << ranking_string(problem, results[k]) << "\n";
      }
      break;
    case OutputFormat::csv: {
      const bool multi = results.size() > 1;
      out << (multi ? "p,alternative,score,rank\n" : "alternative,score,rank\n");
      for (std::size_t k = 0; k < results.size(); ++k) {
        const auto rank = rank_of(results[k]);
        for (std::size_t i = 0; i < alts.size(); ++i) {
          if (multi) out << format_p(config.p_values[k]) << ",";
          out << alts[i].name << "," << format_fixed(results[k].scores[i]) << "," << rank[i] << "\n";
        }
      }
      break;
    }
    case OutputFormat::json: {
      Json doc;
      doc["measure"] = config.measure;
      doc["policy"] = std::string(to_string(config.policy));
      Json rows = Json::array();
      for (std::size_t k = 0; k < results.size(); ++k) {
        Json row;
        row["p"] = config.p_values[k];
        Json scores = Json::object();
        for (std::size_t i = 0; i < alts.size(); ++i) scores[alts[i].name] = rounded(results[k].scores[i]);
        row["scores"] = std::move(scores);
        Json order = Json::array();
        for (auto idx : results[k].order) order.push_back(alts[idx].name);
        row["order"] = std::move(order);
        row["ranking"] = ranking_string(problem, results[k]);
        rows.push_back(std::move(row));
      }
      doc["results"] = std::move(rows);
      out << doc.dump(2) << "\n";
      break;
    }
  }
  return kExitOk;
}

int run_reproduce(const RunConfig& config, std::ostream& out, std::ostream& err) {
  const DecisionProblem problem =
      config.input.empty() ? example_problem() : parse_problem(read_file(config.input));
  const auto tables = reproduce_tables(problem, config.policy);
  const auto& alts = problem.alternatives();

  double worst = 0.0;
  bool rankings_ok = true;
  for (const auto& t : tables) {
    worst = std::max(worst, t.max_deviation());
    rankings_ok = rankings_ok && t.rankings_match();
  }
  const bool ok = worst <= kReproductionTolerance && rankings_ok;

  switch (config.format) {
    case OutputFormat::plain:
      for (const auto& t : tables) {
        out << t.reported->label << ": "
            << describe(similarity_measure(t.reported->measure, 1.0)) << "\n";
        out << pad(t.reported->uses_p ? "p" : "", 6);
        for (const auto& a : alts) out << pad(a.name, 10);
        out << pad("ranking", 28) << "max|dev|\n";
        for (const auto& row : t.rows) {
          out << pad(t.reported->uses_p ? format_p(row.p) : "", 6);
          for (double s : row.scores) out << pad(format_fixed(s), 10);
          out << pad(row.ranking, 28) << format_fixed(row.max_deviation);
          if (!row.ranking_matches) out << "  (reported " << row.reported_ranking << ")";
          out << "\n";
        }
        out << "\n";
      }
      out << "max absolute deviation " << format_fixed(worst) << " (tolerance "
          << format_fixed(kReproductionTolerance) << "), rankings "
          << (rankings_ok ? "match" : "differ") << ": " << (ok ? "OK" : "FAIL") << "\n";
      break;
    case OutputFormat::csv:
      out << "table,measure,p,alternative,score,reported,abs_dev\n";
      for (const auto& t : tables) {
        for (const auto& row : t.rows) {
          for (std::size_t i = 0; i < row.scores.size(); ++i) {
            out << t.reported->label << "," << t.reported->measure << "," << format_p(row.p) << ","
                << alts[i].name << "," << format_fixed(row.scores[i]) << ","
                << format_fixed(row.reported_scores[i]) << ","
                << format_fixed(std::abs(row.scores[i] - row.reported_scores[i])) << "\n";
          }
        }
      }
      break;
    case OutputFormat::json: {
      Json doc;
      doc["policy"] = std::string(to_string(config.policy));
      doc["tolerance"] = kReproductionTolerance;
      Json arr = Json::array();
      for (const auto& t : tables) {
        Json jt;
        jt["table"] = t.reported->label;
        jt["measure"] = t.reported->measure;
        Json rows = Json::array();
        for (const auto& row : t.rows) {
          Json jr;
          jr["p"] = row.p;
          Json scores = Json::object();
          Json reported = Json::object();
          for (std::size_t i = 0; i < row.scores.size(); ++i) {
            scores[alts[i].name] = rounded(row.scores[i]);
            reported[alts[i].name] = row.reported_scores[i];
          }
          jr["scores"] = std::move(scores);
          jr["reported"] = std::move(reported);
          jr["ranking"] = row.ranking;
          jr["reported_ranking"] = row.reported_ranking;
          jr["max_deviation"] = rounded(row.max_deviation);
          rows.push_back(std::move(jr));
        }
        jt["rows"] = std::move(rows);
        arr.push_back(std::move(jt));
      }
      doc["tables"] = std::move(arr);
      doc["max_deviation"] = rounded(worst);
      doc["ok"] = ok;
      out << doc.dump(2) << "\n";
      break;
    }
  }
  if (!ok) {
    err << "reproduce-paper: max deviation " << format_fixed(worst) << " exceeds "
        << format_fixed(kReproductionTolerance) << " or a ranking differs\n";
    return kExitToleranceFailure;
  }
  return kExitOk;
}

}  // namespace

Command parse_command(std::string_view name) {
  if (name == "distance") return Command::distance;
  if (name == "similarity") return Command::similarity;
  if (name == "rank") return Command::rank;
  if (name == "reproduce-paper") return Command::reproduce_paper;
  throw InvalidSpec("unknown command '" + std::string(name) + "'");
}

OutputFormat parse_format(std::string_view name) {
  if (name == "plain") return OutputFormat::plain;
  if (name == "csv") return OutputFormat::csv;
  if (name == "json") return OutputFormat::json;
  throw InvalidSpec("unknown output format '" + std::string(name) + "'");
}

void validate(const RunConfig& config) {
  if (config.command == Command::reproduce_paper) return;
  if (config.input.empty()) throw InvalidSpec("--input is required");
  if (config.measure.empty()) throw InvalidSpec("--measure is required");
  if (config.p_values.empty()) throw InvalidSpec("--p is required");

  if (config.command == Command::distance) {
    if (is_exponential(config.measure)) {
      if (!config.base) throw InvalidSpec("d18 needs --base <distance>");
      if (!is_distance_name(*config.base)) {
        throw InvalidSpec("unknown base distance '" + *config.base + "'");
      }
    } else if (!is_distance_name(config.measure)) {
      throw InvalidSpec("unknown distance measure '" + config.measure + "'");
    }
    return;
  }
  if (!is_similarity_name(config.measure)) {
    throw InvalidSpec("unknown similarity measure '" + config.measure + "'");
  }
  if (config.measure == "s0") {
    if (!config.base) throw InvalidSpec("s0 needs --base <distance>");
    if (!is_distance_name(*config.base)) {
      throw InvalidSpec("unknown base distance '" + *config.base + "'");
    }
    if (!config.transform) throw InvalidSpec("s0 needs --transform linear|exponential|reciprocal");
  }
  if (config.transform) parse_transform(*config.transform);
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    validate(config);
    switch (config.command) {
      case Command::distance:
      case Command::similarity:
        return run_pair_command(config, out, err);
      case Command::rank:
        return run_rank(config, out);
      case Command::reproduce_paper:
        return run_reproduce(config, out, err);
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
  }
  return kExitInputError;
}

}  // namespace hfsim::cli
