#pragma once

#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "nbres/classifier.hpp"
#include "nbres/features.hpp"
#include "nbres/normalize.hpp"
#include "nbres/parser.hpp"
#include "nbres/term.hpp"

namespace nbres {

struct FormatError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Record of one successful proof search: the problem's conjecture and
/// axioms, plus the processed clauses in processing order, each flagged as
/// proof-relevant or not. Clauses are stored raw; normalization happens when
/// classifier data is built, so one run's data feeds every postprocessing
/// experiment.
struct ProcessedClause {
  Clause clause;
  bool used = false;
};

struct TrainingDatum {
  std::string problem_name;
  std::vector<Clause> conjecture;
  std::vector<Clause> axioms;
  std::vector<ProcessedClause> processed;
};

/// Apply one postprocessing option to a training datum. Filtering removes a
/// clause from both the processed sequence and the proof subset; used flags
/// travel with their clauses and order is preserved.
inline TrainingDatum postprocess(TrainingDatum d, PostprocMode mode,
                                 const SymbolPredicate& is_skolem = skolem_prefix_test()) {
  switch (mode) {
    case PostprocMode::none:
      break;
    case PostprocMode::skolem_filter: {
      std::vector<ProcessedClause> kept;
      for (auto& pc : d.processed)
        if (!contains_skolem(pc.clause, is_skolem)) kept.push_back(std::move(pc));
      d.processed = std::move(kept);
      break;
    }
    case PostprocMode::consistent_skolem:
      for (auto& pc : d.processed) pc.clause = normalize_skolem(pc.clause, is_skolem);
      break;
    case PostprocMode::consistent_normal:
      for (auto& pc : d.processed) pc.clause = normalize_all(pc.clause);
      break;
    case PostprocMode::inference_filter: {
      std::set<std::string> initial;
      for (const Clause& c : d.axioms) initial.insert(to_text(c));
      for (const Clause& c : d.conjecture) initial.insert(to_text(c));
      std::vector<ProcessedClause> kept;
      for (auto& pc : d.processed)
        if (initial.count(to_text(pc.clause))) kept.push_back(std::move(pc));
      d.processed = std::move(kept);
      break;
    }
  }
  return d;
}

/// The training-to-classifier transform: one triple per processed clause,
/// occurrence (1,0) for proof clauses and (0,1) for the rest. Features are
/// replayed from the datum according to the feature mode; for
/// processed-symbols a clause sees the symbols of the clauses processed
/// strictly before it plus the conjecture's.
inline std::vector<ExampleTriple> to_examples(const TrainingDatum& d, FeatureMode mode) {
  std::vector<ExampleTriple> out;
  out.reserve(d.processed.size());
  std::set<FeatureId> fixed;
  if (mode == FeatureMode::problem_axioms) fixed = axiom_features(d.axioms);
  std::set<FeatureId> running;
  if (mode == FeatureMode::processed_symbols)
    for (const Clause& c : d.conjecture) add_symbol_features(c, running);
  for (const ProcessedClause& pc : d.processed) {
    ExampleTriple t;
    switch (mode) {
      case FeatureMode::empty: break;
      case FeatureMode::problem_axioms: t.features = fixed; break;
      case FeatureMode::processed_symbols: t.features = running; break;
    }
    t.label = label_of(pc.clause, PostprocMode::none);
    t.occ = pc.used ? Occurrence{1, 0} : Occurrence{0, 1};
    out.push_back(std::move(t));
    if (mode == FeatureMode::processed_symbols) add_symbol_features(pc.clause, running);
  }
  return out;
}

/// Fold a set of raw training data into classifier data: postprocess each
/// datum, expand it to triples, and train them all. Equals the merge of
/// per-datum classifiers and is independent of datum order.
inline void train_datum(PosNegData& data, const TrainingDatum& raw, PostprocMode postproc,
                        FeatureMode features,
                        const SymbolPredicate& is_skolem = skolem_prefix_test()) {
  for (const ExampleTriple& t : to_examples(postprocess(raw, postproc, is_skolem), features))
    data.train(t);
}

inline PosNegData build_classifier(const std::vector<TrainingDatum>& raw, PostprocMode postproc,
                                   FeatureMode features,
                                   const SymbolPredicate& is_skolem = skolem_prefix_test()) {
  PosNegData data;
  for (const TrainingDatum& d : raw) train_datum(data, d, postproc, features, is_skolem);
  return data;
}

// ---- training datum file format (textual, LF endings) ----
//
//   tdatum v1
//   problem <name>
//   conjecture <canonical-clause ... or ->
//   axioms <k>
//   <k canonical clause lines>
//   processed <m>
//   <m lines: '+'|'-' SPACE canonical-clause>

inline std::string save_training(const TrainingDatum& d) {
  std::string out = "tdatum v1\n";
  out += "problem " + d.problem_name + "\n";
  out += "conjecture";
  if (d.conjecture.empty()) {
    out += " -";
  } else {
    for (const Clause& c : d.conjecture) out += " " + to_text(c);
  }
  out += "\n";
  out += "axioms " + std::to_string(d.axioms.size()) + "\n";
  for (const Clause& c : d.axioms) out += to_text(c) + "\n";
  out += "processed " + std::to_string(d.processed.size()) + "\n";
  for (const ProcessedClause& pc : d.processed)
    out += std::string(pc.used ? "+" : "-") + " " + to_text(pc.clause) + "\n";
  return out;
}

namespace detail {

inline std::string take_line(std::string_view& rest, const char* what) {
  if (rest.empty()) throw FormatError(std::string("tdatum: unexpected end of file, expected ") + what);
  auto nl = rest.find('\n');
  std::string line{nl == std::string_view::npos ? rest : rest.substr(0, nl)};
  rest.remove_prefix(nl == std::string_view::npos ? rest.size() : nl + 1);
  return line;
}

inline std::size_t parse_count(const std::string& line, const std::string& keyword) {
  if (line.compare(0, keyword.size() + 1, keyword + " ") != 0)
    throw FormatError("tdatum: expected '" + keyword + " <n>', got '" + line + "'");
  return static_cast<std::size_t>(std::stoull(line.substr(keyword.size() + 1)));
}

}  // namespace detail

inline TrainingDatum load_training(std::string_view text) {
  std::string_view rest = text;
  std::string header = detail::take_line(rest, "header");
  if (header != "tdatum v1") throw FormatError("tdatum: unsupported version header '" + header + "'");

  TrainingDatum d;
  std::string problem = detail::take_line(rest, "problem line");
  if (problem.rfind("problem ", 0) != 0) throw FormatError("tdatum: expected 'problem <name>'");
  d.problem_name = problem.substr(8);

  std::string conj = detail::take_line(rest, "conjecture line");
  if (conj.rfind("conjecture", 0) != 0) throw FormatError("tdatum: expected conjecture line");
  std::istringstream cs(conj.substr(10));
  for (std::string tok; cs >> tok;) {
    if (tok == "-") break;
    Clause c = parse_clause_text(tok);
    c.origin = Origin::negated_conjecture;
    d.conjecture.push_back(std::move(c));
  }

  std::size_t k = detail::parse_count(detail::take_line(rest, "axioms count"), "axioms");
  for (std::size_t i = 0; i < k; ++i)
    d.axioms.push_back(parse_clause_text(detail::take_line(rest, "axiom clause")));

  std::size_t m = detail::parse_count(detail::take_line(rest, "processed count"), "processed");
  for (std::size_t i = 0; i < m; ++i) {
    std::string line = detail::take_line(rest, "processed clause");
    if (line.size() < 3 || (line[0] != '+' && line[0] != '-') || line[1] != ' ')
      throw FormatError("tdatum: bad processed line '" + line + "'");
    ProcessedClause pc;
    pc.used = line[0] == '+';
    pc.clause = parse_clause_text(std::string_view(line).substr(2));
    d.processed.push_back(std::move(pc));
  }
  return d;
}

}  // namespace nbres
