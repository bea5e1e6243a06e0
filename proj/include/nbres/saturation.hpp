#pragma once

#include <chrono>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <vector>

#include "nbres/classifier.hpp"
#include "nbres/features.hpp"
#include "nbres/inference.hpp"
#include "nbres/normalize.hpp"
#include "nbres/term.hpp"
#include "nbres/training.hpp"

namespace nbres {

struct Guidance {
  const PosNegData* data = nullptr;  // shared, immutable during the search
  GuidanceParams params;
};

struct ProverConfig {
  double timeout_seconds = 10.0;  // 0 disables the wall-clock bound
  std::uint64_t max_given = 0;    // 0 disables the given-clause cap
  double w_size = 1.0;
  double w_age = 0.1;
  std::optional<Guidance> guidance;
  FeatureMode feature_mode = FeatureMode::empty;
  PostprocMode postproc_mode = PostprocMode::none;  // normalization used for rank-time labels
  std::string skolem_prefix = "sk";
};

enum class ProofStatus { refuted, saturated, timeout, given_limit };

inline const char* to_string(ProofStatus s) {
  switch (s) {
    case ProofStatus::refuted: return "refuted";
    case ProofStatus::saturated: return "saturated";
    case ProofStatus::timeout: return "timeout";
    case ProofStatus::given_limit: return "given-limit";
  }
  return "?";
}

/// Everything a finished search leaves behind: all clauses ever created
/// (indexed by id), the rank each was inserted with, the processing order,
/// and the refuting clause if the empty clause was derived.
struct ProofRecord {
  std::vector<Clause> clauses;
  std::vector<double> insertion_rank;
  std::vector<std::uint64_t> processed;
  std::optional<std::uint64_t> refuting;
};

struct SearchStats {
  std::uint64_t given = 0;
  std::uint64_t created = 0;
  double wall_ms = 0.0;
};

struct SaturationResult {
  ProofStatus status = ProofStatus::saturated;
  SearchStats stats;
  ProofRecord record;
  std::optional<TrainingDatum> training;  // present iff status == refuted
};

/// Conventional clause relevance: weighted symbol count and age, negated so
/// that higher is better.
inline double r_atp(const Clause& c, const ProverConfig& config) {
  return -(config.w_size * static_cast<double>(symbol_count(c)) +
           config.w_age * static_cast<double>(c.age));
}

/// Prover-state characterization at a choice point, recomputed from scratch.
/// The loop itself maintains the same set incrementally.
inline std::set<FeatureId> state_features(const ProofRecord& record, const Problem& problem,
                                          FeatureMode mode) {
  std::set<FeatureId> out;
  switch (mode) {
    case FeatureMode::empty:
      break;
    case FeatureMode::problem_axioms: {
      std::vector<Clause> axioms;
      for (const Clause& c : problem.clauses)
        if (c.origin == Origin::axiom) axioms.push_back(c);
      out = axiom_features(axioms);
      break;
    }
    case FeatureMode::processed_symbols:
      for (const Clause& c : problem.clauses)
        if (c.origin == Origin::negated_conjecture) add_symbol_features(c, out);
      for (std::uint64_t id : record.processed) add_symbol_features(record.clauses[id], out);
      break;
  }
  return out;
}

/// R(c, F): the conventional relevance plus, when guidance is loaded, the
/// learned rank of the clause's normalized label in state F.
inline double clause_rank(const Clause& c, const std::set<FeatureId>& features,
                          const ProverConfig& config) {
  double r = r_atp(c, config);
  if (config.guidance && config.guidance->data) {
    LabelId l = label_of(c, config.postproc_mode, skolem_prefix_test(config.skolem_prefix));
    r += rank(*config.guidance->data, config.guidance->params, l, features);
  }
  return r;
}

inline bool is_tautology(const Clause& c) {
  for (std::size_t i = 0; i < c.literals.size(); ++i)
    for (std::size_t j = i + 1; j < c.literals.size(); ++j)
      if (c.literals[i].positive != c.literals[j].positive &&
          c.literals[i].atom == c.literals[j].atom)
        return true;
  return false;
}

/// Post-mortem extraction of a training datum from a refutation: C is the
/// processed sequence in order, C+ the processed clauses that are ancestors
/// of (or equal to) the empty clause. Unprocessed clauses are ignored.
inline TrainingDatum extract_training(const ProofRecord& record, const Problem& problem) {
  if (!record.refuting) throw std::logic_error("extract_training: record has no refutation");

  std::set<std::uint64_t> in_proof;
  std::vector<std::uint64_t> stack{*record.refuting};
  while (!stack.empty()) {
    std::uint64_t id = stack.back();
    stack.pop_back();
    if (!in_proof.insert(id).second) continue;
    for (std::uint64_t p : record.clauses[id].parents) stack.push_back(p);
  }

  TrainingDatum d;
  d.problem_name = problem.name;
  for (const Clause& c : problem.clauses) {
    if (c.origin == Origin::negated_conjecture)
      d.conjecture.push_back(c);
    else
      d.axioms.push_back(c);
  }
  for (std::uint64_t id : record.processed)
    d.processed.push_back({record.clauses[id], in_proof.count(id) > 0});
  return d;
}

/// The given-clause loop: repeatedly move the highest-ranked unprocessed
/// clause to the processed set and generate its factors and all binary
/// resolvents against the processed clauses. Ranks are frozen at insertion
/// time against the then-current state features; ties break toward the lower
/// id. Terminates on refutation, saturation, timeout, or the given cap.
inline SaturationResult given_clause_loop(const Problem& problem, const ProverConfig& config) {
  if (config.timeout_seconds <= 0 && config.max_given == 0)
    throw std::invalid_argument("prover config needs a timeout or a given-clause cap");

  using clock = std::chrono::steady_clock;
  const auto start = clock::now();

  SaturationResult result;
  ProofRecord& record = result.record;

  struct PassiveKey {
    double rank;
    std::uint64_t id;
    bool operator<(const PassiveKey& o) const {
      if (rank != o.rank) return rank > o.rank;  // higher rank first
      return id < o.id;
    }
  };
  std::set<PassiveKey> passive;
  std::unordered_set<std::string> seen_forms;

  std::set<FeatureId> features;  // current state features, maintained incrementally
  if (config.feature_mode != FeatureMode::empty)
    features = state_features(record, problem, config.feature_mode);

  bool refuted = false;
  auto insert_clause = [&](Clause c) {
    c.id = record.clauses.size();
    c.age = c.id;
    if (c.empty()) {
      record.clauses.push_back(std::move(c));
      record.insertion_rank.push_back(0.0);
      record.refuting = record.clauses.size() - 1;
      refuted = true;
      return;
    }
    if (is_tautology(c)) return;
    if (!seen_forms.insert(to_text(c)).second) return;  // exact duplicate
    double rk = clause_rank(c, features, config);
    passive.insert({rk, c.id});
    record.clauses.push_back(std::move(c));
    record.insertion_rank.push_back(rk);
  };

  for (const Clause& c : problem.clauses) {
    insert_clause(c);
    if (refuted) break;
  }

  while (!refuted) {
    if (passive.empty()) {
      result.status = ProofStatus::saturated;
      break;
    }
    if (config.max_given > 0 && record.processed.size() >= config.max_given) {
      result.status = ProofStatus::given_limit;
      break;
    }
    if (config.timeout_seconds > 0 &&
        std::chrono::duration<double>(clock::now() - start).count() >= config.timeout_seconds) {
      result.status = ProofStatus::timeout;
      break;
    }

    PassiveKey best = *passive.begin();
    passive.erase(passive.begin());
    record.processed.push_back(best.id);
    const Clause given = record.clauses[best.id];  // copy: the store may reallocate below
    if (config.feature_mode == FeatureMode::processed_symbols) add_symbol_features(given, features);

    std::vector<Clause> fresh = factor(given);
    for (std::uint64_t pid : record.processed) {
      std::vector<Clause> rs = resolve(given, record.clauses[pid]);
      fresh.insert(fresh.end(), std::make_move_iterator(rs.begin()),
                   std::make_move_iterator(rs.end()));
    }
    for (Clause& nc : fresh) {
      insert_clause(std::move(nc));
      if (refuted) break;
    }
  }

  if (refuted) result.status = ProofStatus::refuted;
  result.stats.given = record.processed.size();
  result.stats.created = record.clauses.size();
  result.stats.wall_ms = std::chrono::duration<double, std::milli>(clock::now() - start).count();
  if (result.status == ProofStatus::refuted) result.training = extract_training(record, problem);
  return result;
}

}  // namespace nbres
