#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <set>
#include <stdexcept>

#include "nbres/ids.hpp"
#include "nbres/occurrence.hpp"

namespace nbres {

/// One training example: a label seen with a set of features, weighted by
/// an occurrence value from the monoid.
template <CommutativeMonoid Occ>
struct BasicExampleTriple {
  std::set<FeatureId> features;
  LabelId label;
  Occ occ{};
};

using ExampleTriple = BasicExampleTriple<Occurrence>;

/// Precomputed classification data over an arbitrary commutative monoid of
/// occurrences: per-label sums, per-(label,feature) sums, and the document
/// counts backing idf. Ordered maps keep serialization and equality
/// deterministic. Training order does not matter.
template <CommutativeMonoid Occ>
struct ClassifierData {
  std::uint64_t total = 0;  // number of triples trained
  std::map<LabelId, Occ> label_occ;
  std::map<LabelId, std::map<FeatureId, Occ>> pair_occ;
  std::map<FeatureId, std::uint64_t> feature_docs;

  void train(const BasicExampleTriple<Occ>& t) {
    if (t.occ == Occ{}) return;  // zero triple is a no-op
    total += 1;
    auto& lo = label_occ[t.label];
    lo = lo + t.occ;
    auto& row = pair_occ[t.label];
    for (FeatureId f : t.features) {
      auto& po = row[f];
      po = po + t.occ;
      feature_docs[f] += 1;
    }
    if (row.empty()) pair_occ.erase(t.label);
  }

  // Pointwise sum of all four fields; equivalent to training all of the
  // other side's triples into this one.
  void merge(const ClassifierData& other) {
    total += other.total;
    for (const auto& [l, o] : other.label_occ) {
      auto& lo = label_occ[l];
      lo = lo + o;
    }
    for (const auto& [l, row] : other.pair_occ) {
      auto& mine = pair_occ[l];
      for (const auto& [f, o] : row) {
        auto& po = mine[f];
        po = po + o;
      }
    }
    for (const auto& [f, n] : other.feature_docs) feature_docs[f] += n;
  }

  friend bool operator==(const ClassifierData&, const ClassifierData&) = default;
};

using PosNegData = ClassifierData<Occurrence>;

/// Constants of the ranking formula plus the engineering knobs around it.
struct GuidanceParams {
  double c = 0.05;     // probability for a never-co-occurring (label,feature) pair
  double cp = 1.0;     // weight of positive occurrences
  double cn = 0.5;     // weight of negative occurrences
  double gamma = 1.0;  // overall scale of the guided term
  double eps = 1e-8;   // positivity floor applied before logarithms
  double default_rank = 0.0;  // rank of labels never seen in training
};

inline double idf(const PosNegData& data, FeatureId f) {
  if (data.total == 0) throw std::domain_error("idf on empty classifier");
  auto it = data.feature_docs.find(f);
  if (it == data.feature_docs.end() || it->second == 0) return 1.0;  // unseen feature carries no weight
  return static_cast<double>(data.total) / static_cast<double>(it->second);
}

/// P(l): confidence |p-n|/(p+n) times the weighted occurrence count,
/// floored at eps so its logarithm stays defined.
inline double p_label(const PosNegData& data, const GuidanceParams& params, LabelId l) {
  auto it = data.label_occ.find(l);
  if (it == data.label_occ.end() || it->second.zero())
    throw std::out_of_range("p_label: unseen label");
  auto p = static_cast<double>(it->second.pos);
  auto n = static_cast<double>(it->second.neg);
  double confidence = std::abs(p - n) / (p + n);
  return std::max(params.eps, confidence * (params.cp * p + params.cn * n));
}

/// P(f|l): the c constant when the pair was never seen together, otherwise
/// cp*pf/p + cn*nf/n with 0/0 taken as 0.
inline double p_feature_given_label(const PosNegData& data, const GuidanceParams& params,
                                    LabelId l, FeatureId f) {
  auto lit = data.label_occ.find(l);
  if (lit == data.label_occ.end()) throw std::out_of_range("p_feature_given_label: unseen label");
  Occurrence pair{};
  if (auto rit = data.pair_occ.find(l); rit != data.pair_occ.end()) {
    if (auto fit = rit->second.find(f); fit != rit->second.end()) pair = fit->second;
  }
  if (pair.zero()) return params.c;
  auto p = static_cast<double>(lit->second.pos);
  auto n = static_cast<double>(lit->second.neg);
  double term = 0.0;
  if (lit->second.pos > 0) term += params.cp * static_cast<double>(pair.pos) / p;
  if (lit->second.neg > 0) term += params.cn * static_cast<double>(pair.neg) / n;
  return std::max(params.eps, term);
}

/// Log-domain relevance of a label for a feature set:
/// gamma * (log P(l) + sum over F of log(idf(f)) * log P(f|l)).
/// Unseen labels rank at default_rank; every log argument is floored at eps.
inline double rank(const PosNegData& data, const GuidanceParams& params, LabelId l,
                   const std::set<FeatureId>& features) {
  auto it = data.label_occ.find(l);
  if (it == data.label_occ.end() || it->second.zero()) return params.default_rank;
  double r = std::log(p_label(data, params, l));
  for (FeatureId f : features) {
    double w = std::log(idf(data, f));
    double pf = std::max(params.eps, p_feature_given_label(data, params, l, f));
    r += w * std::log(pf);
  }
  return params.gamma * r;
}

}  // namespace nbres
