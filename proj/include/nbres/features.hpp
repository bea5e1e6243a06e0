#pragma once

#include <set>
#include <string>
#include <vector>

#include "nbres/ids.hpp"
#include "nbres/term.hpp"

namespace nbres {

/// How the prover state is characterized when a clause is ranked.
enum class FeatureMode { empty, problem_axioms, processed_symbols };

inline const char* to_string(FeatureMode m) {
  switch (m) {
    case FeatureMode::empty: return "empty";
    case FeatureMode::problem_axioms: return "axioms";
    case FeatureMode::processed_symbols: return "processed-symbols";
  }
  return "?";
}

inline bool features_from_string(const std::string& s, FeatureMode& out) {
  for (FeatureMode m :
       {FeatureMode::empty, FeatureMode::problem_axioms, FeatureMode::processed_symbols}) {
    if (s == to_string(m)) {
      out = m;
      return true;
    }
  }
  return false;
}

inline FeatureId symbol_feature(const std::string& symbol) { return feature_from_bytes(symbol); }

/// One feature per axiom clause, from its canonical serialization. Used both
/// at rank time and when replaying features from a training datum, so the
/// two sides agree for every postprocessing mode.
inline std::set<FeatureId> axiom_features(const std::vector<Clause>& axioms) {
  std::set<FeatureId> out;
  for (const Clause& c : axioms) out.insert(feature_from_bytes(to_text(c)));
  return out;
}

/// Add features for all predicate/function symbols of the clause.
inline void add_symbol_features(const Clause& c, std::set<FeatureId>& out) {
  std::set<std::string> symbols;
  collect_all_symbols(c, symbols);
  for (const std::string& s : symbols) out.insert(symbol_feature(s));
}

}  // namespace nbres
