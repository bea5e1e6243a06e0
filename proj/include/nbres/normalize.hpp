#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <string>

#include "nbres/ids.hpp"
#include "nbres/term.hpp"

namespace nbres {

/// Training-data postprocessing options; also selects the normalization
/// applied to a clause before it is hashed into a label at rank time.
enum class PostprocMode { none, skolem_filter, consistent_skolem, consistent_normal, inference_filter };

inline const char* to_string(PostprocMode m) {
  switch (m) {
    case PostprocMode::none: return "none";
    case PostprocMode::skolem_filter: return "skolem-filter";
    case PostprocMode::consistent_skolem: return "consistent-skolem";
    case PostprocMode::consistent_normal: return "consistent-normal";
    case PostprocMode::inference_filter: return "inference-filter";
  }
  return "?";
}

inline bool postproc_from_string(const std::string& s, PostprocMode& out) {
  for (PostprocMode m : {PostprocMode::none, PostprocMode::skolem_filter, PostprocMode::consistent_skolem,
                         PostprocMode::consistent_normal, PostprocMode::inference_filter}) {
    if (s == to_string(m)) {
      out = m;
      return true;
    }
  }
  return false;
}

using SymbolPredicate = std::function<bool(const std::string&)>;

/// Skolem symbols are recognized syntactically, by name prefix.
inline SymbolPredicate skolem_prefix_test(std::string prefix = "sk") {
  return [prefix = std::move(prefix)](const std::string& sym) {
    return sym.size() >= prefix.size() && sym.compare(0, prefix.size(), prefix) == 0;
  };
}

/// True iff any function symbol of the clause satisfies the test.
/// Predicates and variables are never Skolem constants.
inline bool contains_skolem(const Clause& c, const SymbolPredicate& is_skolem) {
  for (const Literal& l : c.literals)
    for (const Term& a : l.atom.args) {
      bool found = false;
      for_each_subterm(a, [&](const Term& t) {
        if (!t.is_var() && is_skolem(t.symbol)) found = true;
      });
      if (found) return true;
    }
  return false;
}

inline bool contains_skolem(const Clause& c) { return contains_skolem(c, skolem_prefix_test()); }

namespace detail {

// Literal skeleton: the serialized literal with every symbol and variable
// replaced by '#'. Clause variants that differ only in literal order get the
// same multiset of skeletons, so a stable sort on them fixes a canonical
// literal order before renaming.
inline void append_skeleton(std::string& out, const Term& t) {
  out += '#';
  if (!t.args.empty()) {
    out += '(';
    for (std::size_t i = 0; i < t.args.size(); ++i) {
      if (i) out += ',';
      append_skeleton(out, t.args[i]);
    }
    out += ')';
  }
}

inline std::string skeleton(const Literal& l) {
  std::string out;
  if (!l.positive) out += '~';
  append_skeleton(out, l.atom);
  return out;
}

inline Clause sort_literals_by_skeleton(Clause c) {
  std::stable_sort(c.literals.begin(), c.literals.end(), [](const Literal& a, const Literal& b) {
    return skeleton(a) < skeleton(b);
  });
  return c;
}

}  // namespace detail

/// Rename Skolem function symbols to c1, c2, ... in first-occurrence order
/// over the canonically ordered literal sequence; everything else is fixed.
inline Clause normalize_skolem(const Clause& c, const SymbolPredicate& is_skolem) {
  Clause out = detail::sort_literals_by_skeleton(c);
  std::map<std::string, std::string> renaming;
  auto rename = [&](auto&& self, Term& t, bool predicate_position) -> void {
    if (!t.is_var() && !predicate_position && is_skolem(t.symbol)) {
      auto it = renaming.find(t.symbol);
      if (it == renaming.end())
        it = renaming.emplace(t.symbol, "c" + std::to_string(renaming.size() + 1)).first;
      t.symbol = it->second;
    }
    for (Term& a : t.args) self(self, a, false);
  };
  for (Literal& l : out.literals) rename(rename, l.atom, true);
  return out;
}

inline Clause normalize_skolem(const Clause& c) { return normalize_skolem(c, skolem_prefix_test()); }

/// Rename every predicate/function symbol to c1, c2, ... (one shared counter)
/// and every variable to X1, X2, ..., in first-occurrence order over the
/// canonically ordered literal sequence.
inline Clause normalize_all(const Clause& c) {
  Clause out = detail::sort_literals_by_skeleton(c);
  std::map<std::string, std::string> symbols;
  std::map<std::string, std::string> vars;
  auto rename = [&](auto&& self, Term& t) -> void {
    auto& table = t.is_var() ? vars : symbols;
    auto it = table.find(t.symbol);
    if (it == table.end()) {
      std::string fresh = (t.is_var() ? "X" : "c") + std::to_string(table.size() + 1);
      it = table.emplace(t.symbol, std::move(fresh)).first;
    }
    t.symbol = it->second;
    for (Term& a : t.args) self(self, a);
  };
  for (Literal& l : out.literals) rename(rename, l.atom);
  return out;
}

/// The learning identity of a clause: hash of the canonical serialization of
/// its mode-specific normal form. Filtering modes hash the clause as is;
/// their filtering happens in the training pipeline.
inline LabelId label_of(const Clause& c, PostprocMode mode,
                        const SymbolPredicate& is_skolem) {
  switch (mode) {
    case PostprocMode::consistent_skolem:
      return label_from_bytes(to_text(normalize_skolem(c, is_skolem)));
    case PostprocMode::consistent_normal:
      return label_from_bytes(to_text(normalize_all(c)));
    case PostprocMode::none:
    case PostprocMode::skolem_filter:
    case PostprocMode::inference_filter:
      break;
  }
  return label_from_bytes(to_text(c));
}

inline LabelId label_of(const Clause& c, PostprocMode mode = PostprocMode::none) {
  return label_of(c, mode, skolem_prefix_test());
}

}  // namespace nbres
