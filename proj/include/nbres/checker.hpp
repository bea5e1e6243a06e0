#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "nbres/saturation.hpp"
#include "nbres/term.hpp"

namespace nbres {

/// Re-verification of a recorded refutation, independent of the inference
/// code: every derived clause in the proof DAG must be a resolvent or factor
/// of its recorded parents under some recomputed unifier, and every leaf must
/// be an input clause. Uses its own equation-solving unifier and compares
/// clauses up to variable renaming.
namespace check {

namespace detail {

inline Term substitute(const std::map<std::string, Term>& s, const Term& t) {
  if (t.is_var()) {
    auto it = s.find(t.symbol);
    return it == s.end() ? t : substitute(s, it->second);
  }
  Term out = mk_app(t.symbol);
  for (const Term& a : t.args) out.args.push_back(substitute(s, a));
  return out;
}

inline bool var_in(const std::string& v, const Term& t) {
  if (t.is_var()) return t.symbol == v;
  for (const Term& a : t.args)
    if (var_in(v, a)) return true;
  return false;
}

// Equation-set unification: keep a worklist of term pairs, eliminating one
// variable at a time by substituting through the remaining equations.
inline std::optional<std::map<std::string, Term>> solve(const Term& lhs, const Term& rhs) {
  std::vector<std::pair<Term, Term>> work{{lhs, rhs}};
  std::map<std::string, Term> solution;
  while (!work.empty()) {
    auto [a, b] = std::move(work.back());
    work.pop_back();
    a = substitute(solution, a);
    b = substitute(solution, b);
    if (a == b) continue;
    if (a.is_var() || b.is_var()) {
      if (!a.is_var()) std::swap(a, b);
      if (var_in(a.symbol, b)) return std::nullopt;  // occurs check
      for (auto& [v, t] : solution) {
        std::map<std::string, Term> one{{a.symbol, b}};
        t = substitute(one, t);
      }
      solution.emplace(a.symbol, b);
      continue;
    }
    if (a.symbol != b.symbol || a.args.size() != b.args.size()) return std::nullopt;
    for (std::size_t i = 0; i < a.args.size(); ++i) work.emplace_back(a.args[i], b.args[i]);
  }
  return solution;
}

inline Clause substitute(const std::map<std::string, Term>& s, const Clause& c) {
  Clause out = c;
  for (Literal& l : out.literals) l.atom = substitute(s, l.atom);
  return out;
}

// Canonical variant text: variables renamed V1, V2, ... in first-occurrence
// order, so equality up to renaming becomes string equality.
inline std::string variant_key(const Clause& c) {
  std::map<std::string, std::string> names;
  std::string out;
  auto emit = [&](auto&& self, const Term& t) -> void {
    if (t.is_var()) {
      auto it = names.find(t.symbol);
      if (it == names.end())
        it = names.emplace(t.symbol, "V" + std::to_string(names.size() + 1)).first;
      out += it->second;
    } else {
      out += t.symbol;
    }
    if (!t.args.empty()) {
      out += '(';
      for (std::size_t i = 0; i < t.args.size(); ++i) {
        if (i) out += ',';
        self(self, t.args[i]);
      }
      out += ')';
    }
  };
  if (c.literals.empty()) return "$false";
  for (std::size_t i = 0; i < c.literals.size(); ++i) {
    if (i) out += '|';
    if (!c.literals[i].positive) out += '~';
    emit(emit, c.literals[i].atom);
  }
  return out;
}

// Total simultaneous renaming into a private namespace; L-/R-prefixed names
// cannot clash with each other no matter what the inputs were called.
inline Clause rewrite_vars(const Clause& c, const char* prefix) {
  std::map<std::string, std::string> renaming;
  std::size_t counter = 0;
  for (const std::string& v : variables_of(c)) renaming.emplace(v, prefix + std::to_string(++counter));
  auto walk = [&](auto&& self, Term& t) -> void {
    if (t.is_var()) t.symbol = renaming.at(t.symbol);
    for (Term& a : t.args) self(self, a);
  };
  Clause out = c;
  for (Literal& l : out.literals) walk(walk, l.atom);
  return out;
}

inline bool check_resolution(const Clause& left_in, const Clause& right_in, const Clause& conclusion) {
  const std::string want = variant_key(conclusion);
  Clause left = rewrite_vars(left_in, "L");
  Clause right = rewrite_vars(right_in, "R");
  for (std::size_t i = 0; i < left.literals.size(); ++i) {
    for (std::size_t j = 0; j < right.literals.size(); ++j) {
      const Literal& li = left.literals[i];
      const Literal& lj = right.literals[j];
      if (li.positive == lj.positive) continue;
      auto sol = solve(li.atom, lj.atom);
      if (!sol) continue;
      Clause res;
      for (std::size_t k = 0; k < left.literals.size(); ++k)
        if (k != i) res.literals.push_back({left.literals[k].positive,
                                            substitute(*sol, left.literals[k].atom)});
      for (std::size_t k = 0; k < right.literals.size(); ++k)
        if (k != j) res.literals.push_back({right.literals[k].positive,
                                            substitute(*sol, right.literals[k].atom)});
      if (variant_key(res) == want) return true;
    }
  }
  return false;
}

inline bool check_factoring(const Clause& parent, const Clause& conclusion) {
  const std::string want = variant_key(conclusion);
  for (std::size_t i = 0; i < parent.literals.size(); ++i) {
    for (std::size_t j = i + 1; j < parent.literals.size(); ++j) {
      if (parent.literals[i].positive != parent.literals[j].positive) continue;
      auto sol = solve(parent.literals[i].atom, parent.literals[j].atom);
      if (!sol) continue;
      Clause fac;
      for (std::size_t k = 0; k < parent.literals.size(); ++k)
        if (k != j) fac.literals.push_back({parent.literals[k].positive,
                                            substitute(*sol, parent.literals[k].atom)});
      if (variant_key(fac) == want) return true;
    }
  }
  return false;
}

}  // namespace detail

struct CheckReport {
  bool ok = true;
  std::size_t steps_checked = 0;
  std::string message;
};

/// Walk the ancestor closure of the refuting clause and re-verify every step.
inline CheckReport check_refutation(const ProofRecord& record, const Problem& problem) {
  CheckReport report;
  if (!record.refuting) {
    report.ok = false;
    report.message = "record has no refutation";
    return report;
  }

  std::set<std::string> inputs;
  for (const Clause& c : problem.clauses) inputs.insert(detail::variant_key(c));

  std::set<std::uint64_t> closure;
  std::vector<std::uint64_t> stack{*record.refuting};
  while (!stack.empty()) {
    std::uint64_t id = stack.back();
    stack.pop_back();
    if (!closure.insert(id).second) continue;
    for (std::uint64_t p : record.clauses[id].parents) stack.push_back(p);
  }

  auto fail = [&](std::uint64_t id, const std::string& why) {
    report.ok = false;
    report.message = "clause " + std::to_string(id) + " (" + to_text(record.clauses[id]) + "): " + why;
  };

  for (std::uint64_t id : closure) {
    const Clause& c = record.clauses[id];
    if (c.origin != Origin::derived) {
      if (!inputs.count(detail::variant_key(c))) {
        fail(id, "leaf is not an input clause");
        return report;
      }
      continue;
    }
    for (std::uint64_t p : c.parents) {
      if (p >= c.id) {
        fail(id, "parent does not precede the clause");
        return report;
      }
    }
    bool ok = false;
    if (c.rule == "res" && c.parents.size() == 2)
      ok = detail::check_resolution(record.clauses[c.parents[0]], record.clauses[c.parents[1]], c);
    else if (c.rule == "fac" && c.parents.size() == 1)
      ok = detail::check_factoring(record.clauses[c.parents[0]], c);
    if (!ok) {
      fail(id, "no derivation via rule '" + c.rule + "' reproduces this clause");
      return report;
    }
    ++report.steps_checked;
  }
  return report;
}

}  // namespace check
}  // namespace nbres
