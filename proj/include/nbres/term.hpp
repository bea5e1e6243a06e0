#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace nbres {

/// First-order term: a variable or an application of a symbol to argument
/// terms. Constants are zero-argument applications. Values are immutable by
/// convention once built.
struct Term {
  enum class Kind { variable, application };
  Kind kind = Kind::application;
  std::string symbol;
  std::vector<Term> args;

  bool is_var() const { return kind == Kind::variable; }

  friend bool operator==(const Term&, const Term&) = default;
};

inline Term mk_var(std::string name) {
  return Term{Term::Kind::variable, std::move(name), {}};
}
inline Term mk_app(std::string symbol, std::vector<Term> args = {}) {
  return Term{Term::Kind::application, std::move(symbol), std::move(args)};
}

/// A possibly negated atom. The atom is always an application.
struct Literal {
  bool positive = true;
  Term atom;

  friend bool operator==(const Literal&, const Literal&) = default;
};

enum class Origin { axiom, negated_conjecture, derived };

/// CNF clause with search identity: id is unique per proof search, age is
/// the creation order, derived clauses carry their parents and rule name.
struct Clause {
  std::vector<Literal> literals;
  std::uint64_t id = 0;
  std::uint64_t age = 0;
  Origin origin = Origin::axiom;
  std::vector<std::uint64_t> parents;
  std::string rule;  // "res" or "fac" for derived clauses

  bool empty() const { return literals.empty(); }

  friend bool operator==(const Clause& a, const Clause& b) {
    return a.literals == b.literals;  // identity fields don't define the clause
  }
};

struct Problem {
  std::string name;
  std::vector<Clause> clauses;  // origins axiom / negated_conjecture
};

// ---- canonical text form ----
// Deterministic, whitespace-free; round-trips through the parser.

inline void append_term(std::string& out, const Term& t) {
  out += t.symbol;
  if (!t.args.empty()) {
    out += '(';
    for (std::size_t i = 0; i < t.args.size(); ++i) {
      if (i) out += ',';
      append_term(out, t.args[i]);
    }
    out += ')';
  }
}

inline std::string to_text(const Term& t) {
  std::string out;
  append_term(out, t);
  return out;
}

inline std::string to_text(const Literal& l) {
  std::string out;
  if (!l.positive) out += '~';
  append_term(out, l.atom);
  return out;
}

/// Canonical clause serialization: literals joined by '|', the empty clause
/// prints as "$false".
inline std::string to_text(const Clause& c) {
  if (c.literals.empty()) return "$false";
  std::string out;
  for (std::size_t i = 0; i < c.literals.size(); ++i) {
    if (i) out += '|';
    if (!c.literals[i].positive) out += '~';
    append_term(out, c.literals[i].atom);
  }
  return out;
}

// ---- symbol and variable traversal ----

template <typename F>
void for_each_subterm(const Term& t, F&& f) {
  f(t);
  for (const Term& a : t.args) for_each_subterm(a, f);
}

/// Number of predicate and function symbol occurrences; variables don't count.
inline std::size_t symbol_count(const Clause& c) {
  std::size_t n = 0;
  for (const Literal& l : c.literals)
    for_each_subterm(l.atom, [&](const Term& t) {
      if (!t.is_var()) ++n;
    });
  return n;
}

/// Function symbols (constants included); the predicate symbol is skipped.
inline void collect_function_symbols(const Clause& c, std::set<std::string>& out) {
  for (const Literal& l : c.literals)
    for (const Term& a : l.atom.args)
      for_each_subterm(a, [&](const Term& t) {
        if (!t.is_var()) out.insert(t.symbol);
      });
}

/// Predicate and function symbols together.
inline void collect_all_symbols(const Clause& c, std::set<std::string>& out) {
  for (const Literal& l : c.literals)
    for_each_subterm(l.atom, [&](const Term& t) {
      if (!t.is_var()) out.insert(t.symbol);
    });
}

/// Variable names in first-occurrence order.
inline void collect_variables(const Term& t, std::vector<std::string>& order,
                              std::set<std::string>& seen) {
  for_each_subterm(t, [&](const Term& s) {
    if (s.is_var() && seen.insert(s.symbol).second) order.push_back(s.symbol);
  });
}

inline std::vector<std::string> variables_of(const Clause& c) {
  std::vector<std::string> order;
  std::set<std::string> seen;
  for (const Literal& l : c.literals) collect_variables(l.atom, order, seen);
  return order;
}

inline bool is_ground(const Clause& c) { return variables_of(c).empty(); }

}  // namespace nbres
