#pragma once

#include <set>
#include <string>
#include <vector>

#include "nbres/term.hpp"
#include "nbres/unify.hpp"

namespace nbres {

/// Rename the clause's variables to X1, X2, ... in first-occurrence order.
/// Applied to every derived clause so that names stay short and derivations
/// are reproducible.
inline Clause canonicalize_variables(Clause c) {
  Substitution renaming;
  std::size_t counter = 0;
  for (const std::string& v : variables_of(c)) renaming.emplace(v, mk_var("X" + std::to_string(++counter)));
  for (Literal& l : c.literals) l = apply(renaming, l);
  return c;
}

/// Rename the clause's variables away from `avoid`, picking Y1, Y2, ... names
/// that collide with nothing. Deterministic.
inline Clause rename_apart(Clause c, const std::set<std::string>& avoid) {
  Substitution renaming;
  std::set<std::string> used = avoid;
  std::size_t counter = 0;
  for (const std::string& v : variables_of(c)) {
    std::string fresh;
    do {
      fresh = "Y" + std::to_string(++counter);
    } while (used.count(fresh));
    used.insert(fresh);
    renaming.emplace(v, mk_var(std::move(fresh)));
  }
  for (Literal& l : c.literals) l = apply(renaming, l);
  return c;
}

namespace detail {

inline Clause derived(std::vector<Literal> literals, std::vector<std::uint64_t> parents,
                      std::string rule) {
  Clause out;
  out.literals = std::move(literals);
  out.origin = Origin::derived;
  out.parents = std::move(parents);
  out.rule = std::move(rule);
  return canonicalize_variables(std::move(out));
}

}  // namespace detail

/// All binary resolvents of c1 against c2 on complementary literal pairs with
/// unifiable atoms. c2 is renamed apart from c1 internally; resolvents record
/// parents (c1.id, c2.id) and rule "res".
inline std::vector<Clause> resolve(const Clause& c1, const Clause& c2) {
  std::set<std::string> avoid;
  for (const std::string& v : variables_of(c1)) avoid.insert(v);
  Clause right = rename_apart(c2, avoid);

  std::vector<Clause> out;
  for (std::size_t i = 0; i < c1.literals.size(); ++i) {
    const Literal& li = c1.literals[i];
    for (std::size_t j = 0; j < right.literals.size(); ++j) {
      const Literal& lj = right.literals[j];
      if (li.positive == lj.positive) continue;
      if (li.atom.symbol != lj.atom.symbol || li.atom.args.size() != lj.atom.args.size()) continue;
      auto mgu = unify(li.atom, lj.atom);
      if (!mgu) continue;
      std::vector<Literal> literals;
      literals.reserve(c1.literals.size() + right.literals.size() - 2);
      for (std::size_t k = 0; k < c1.literals.size(); ++k)
        if (k != i) literals.push_back(apply(*mgu, c1.literals[k]));
      for (std::size_t k = 0; k < right.literals.size(); ++k)
        if (k != j) literals.push_back(apply(*mgu, right.literals[k]));
      out.push_back(detail::derived(std::move(literals), {c1.id, c2.id}, "res"));
    }
  }
  return out;
}

/// All factors of c: for each pair of same-polarity literals with unifiable
/// atoms, the instance with the later occurrence dropped. Rule "fac".
inline std::vector<Clause> factor(const Clause& c) {
  std::vector<Clause> out;
  for (std::size_t i = 0; i < c.literals.size(); ++i) {
    for (std::size_t j = i + 1; j < c.literals.size(); ++j) {
      const Literal& li = c.literals[i];
      const Literal& lj = c.literals[j];
      if (li.positive != lj.positive) continue;
      if (li.atom.symbol != lj.atom.symbol || li.atom.args.size() != lj.atom.args.size()) continue;
      auto mgu = unify(li.atom, lj.atom);
      if (!mgu) continue;
      std::vector<Literal> literals;
      literals.reserve(c.literals.size() - 1);
      for (std::size_t k = 0; k < c.literals.size(); ++k)
        if (k != j) literals.push_back(apply(*mgu, c.literals[k]));
      out.push_back(detail::derived(std::move(literals), {c.id}, "fac"));
    }
  }
  return out;
}

}  // namespace nbres
