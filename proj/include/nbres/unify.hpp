#pragma once

#include <map>
#include <optional>
#include <string>

#include "nbres/term.hpp"

namespace nbres {

using Substitution = std::map<std::string, Term>;

/// Apply an idempotent substitution (one pass).
inline Term apply(const Substitution& s, const Term& t) {
  if (t.is_var()) {
    auto it = s.find(t.symbol);
    return it == s.end() ? t : it->second;
  }
  Term out = mk_app(t.symbol);
  out.args.reserve(t.args.size());
  for (const Term& a : t.args) out.args.push_back(apply(s, a));
  return out;
}

inline Literal apply(const Substitution& s, const Literal& l) {
  return Literal{l.positive, apply(s, l.atom)};
}

namespace detail {

// Bindings are kept triangular while unifying; walk resolves a variable to
// its current representative.
inline const Term* walk(const Term& t, const Substitution& b) {
  const Term* cur = &t;
  while (cur->is_var()) {
    auto it = b.find(cur->symbol);
    if (it == b.end()) break;
    cur = &it->second;
  }
  return cur;
}

inline bool occurs(const std::string& var, const Term& t, const Substitution& b) {
  const Term* w = walk(t, b);
  if (w->is_var()) return w->symbol == var;
  for (const Term& a : w->args)
    if (occurs(var, a, b)) return true;
  return false;
}

inline bool unify_into(const Term& a, const Term& b, Substitution& bind) {
  const Term* x = walk(a, bind);
  const Term* y = walk(b, bind);
  if (x->is_var() && y->is_var() && x->symbol == y->symbol) return true;
  if (x->is_var()) {
    if (occurs(x->symbol, *y, bind)) return false;
    bind.emplace(x->symbol, *y);
    return true;
  }
  if (y->is_var()) {
    if (occurs(y->symbol, *x, bind)) return false;
    bind.emplace(y->symbol, *x);
    return true;
  }
  if (x->symbol != y->symbol || x->args.size() != y->args.size()) return false;
  for (std::size_t i = 0; i < x->args.size(); ++i)
    if (!unify_into(x->args[i], y->args[i], bind)) return false;
  return true;
}

inline Term resolve_bindings(const Term& t, const Substitution& bind) {
  const Term* w = walk(t, bind);
  if (w->is_var()) return *w;
  Term out = mk_app(w->symbol);
  out.args.reserve(w->args.size());
  for (const Term& a : w->args) out.args.push_back(resolve_bindings(a, bind));
  return out;
}

}  // namespace detail

/// Most general unifier of two terms, or nullopt. Occurs check enforced.
/// The result is idempotent. Callers rename the terms apart beforehand.
inline std::optional<Substitution> unify(const Term& a, const Term& b) {
  Substitution bind;
  if (!detail::unify_into(a, b, bind)) return std::nullopt;
  Substitution out;
  for (const auto& [var, _] : bind) out.emplace(var, detail::resolve_bindings(mk_var(var), bind));
  return out;
}

}  // namespace nbres
