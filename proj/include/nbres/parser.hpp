#pragma once

#include <cctype>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>

#include "nbres/term.hpp"

namespace nbres {

struct ParseError : std::runtime_error {
  int line;
  int col;
  ParseError(int line_, int col_, const std::string& what)
      : std::runtime_error(std::to_string(line_) + ":" + std::to_string(col_) + ": " + what),
        line(line_),
        col(col_) {}
};

namespace detail {

// Recursive-descent reader for the TPTP CNF subset:
//   cnf(<name>, <role>, <clause>).
// clause: lit | lit | ...   (optionally parenthesized)
// literal: [~]atom, or $false alone for the empty clause
// atom: sym or sym(term,...); variables are uppercase-initial; % comments.
class CnfReader {
 public:
  explicit CnfReader(std::string_view text) : text_(text) {}

  bool at_end() {
    skip_ws();
    return pos_ >= text_.size();
  }

  Clause read_annotated(std::string& name_out, Origin& origin_out) {
    skip_ws();
    int l = line_, c = col_;
    std::string kw = read_word("formula keyword");
    if (kw == "include") throw ParseError(l, c, "include directives are not supported");
    if (kw != "cnf") throw ParseError(l, c, "expected 'cnf', got '" + kw + "'");
    expect('(');
    name_out = read_word("clause name");
    expect(',');
    skip_ws();
    l = line_, c = col_;
    std::string role = read_word("role");
    if (role == "axiom" || role == "hypothesis")
      origin_out = Origin::axiom;
    else if (role == "negated_conjecture")
      origin_out = Origin::negated_conjecture;
    else
      throw ParseError(l, c, "unknown role '" + role + "'");
    expect(',');
    Clause cl = read_clause();
    expect(')');
    expect('.');
    return cl;
  }

  Clause read_clause() {
    skip_ws();
    bool paren = peek() == '(';
    if (paren) get();
    Clause cl;
    skip_ws();
    if (peek() == '$') {
      int l = line_, c = col_;
      std::string tok = read_dollar_word();
      if (tok != "$false") throw ParseError(l, c, "unknown token '" + tok + "'");
      // empty clause; must stand alone
      skip_ws();
      if (peek() == '|') throw ParseError(line_, col_, "$false cannot be part of a disjunction");
    } else {
      cl.literals.push_back(read_literal());
      skip_ws();
      while (peek() == '|') {
        get();
        cl.literals.push_back(read_literal());
        skip_ws();
      }
    }
    if (paren) expect(')');
    return cl;
  }

  Literal read_literal() {
    skip_ws();
    Literal lit;
    if (peek() == '~') {
      get();
      lit.positive = false;
    }
    skip_ws();
    int l = line_, c = col_;
    Term atom = read_term();
    if (atom.is_var()) throw ParseError(l, c, "atom cannot be a variable");
    lit.atom = std::move(atom);
    return lit;
  }

  Term read_term() {
    skip_ws();
    int l = line_, c = col_;
    std::string word = read_word("term");
    bool var = std::isupper(static_cast<unsigned char>(word[0])) != 0;
    if (var) return mk_var(std::move(word));
    std::vector<Term> args;
    skip_ws();
    if (peek() == '(') {
      get();
      args.push_back(read_term());
      skip_ws();
      while (peek() == ',') {
        get();
        args.push_back(read_term());
        skip_ws();
      }
      expect(')');
    }
    check_arity(word, args.size(), l, c);
    return mk_app(std::move(word), std::move(args));
  }

  void reset_arities() { arities_.clear(); }

 private:
  void check_arity(const std::string& sym, std::size_t arity, int l, int c) {
    auto [it, inserted] = arities_.emplace(sym, arity);
    if (!inserted && it->second != arity)
      throw ParseError(l, c,
                       "symbol '" + sym + "' used with arity " + std::to_string(arity) +
                           " but previously with arity " + std::to_string(it->second));
  }

  char peek() { return pos_ < text_.size() ? text_[pos_] : '\0'; }

  char get() {
    if (pos_ >= text_.size()) throw ParseError(line_, col_, "unexpected end of input");
    char ch = text_[pos_++];
    if (ch == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    return ch;
  }

  void skip_ws() {
    while (pos_ < text_.size()) {
      char ch = text_[pos_];
      if (ch == '%') {
        while (pos_ < text_.size() && text_[pos_] != '\n') get();
      } else if (std::isspace(static_cast<unsigned char>(ch))) {
        get();
      } else {
        break;
      }
    }
  }

  void expect(char ch) {
    skip_ws();
    if (peek() != ch)
      throw ParseError(line_, col_,
                       std::string("expected '") + ch + "', got " +
                           (pos_ < text_.size() ? std::string("'") + peek() + "'" : "end of input"));
    get();
  }

  static bool word_char(char ch) {
    return std::isalnum(static_cast<unsigned char>(ch)) || ch == '_';
  }

  std::string read_word(const char* what) {
    skip_ws();
    if (pos_ >= text_.size() || !word_char(peek()))
      throw ParseError(line_, col_, std::string("expected ") + what);
    std::string out;
    while (pos_ < text_.size() && word_char(peek())) out += get();
    return out;
  }

  std::string read_dollar_word() {
    std::string out;
    out += get();  // '$'
    while (pos_ < text_.size() && word_char(peek())) out += get();
    return out;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
  std::map<std::string, std::size_t> arities_;
};

}  // namespace detail

/// Parse a TPTP CNF subset problem. Symbol arities must be consistent across
/// the whole problem. Throws ParseError with line/column on bad input.
inline Problem parse_problem(std::string_view text, std::string name = "") {
  detail::CnfReader reader(text);
  Problem prob;
  prob.name = std::move(name);
  std::uint64_t next_id = 0;
  while (!reader.at_end()) {
    std::string clause_name;
    Origin origin = Origin::axiom;
    Clause cl = reader.read_annotated(clause_name, origin);
    cl.id = next_id;
    cl.age = next_id;
    ++next_id;
    cl.origin = origin;
    prob.clauses.push_back(std::move(cl));
  }
  if (prob.clauses.empty()) throw ParseError(1, 1, "problem contains no clauses");
  return prob;
}

/// Parse one bare clause in canonical form, e.g. "~q(X)|p(X)" or "$false".
inline Clause parse_clause_text(std::string_view text) {
  detail::CnfReader reader(text);
  Clause cl = reader.read_clause();
  if (!reader.at_end()) throw ParseError(1, 1, "trailing input after clause");
  return cl;
}

}  // namespace nbres
