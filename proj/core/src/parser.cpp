#include "sbo/parser.hpp"

#include <cctype>
#include <map>
#include <optional>
#include <sstream>
#include <variant>
#include <vector>

namespace sbo {

std::string atom_token(AtomKind k) {
  switch (k) {
    case AtomKind::Id: return "id";
    case AtomKind::SliceD: return "d";
    case AtomKind::SliceDelta: return "delta";
    case AtomKind::SliceLap: return "Delta";
    case AtomKind::SliceStar: return "star";
    case AtomKind::AmbientD: return "dbar";
    case AtomKind::AmbientDelta: return "deltabar";
    case AtomKind::AmbientLap: return "Delta_bar";
    case AtomKind::AmbientStar: return "star_bar";
    case AtomKind::Pullback: return "iota";
    case AtomKind::InteriorN: return "i_n";
    case AtomKind::PartialN: return "dn";
    case AtomKind::TangD: return "d_tan";
    case AtomKind::TangDelta: return "delta_tan";
    case AtomKind::TangLap: return "Delta_tan";
  }
  return "?";
}

namespace {

enum class TokKind { Atom, Scalar, Number, LParen, RParen, Plus, Minus, Times, Pow, End };

struct Token {
  TokKind kind;
  size_t pos;
  std::string text;
  Rational value;  // for Number
};

const std::map<std::string, AtomKind>& atom_names() {
  static const std::map<std::string, AtomKind> m = {
      {"id", AtomKind::Id},           {"d", AtomKind::SliceD},
      {"delta", AtomKind::SliceDelta}, {"Delta", AtomKind::SliceLap},
      {"star", AtomKind::SliceStar},   {"dbar", AtomKind::AmbientD},
      {"deltabar", AtomKind::AmbientDelta}, {"Delta_bar", AtomKind::AmbientLap},
      {"star_bar", AtomKind::AmbientStar},  {"iota", AtomKind::Pullback},
      {"i_n", AtomKind::InteriorN},    {"dn", AtomKind::PartialN},
      {"d_tan", AtomKind::TangD},      {"delta_tan", AtomKind::TangDelta},
      {"Delta_tan", AtomKind::TangLap}};
  return m;
}

std::vector<Token> tokenize(const std::string& s) {
  std::vector<Token> out;
  size_t k = 0;
  while (k < s.size()) {
    char c = s[k];
    if (std::isspace(static_cast<unsigned char>(c))) { ++k; continue; }
    if (c == '(') { out.push_back({TokKind::LParen, k++, "(", {}}); continue; }
    if (c == ')') { out.push_back({TokKind::RParen, k++, ")", {}}); continue; }
    if (c == '+') { out.push_back({TokKind::Plus, k++, "+", {}}); continue; }
    if (c == '-') { out.push_back({TokKind::Minus, k++, "-", {}}); continue; }
    if (c == '*') { out.push_back({TokKind::Times, k++, "*", {}}); continue; }
    if (c == '^') { out.push_back({TokKind::Pow, k++, "^", {}}); continue; }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      size_t start = k;
      while (k < s.size() && std::isdigit(static_cast<unsigned char>(s[k]))) ++k;
      std::string num = s.substr(start, k - start);
      if (k < s.size() && s[k] == '/') {
        size_t save = k++;
        size_t dstart = k;
        while (k < s.size() && std::isdigit(static_cast<unsigned char>(s[k]))) ++k;
        if (k == dstart) { k = save; out.push_back({TokKind::Number, start, num, Rational(num)}); continue; }
        out.push_back({TokKind::Number, start, num + "/" + s.substr(dstart, k - dstart),
                       Rational(num + "/" + s.substr(dstart, k - dstart))});
        continue;
      }
      out.push_back({TokKind::Number, start, num, Rational(num)});
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      size_t start = k;
      while (k < s.size() && (std::isalnum(static_cast<unsigned char>(s[k])) || s[k] == '_')) ++k;
      std::string word = s.substr(start, k - start);
      if (atom_names().count(word))
        out.push_back({TokKind::Atom, start, word, {}});
      else if (word == "lambda" || word == "i" || word == "n" || word == "p" || word == "N")
        out.push_back({TokKind::Scalar, start, word, {}});
      else
        throw ParseError(start, "unknown symbol '" + word + "'");
      continue;
    }
    throw ParseError(k, std::string("unexpected character '") + c + "'");
  }
  out.push_back({TokKind::End, s.size(), "", {}});
  return out;
}

// Untyped syntax tree; operators are typed afterwards once the source
// signature is known.
struct Syn;
using SynPtr = std::shared_ptr<Syn>;
struct Syn {
  enum Kind { AtomK, ScalarK, SumK, JuxtK, PowK } kind;
  AtomKind atom{};
  Scalar scalar;         // ScalarK
  std::vector<SynPtr> kids;
  std::vector<int> signs;  // SumK
  int power = 1;           // PowK
  bool is_scalar_only() const {
    switch (kind) {
      case ScalarK: return true;
      case AtomK: return false;
      case SumK:
      case JuxtK: {
        for (const auto& k : kids)
          if (!k->is_scalar_only()) return false;
        return true;
      }
      case PowK: return kids[0]->is_scalar_only();
    }
    return false;
  }
};

class Parser {
 public:
  Parser(std::vector<Token> toks, const Bindings& b) : t_(std::move(toks)), b_(b) {}

  SynPtr parse() {
    SynPtr e = expr();
    if (cur().kind != TokKind::End) throw ParseError(cur().pos, "trailing input");
    return e;
  }

 private:
  const Token& cur() const { return t_[k_]; }
  void advance() { ++k_; }

  SynPtr expr() {
    auto node = std::make_shared<Syn>();
    node->kind = Syn::SumK;
    int sign = 1;
    if (cur().kind == TokKind::Minus) { sign = -1; advance(); }
    node->kids.push_back(term());
    node->signs.push_back(sign);
    while (cur().kind == TokKind::Plus || cur().kind == TokKind::Minus) {
      int s = cur().kind == TokKind::Plus ? 1 : -1;
      advance();
      node->kids.push_back(term());
      node->signs.push_back(s);
    }
    if (node->kids.size() == 1 && node->signs[0] == 1) return node->kids[0];
    return node;
  }

  SynPtr term() {
    auto node = std::make_shared<Syn>();
    node->kind = Syn::JuxtK;
    node->kids.push_back(factor());
    for (;;) {
      TokKind k = cur().kind;
      if (k == TokKind::Times) { advance(); node->kids.push_back(factor()); continue; }
      if (k == TokKind::Atom || k == TokKind::Scalar || k == TokKind::Number || k == TokKind::LParen) {
        node->kids.push_back(factor());
        continue;
      }
      break;
    }
    if (node->kids.size() == 1) return node->kids[0];
    return node;
  }

  SynPtr factor() {
    SynPtr base = primary();
    if (cur().kind == TokKind::Pow) {
      advance();
      int sign = 1;
      if (cur().kind == TokKind::Minus) { sign = -1; advance(); }
      if (cur().kind != TokKind::Number || !cur().value.is_integer())
        throw ParseError(cur().pos, "expected integer exponent");
      long e = std::stol(cur().text);
      advance();
      auto node = std::make_shared<Syn>();
      node->kind = Syn::PowK;
      node->power = static_cast<int>(sign * e);
      node->kids.push_back(base);
      return node;
    }
    return base;
  }

  SynPtr primary() {
    const Token& t = cur();
    switch (t.kind) {
      case TokKind::LParen: {
        advance();
        SynPtr e = expr();
        if (cur().kind != TokKind::RParen) throw ParseError(cur().pos, "expected ')'");
        advance();
        return e;
      }
      case TokKind::Atom: {
        auto node = std::make_shared<Syn>();
        node->kind = Syn::AtomK;
        node->atom = atom_names().at(t.text);
        advance();
        return node;
      }
      case TokKind::Number: {
        auto node = std::make_shared<Syn>();
        node->kind = Syn::ScalarK;
        node->scalar = Scalar(t.value);
        advance();
        return node;
      }
      case TokKind::Scalar: {
        auto node = std::make_shared<Syn>();
        node->kind = Syn::ScalarK;
        if (t.text == "lambda") node->scalar = Scalar::lambda();
        else if (t.text == "i") node->scalar = Scalar(GaussianRational::i());
        else if (t.text == "n") node->scalar = Scalar(static_cast<long>(b_.n));
        else if (t.text == "p") node->scalar = Scalar(static_cast<long>(b_.p));
        else node->scalar = Scalar(static_cast<long>(b_.N));
        advance();
        return node;
      }
      default:
        throw ParseError(t.pos, "expected an expression");
    }
  }

  std::vector<Token> t_;
  size_t k_ = 0;
  const Bindings& b_;
};

Scalar eval_scalar(const SynPtr& s) {
  switch (s->kind) {
    case Syn::ScalarK: return s->scalar;
    case Syn::SumK: {
      Scalar acc;
      for (size_t k = 0; k < s->kids.size(); ++k) {
        Scalar v = eval_scalar(s->kids[k]);
        acc += s->signs[k] < 0 ? -v : v;
      }
      return acc;
    }
    case Syn::JuxtK: {
      Scalar acc(1);
      for (const auto& k : s->kids) acc = acc * eval_scalar(k);
      return acc;
    }
    case Syn::PowK: {
      if (s->power < 0) throw ParseError(0, "negative scalar power");
      Scalar base = eval_scalar(s->kids[0]);
      Scalar acc(1);
      for (int k = 0; k < s->power; ++k) acc = acc * base;
      return acc;
    }
    case Syn::AtomK: break;
  }
  throw ParseError(0, "expected a scalar expression");
}

/// Typing pass: build the OpExpr given the source signature, returning also
/// the inferred target.  Scalar-only subtrees become Scale factors.
OpExpr type_syn(const SynPtr& s, const Signature& src);

OpExpr type_juxt(const std::vector<SynPtr>& kids, const Signature& src) {
  // split scalar prefix/in-between factors from the operator chain
  Scalar coeff(1);
  std::vector<SynPtr> ops;
  for (const auto& k : kids) {
    if (k->is_scalar_only()) coeff = coeff * eval_scalar(k);
    else ops.push_back(k);
  }
  OpExpr body;
  if (ops.empty()) {
    body = OpExpr::identity(src);
  } else {
    // rightmost applied first
    std::vector<OpExpr> typed(ops.size());
    Signature cur = src;
    for (int k = static_cast<int>(ops.size()) - 1; k >= 0; --k) {
      typed[k] = type_syn(ops[k], cur);
      cur = typed[k].target();
    }
    body = OpExpr::compose(std::move(typed));
  }
  if (coeff == Scalar(1)) return body;
  return OpExpr::scale(coeff, body);
}

OpExpr type_syn(const SynPtr& s, const Signature& src) {
  switch (s->kind) {
    case Syn::AtomK:
      return OpExpr::atom(s->atom, src);
    case Syn::ScalarK:
      return OpExpr::scale(s->scalar, OpExpr::identity(src));
    case Syn::JuxtK:
      return type_juxt(s->kids, src);
    case Syn::PowK: {
      if (s->power < 0) throw ParseError(0, "negative operator power");
      if (s->power == 0) return OpExpr::identity(src);
      std::vector<SynPtr> reps(s->power, s->kids[0]);
      return type_juxt(reps, src);
    }
    case Syn::SumK: {
      std::vector<OpExpr> terms;
      for (size_t k = 0; k < s->kids.size(); ++k) {
        OpExpr t = type_syn(s->kids[k], src);
        terms.push_back(s->signs[k] < 0 ? OpExpr::scale(Scalar(-1), t) : t);
      }
      return OpExpr::sum(std::move(terms));
    }
  }
  throw ParseError(0, "bad syntax node");
}

/// The source side is driven by the first (rightmost) operator factor.
bool wants_ambient(const SynPtr& s) {
  switch (s->kind) {
    case Syn::AtomK:
      switch (s->atom) {
        case AtomKind::SliceD:
        case AtomKind::SliceDelta:
        case AtomKind::SliceLap:
        case AtomKind::SliceStar:
          return false;
        case AtomKind::Id:
          return false;  // bare identity defaults to the hyperplane side
        default:
          return true;
      }
    case Syn::ScalarK:
      return false;
    case Syn::JuxtK:
      for (auto it = s->kids.rbegin(); it != s->kids.rend(); ++it)
        if (!(*it)->is_scalar_only()) return wants_ambient(*it);
      return false;
    case Syn::PowK:
      return wants_ambient(s->kids[0]);
    case Syn::SumK:
      for (const auto& k : s->kids)
        if (!k->is_scalar_only()) return wants_ambient(k);
      return false;
  }
  return false;
}

}  // namespace

OpExpr parse_op(const std::string& text, const Bindings& b) {
  Parser parser(tokenize(text), b);
  SynPtr syn = parser.parse();
  if (syn->is_scalar_only())
    throw ParseError(0, "expression is a pure scalar, not an operator");
  Signature src = wants_ambient(syn) ? Signature{b.n, b.p, Side::Ambient}
                                     : Signature{b.n - 1, b.p, Side::Slice};
  return type_syn(syn, src);
}

Scalar parse_scalar(const std::string& text, const Bindings& b) {
  Parser parser(tokenize(text), b);
  return eval_scalar(parser.parse());
}

namespace {

void print_scalar_factor(std::ostringstream& os, const Scalar& c) {
  if (c == Scalar(1)) return;
  os << "(" << c.str() << ") ";
}

void print_inner(std::ostringstream& os, const OpExpr& e, bool parens_for_sum);

void print_compose(std::ostringstream& os, const std::vector<OpExpr>& factors) {
  // compress repeated identical atoms into powers
  size_t k = 0;
  bool first = true;
  while (k < factors.size()) {
    if (!first) os << " ";
    first = false;
    if (factors[k].tag() == OpExpr::Tag::Atom) {
      size_t run = k + 1;
      while (run < factors.size() && factors[run].tag() == OpExpr::Tag::Atom &&
             factors[run].atom_kind() == factors[k].atom_kind())
        ++run;
      os << atom_token(factors[k].atom_kind());
      if (run - k > 1) os << "^" << (run - k);
      k = run;
    } else {
      print_inner(os, factors[k], true);
      ++k;
    }
  }
}

void print_inner(std::ostringstream& os, const OpExpr& e, bool parens_for_sum) {
  switch (e.tag()) {
    case OpExpr::Tag::Atom:
      os << atom_token(e.atom_kind());
      return;
    case OpExpr::Tag::Compose:
      print_compose(os, e.children());
      return;
    case OpExpr::Tag::Scale: {
      print_scalar_factor(os, e.coeff());
      print_inner(os, e.children()[0], true);
      return;
    }
    case OpExpr::Tag::Sum: {
      if (e.children().empty()) {
        os << "(0) id";
        return;
      }
      if (parens_for_sum) os << "(";
      bool first = true;
      for (const auto& t : e.children()) {
        if (!first) os << " + ";
        first = false;
        print_inner(os, t, false);
      }
      if (parens_for_sum) os << ")";
      return;
    }
  }
}

}  // namespace

std::string pretty_print(const OpExpr& e) {
  std::ostringstream os;
  print_inner(os, e, false);
  return os.str();
}

}  // namespace sbo
