#include "sbo/op_expr.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace sbo {

struct OpExpr::Node {
  Tag tag;
  AtomKind atom = AtomKind::Id;
  std::vector<OpExpr> children;
  Scalar coeff;
  Signature src, tgt;
};

namespace {

Signature atom_target(AtomKind k, const Signature& s) {
  Signature t = s;
  switch (k) {
    case AtomKind::Id:
      break;
    case AtomKind::SliceD:
    case AtomKind::AmbientD:
    case AtomKind::TangD:
      t.degree += 1;
      break;
    case AtomKind::SliceDelta:
    case AtomKind::AmbientDelta:
    case AtomKind::TangDelta:
      t.degree -= 1;
      break;
    case AtomKind::SliceLap:
    case AtomKind::AmbientLap:
    case AtomKind::TangLap:
      break;
    case AtomKind::SliceStar:
    case AtomKind::AmbientStar:
      t.degree = s.dim - s.degree;
      break;
    case AtomKind::Pullback:
      t.dim = s.dim - 1;
      t.side = Side::Slice;
      break;
    case AtomKind::InteriorN:
      t.degree -= 1;
      break;
    case AtomKind::PartialN:
      break;
  }
  return t;
}

bool atom_side_ok(AtomKind k, Side side) {
  switch (k) {
    case AtomKind::SliceD:
    case AtomKind::SliceDelta:
    case AtomKind::SliceLap:
    case AtomKind::SliceStar:
      return side == Side::Slice;
    case AtomKind::AmbientD:
    case AtomKind::AmbientDelta:
    case AtomKind::AmbientLap:
    case AtomKind::AmbientStar:
    case AtomKind::Pullback:
    case AtomKind::InteriorN:
    case AtomKind::PartialN:
    case AtomKind::TangD:
    case AtomKind::TangDelta:
    case AtomKind::TangLap:
      return side == Side::Ambient;
    case AtomKind::Id:
      return true;
  }
  return false;
}

}  // namespace

OpExpr OpExpr::atom(AtomKind k, const Signature& src) {
  if (!atom_side_ok(k, src.side)) throw std::invalid_argument("OpExpr: atom on wrong side");
  auto n = std::make_shared<Node>();
  n->tag = Tag::Atom;
  n->atom = k;
  n->src = src;
  n->tgt = atom_target(k, src);
  return OpExpr(std::move(n));
}

OpExpr OpExpr::compose(std::vector<OpExpr> factors) {
  if (factors.empty()) throw std::invalid_argument("OpExpr: empty composition");
  if (factors.size() == 1) return factors[0];
  for (size_t k = 0; k + 1 < factors.size(); ++k)
    if (factors[k].source() != factors[k + 1].target())
      throw std::invalid_argument("OpExpr: composition signature mismatch");
  auto n = std::make_shared<Node>();
  n->tag = Tag::Compose;
  n->src = factors.back().source();
  n->tgt = factors.front().target();
  n->children = std::move(factors);
  return OpExpr(std::move(n));
}

OpExpr OpExpr::sum(std::vector<OpExpr> terms) {
  if (terms.empty()) throw std::invalid_argument("OpExpr: empty sum needs signatures");
  for (size_t k = 1; k < terms.size(); ++k)
    if (terms[k].source() != terms[0].source() || terms[k].target() != terms[0].target())
      throw std::invalid_argument("OpExpr: sum signature mismatch");
  if (terms.size() == 1) return terms[0];
  auto n = std::make_shared<Node>();
  n->tag = Tag::Sum;
  n->src = terms[0].source();
  n->tgt = terms[0].target();
  n->children = std::move(terms);
  return OpExpr(std::move(n));
}

OpExpr OpExpr::scale(Scalar c, OpExpr e) {
  auto n = std::make_shared<Node>();
  n->tag = Tag::Scale;
  n->coeff = std::move(c);
  n->src = e.source();
  n->tgt = e.target();
  n->children.push_back(std::move(e));
  return OpExpr(std::move(n));
}

OpExpr OpExpr::zero(const Signature& src, const Signature& tgt) {
  auto n = std::make_shared<Node>();
  n->tag = Tag::Sum;
  n->src = src;
  n->tgt = tgt;
  return OpExpr(std::move(n));
}

OpExpr::Tag OpExpr::tag() const { return p_->tag; }
AtomKind OpExpr::atom_kind() const { return p_->atom; }
const std::vector<OpExpr>& OpExpr::children() const { return p_->children; }
const Scalar& OpExpr::coeff() const { return p_->coeff; }
const Signature& OpExpr::source() const { return p_->src; }
const Signature& OpExpr::target() const { return p_->tgt; }

// -- application -------------------------------------------------------------

namespace {

PolyForm apply_atom(AtomKind k, const Signature& src, const PolyForm& w) {
  switch (k) {
    case AtomKind::Id:
      return w;
    case AtomKind::SliceD:
    case AtomKind::AmbientD:
      return ext_d(w);
    case AtomKind::SliceDelta:
    case AtomKind::AmbientDelta:
      return codifferential(w);
    case AtomKind::SliceLap:
    case AtomKind::AmbientLap:
      return laplacian(w);
    case AtomKind::SliceStar:
    case AtomKind::AmbientStar:
      return hodge_star(w);
    case AtomKind::Pullback:
      return pullback(w);
    case AtomKind::InteriorN:
      return interior(src.dim, w);
    case AtomKind::PartialN:
      return partial_axis(src.dim, w);
    case AtomKind::TangD:
      return ext_d(w, src.dim - 1);
    case AtomKind::TangDelta:
      return codifferential(w, src.dim - 1);
    case AtomKind::TangLap:
      return laplacian(w, src.dim - 1);
  }
  throw std::logic_error("apply_atom: bad atom");
}

PolyForm apply_inner(const OpExpr& e, const PolyForm& w) {
  switch (e.tag()) {
    case OpExpr::Tag::Atom:
      return apply_atom(e.atom_kind(), e.source(), w);
    case OpExpr::Tag::Compose: {
      PolyForm cur = w;
      const auto& ch = e.children();
      for (auto it = ch.rbegin(); it != ch.rend(); ++it) {
        if (cur.is_zero()) return PolyForm(e.target().dim, e.target().degree);
        cur = apply_inner(*it, cur);
      }
      return cur;
    }
    case OpExpr::Tag::Sum: {
      PolyForm acc(e.target().dim, e.target().degree);
      for (const auto& t : e.children()) acc += apply_inner(t, w);
      return acc;
    }
    case OpExpr::Tag::Scale:
      return apply_inner(e.children()[0], w).scaled(e.coeff());
  }
  throw std::logic_error("apply_inner: bad node");
}

}  // namespace

PolyForm apply(const OpExpr& e, const PolyForm& w) {
  const Signature& s = e.source();
  if (w.ambient_dim() != s.dim || w.degree() != s.degree)
    throw std::invalid_argument("apply: form does not match operator source");
  return apply_inner(e, w);
}

OpExpr specialize(const OpExpr& e, const GaussianRational& lambda0) {
  switch (e.tag()) {
    case OpExpr::Tag::Atom:
      return e;
    case OpExpr::Tag::Compose: {
      std::vector<OpExpr> ch;
      for (const auto& c : e.children()) ch.push_back(specialize(c, lambda0));
      return OpExpr::compose(std::move(ch));
    }
    case OpExpr::Tag::Sum: {
      if (e.children().empty()) return e;
      std::vector<OpExpr> ch;
      for (const auto& c : e.children()) ch.push_back(specialize(c, lambda0));
      return OpExpr::sum(std::move(ch));
    }
    case OpExpr::Tag::Scale:
      return OpExpr::scale(Scalar(e.coeff().eval_at(lambda0)), specialize(e.children()[0], lambda0));
  }
  throw std::logic_error("specialize: bad node");
}

OpExpr derivative_op(const OpExpr& e) {
  switch (e.tag()) {
    case OpExpr::Tag::Atom:
      return OpExpr::zero(e.source(), e.target());
    case OpExpr::Tag::Compose: {
      std::vector<OpExpr> terms;
      const auto& ch = e.children();
      for (size_t k = 0; k < ch.size(); ++k) {
        std::vector<OpExpr> f = ch;
        f[k] = derivative_op(ch[k]);
        terms.push_back(OpExpr::compose(std::move(f)));
      }
      return OpExpr::sum(std::move(terms));
    }
    case OpExpr::Tag::Sum: {
      if (e.children().empty()) return e;
      std::vector<OpExpr> ch;
      for (const auto& c : e.children()) ch.push_back(derivative_op(c));
      return OpExpr::sum(std::move(ch));
    }
    case OpExpr::Tag::Scale:
      return OpExpr::sum({OpExpr::scale(e.coeff().derivative(), e.children()[0]),
                          OpExpr::scale(e.coeff(), derivative_op(e.children()[0]))});
  }
  throw std::logic_error("derivative_op: bad node");
}

// -- normalization -----------------------------------------------------------

namespace {

// A term is a scalar times a flat list of non-identity atoms.
struct FlatTerm {
  Scalar c;
  std::vector<std::pair<AtomKind, Signature>> atoms;
};

void flatten(const OpExpr& e, const Scalar& mult, std::vector<FlatTerm>& out) {
  switch (e.tag()) {
    case OpExpr::Tag::Atom: {
      FlatTerm t;
      t.c = mult;
      if (e.atom_kind() != AtomKind::Id) t.atoms.push_back({e.atom_kind(), e.source()});
      out.push_back(std::move(t));
      return;
    }
    case OpExpr::Tag::Scale:
      flatten(e.children()[0], mult * e.coeff(), out);
      return;
    case OpExpr::Tag::Sum:
      for (const auto& c : e.children()) flatten(c, mult, out);
      return;
    case OpExpr::Tag::Compose: {
      std::vector<std::vector<FlatTerm>> parts;
      for (const auto& c : e.children()) {
        std::vector<FlatTerm> p;
        flatten(c, Scalar(1), p);
        parts.push_back(std::move(p));
      }
      // Distribute the (small) product of sums.
      std::vector<FlatTerm> acc{{mult, {}}};
      for (const auto& p : parts) {
        std::vector<FlatTerm> next;
        for (const auto& a : acc)
          for (const auto& b : p) {
            FlatTerm t;
            t.c = a.c * b.c;
            t.atoms = a.atoms;
            t.atoms.insert(t.atoms.end(), b.atoms.begin(), b.atoms.end());
            next.push_back(std::move(t));
          }
        acc = std::move(next);
      }
      for (auto& t : acc) out.push_back(std::move(t));
      return;
    }
  }
}

std::string term_key(const FlatTerm& t) {
  std::ostringstream os;
  for (const auto& [k, s] : t.atoms)
    os << static_cast<int>(k) << ":" << s.dim << "," << s.degree << "," << static_cast<int>(s.side)
       << ";";
  return os.str();
}

}  // namespace

OpExpr OpExpr::normalized() const {
  std::vector<FlatTerm> terms;
  flatten(*this, Scalar(1), terms);
  std::map<std::string, FlatTerm> merged;
  for (auto& t : terms) {
    std::string key = term_key(t);
    auto [it, fresh] = merged.try_emplace(key, t);
    if (!fresh) it->second.c += t.c;
  }
  std::vector<OpExpr> out;
  for (auto& [key, t] : merged) {
    if (t.c.is_zero()) continue;
    OpExpr body;
    if (t.atoms.empty())
      body = OpExpr::identity(source());
    else {
      std::vector<OpExpr> f;
      for (const auto& [k, s] : t.atoms) f.push_back(OpExpr::atom(k, s));
      body = OpExpr::compose(std::move(f));
    }
    out.push_back(t.c == Scalar(1) ? body : OpExpr::scale(t.c, body));
  }
  if (out.empty()) return OpExpr::zero(source(), target());
  return OpExpr::sum(std::move(out));
}

bool operator==(const OpExpr& a, const OpExpr& b) {
  if (a.source() != b.source() || a.target() != b.target()) return false;
  std::vector<FlatTerm> ta, tb;
  flatten(a, Scalar(1), ta);
  flatten(b, Scalar(1), tb);
  std::map<std::string, Scalar> ma, mb;
  for (auto& t : ta) {
    auto [it, fresh] = ma.try_emplace(term_key(t), t.c);
    if (!fresh) it->second += t.c;
  }
  for (auto& t : tb) {
    auto [it, fresh] = mb.try_emplace(term_key(t), t.c);
    if (!fresh) it->second += t.c;
  }
  std::erase_if(ma, [](const auto& kv) { return kv.second.is_zero(); });
  std::erase_if(mb, [](const auto& kv) { return kv.second.is_zero(); });
  return ma == mb;
}

}  // namespace sbo
