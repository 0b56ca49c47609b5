#pragma once

// A small language of knot expressions:
//   expr := term (('#' | '|') term)*          left-associative
//   term := atom | func | '(' expr ')'
//   func := 'closure(' expr ')' | 'pow#(' expr ',' int ')' | 'powU(' expr ',' int ')'
//   atom := 'U' | FAM '(' int ')'              FAM in T L W H O TK

#include <cctype>
#include <cstddef>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <variant>

#include "knotshadow/algebra.hpp"
#include "knotshadow/diagram.hpp"
#include "knotshadow/error.hpp"
#include "knotshadow/families.hpp"
#include "knotshadow/formulas.hpp"

namespace knotshadow {

enum class AtomKind { U, T, L, W, H, O, TK };
enum class BinaryOp { CSum, Disjoint };

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct AtomNode {
  AtomKind kind = AtomKind::U;
  std::size_t n = 0;
};
struct BinaryNode {
  BinaryOp op = BinaryOp::CSum;
  ExprPtr lhs, rhs;
};
struct PowerNode {
  ExprPtr child;
  std::size_t n = 0;
  BinaryOp kind = BinaryOp::CSum;
};
struct ClosureNode {
  ExprPtr child;
};

struct Expr {
  std::variant<AtomNode, BinaryNode, PowerNode, ClosureNode> node;
};

inline ExprPtr make_atom(AtomKind k, std::size_t n = 0) { return std::make_shared<Expr>(Expr{AtomNode{k, n}}); }
inline ExprPtr make_binary(BinaryOp op, ExprPtr a, ExprPtr b) {
  return std::make_shared<Expr>(Expr{BinaryNode{op, std::move(a), std::move(b)}});
}
inline ExprPtr make_power(ExprPtr child, std::size_t n, BinaryOp kind) {
  return std::make_shared<Expr>(Expr{PowerNode{std::move(child), n, kind}});
}
inline ExprPtr make_closure(ExprPtr child) { return std::make_shared<Expr>(Expr{ClosureNode{std::move(child)}}); }

/// Structural equality.
inline bool equal(const ExprPtr& a, const ExprPtr& b) {
  if (a->node.index() != b->node.index()) return false;
  if (auto* x = std::get_if<AtomNode>(&a->node)) {
    const auto& y = std::get<AtomNode>(b->node);
    return x->kind == y.kind && (x->kind == AtomKind::U || x->n == y.n);
  }
  if (auto* x = std::get_if<BinaryNode>(&a->node)) {
    const auto& y = std::get<BinaryNode>(b->node);
    return x->op == y.op && equal(x->lhs, y.lhs) && equal(x->rhs, y.rhs);
  }
  if (auto* x = std::get_if<PowerNode>(&a->node)) {
    const auto& y = std::get<PowerNode>(b->node);
    return x->kind == y.kind && x->n == y.n && equal(x->child, y.child);
  }
  return equal(std::get<ClosureNode>(a->node).child, std::get<ClosureNode>(b->node).child);
}

inline std::string_view atom_name(AtomKind k) {
  switch (k) {
    case AtomKind::U: return "U";
    case AtomKind::T: return "T";
    case AtomKind::L: return "L";
    case AtomKind::W: return "W";
    case AtomKind::H: return "H";
    case AtomKind::O: return "O";
    case AtomKind::TK: return "TK";
  }
  return "?";
}

inline FamilySpec atom_spec(const AtomNode& a) {
  switch (a.kind) {
    case AtomKind::U: return {Family::Unknot, 0};
    case AtomKind::T: return {Family::TwistLoop, a.n};
    case AtomKind::L: return {Family::Link, a.n};
    case AtomKind::W: return {Family::TwistLink, a.n};
    case AtomKind::H: return {Family::Hitch, a.n};
    case AtomKind::O: return {Family::Overhand, a.n};
    case AtomKind::TK: return {Family::TwistKnot, a.n};
  }
  return {};
}

/// Canonical text. Only right operands that are themselves binary get
/// parentheses, so parse(render(e)) rebuilds e.
inline std::string render(const ExprPtr& e) {
  if (auto* a = std::get_if<AtomNode>(&e->node)) {
    if (a->kind == AtomKind::U) return "U";
    return std::string(atom_name(a->kind)) + "(" + std::to_string(a->n) + ")";
  }
  if (auto* b = std::get_if<BinaryNode>(&e->node)) {
    std::string rhs = render(b->rhs);
    if (std::holds_alternative<BinaryNode>(b->rhs->node)) rhs = "(" + rhs + ")";
    return render(b->lhs) + (b->op == BinaryOp::CSum ? " # " : " | ") + rhs;
  }
  if (auto* p = std::get_if<PowerNode>(&e->node))
    return std::string(p->kind == BinaryOp::CSum ? "pow#(" : "powU(") + render(p->child) + ", " +
           std::to_string(p->n) + ")";
  return "closure(" + render(std::get<ClosureNode>(e->node).child) + ")";
}

namespace detail {

class Parser {
 public:
  explicit Parser(std::string_view text) : s_(text) {}

  ExprPtr parse_all() {
    ExprPtr e = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& why) const { throw SyntaxError(ErrorKind::SyntaxError, pos_, why); }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool accept(std::string_view tok) {
    skip();
    if (s_.substr(pos_, tok.size()) == tok) {
      pos_ += tok.size();
      return true;
    }
    return false;
  }

  void expect(std::string_view tok) {
    if (!accept(tok)) fail("expected '" + std::string(tok) + "'");
  }

  std::size_t integer() {
    skip();
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected a nonnegative integer");
    if (pos_ - start > 9) {
      pos_ = start;
      fail("integer too large");
    }
    return std::stoul(std::string(s_.substr(start, pos_ - start)));
  }

  ExprPtr expr() {
    ExprPtr lhs = term();
    for (;;) {
      if (accept("#")) lhs = make_binary(BinaryOp::CSum, lhs, term());
      else if (accept("|")) lhs = make_binary(BinaryOp::Disjoint, lhs, term());
      else return lhs;
    }
  }

  ExprPtr term() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    if (accept("(")) {
      ExprPtr e = expr();
      expect(")");
      return e;
    }
    if (!std::isalpha(static_cast<unsigned char>(s_[pos_]))) fail("expected a term");
    const std::size_t start = pos_;
    std::size_t end = pos_;
    while (end < s_.size() && std::isalnum(static_cast<unsigned char>(s_[end]))) ++end;
    if (s_.substr(start, end - start) == "pow" && end < s_.size() && s_[end] == '#') ++end;
    const std::string_view word = s_.substr(start, end - start);
    pos_ = end;
    if (word == "closure") {
      expect("(");
      ExprPtr e = expr();
      expect(")");
      return make_closure(e);
    }
    if (word == "pow#" || word == "powU") {
      expect("(");
      ExprPtr e = expr();
      expect(",");
      const std::size_t n = integer();
      expect(")");
      return make_power(e, n, word == "pow#" ? BinaryOp::CSum : BinaryOp::Disjoint);
    }
    if (word == "U") return make_atom(AtomKind::U);
    static const std::map<std::string_view, AtomKind> families{{"T", AtomKind::T}, {"L", AtomKind::L},
                                                                {"W", AtomKind::W}, {"H", AtomKind::H},
                                                                {"O", AtomKind::O}, {"TK", AtomKind::TK}};
    const auto it = families.find(word);
    if (it == families.end())
      throw SyntaxError(ErrorKind::UnknownFamily, start, "unknown family '" + std::string(word) + "'");
    expect("(");
    const std::size_t n = integer();
    expect(")");
    return make_atom(it->second, n);
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace detail

inline ExprPtr parse(std::string_view text) { return detail::Parser(text).parse_all(); }

// ---------------------------------------------------------------------------
// Evaluation

enum class EvalMethod { Brute, Laws };

struct EvalOptions {
  StateSumOptions state_sum;
};

/// The diagram an expression denotes.
inline Shadow eval_shadow(const ExprPtr& e) {
  if (auto* a = std::get_if<AtomNode>(&e->node)) return build(atom_spec(*a));
  if (auto* b = std::get_if<BinaryNode>(&e->node)) {
    const Shadow l = eval_shadow(b->lhs), r = eval_shadow(b->rhs);
    return b->op == BinaryOp::CSum ? connected_sum(l, r) : disjoint_union(l, r);
  }
  if (auto* p = std::get_if<PowerNode>(&e->node)) {
    const Shadow c = eval_shadow(p->child);
    if (p->kind == BinaryOp::CSum) {
      if (p->n == 0) return Shadow::unknot();
      Shadow acc = c;
      for (std::size_t i = 1; i < p->n; ++i) acc = connected_sum(acc, c);
      return acc;
    }
    Shadow acc = Shadow::empty();
    for (std::size_t i = 0; i < p->n; ++i) acc = disjoint_union(acc, c);
    return acc;
  }
  return self_closure(eval_shadow(std::get<ClosureNode>(e->node).child));
}

namespace detail {

/// Polynomial of a subexpression plus, when it carries canonical cuts, its
/// components. `empty` marks the empty diagram (powU(_, 0)).
struct LawValue {
  Polynomial poly;
  std::optional<Components> comp;
  bool empty = false;
};

/// Components of a chain generator, brute-forced once from the generator
/// diagram and its closure.
inline Components brute_generator_components(Family f) {
  static std::mutex mu;
  static std::map<Family, Components> cache;
  std::lock_guard<std::mutex> lock(mu);
  if (auto it = cache.find(f); it != cache.end()) return it->second;
  const Shadow g = generator(f);
  Components c = components_solve(state_sum(g), state_sum(self_closure(g)));
  cache.emplace(f, c);
  return c;
}

inline Components csum_components(const Polynomial& p, const Components& a, const Polynomial& q, const Components& b) {
  const Polynomial closed_q = Polynomial::monomial(1, 2) * b.alpha + Polynomial::x() * b.beta;
  return components_solve(csum_poly(p, q), closure_of_csum(a, q, closed_q));
}

inline LawValue eval_laws(const ExprPtr& e) {
  if (auto* a = std::get_if<AtomNode>(&e->node)) {
    const FamilySpec spec = atom_spec(*a);
    const Polynomial p = family_poly_closed(spec);
    if (spec.family == Family::Unknot) return {p, Components{{1}, {}}};
    if (spec.family == Family::TwistKnot) {
      // Closure of L1 # T_n: components of the sum, swapped by the closure.
      const Components l1 = brute_generator_components(Family::Link);
      const Components t1 = brute_generator_components(Family::TwistLoop);
      const Polynomial tn = generated_poly(family_poly_closed({Family::TwistLoop, 1}), spec.n);
      const Components tnc = components_solve(tn, closure_of_generated(t1, spec.n));
      const Components sum = csum_components(family_poly_closed({Family::Link, 1}), l1, tn, tnc);
      return {p, swapped(sum)};
    }
    const Components g = brute_generator_components(spec.family);
    return {p, components_solve(p, closure_of_generated(g, spec.n))};
  }
  if (auto* b = std::get_if<BinaryNode>(&e->node)) {
    const LawValue l = eval_laws(b->lhs), r = eval_laws(b->rhs);
    if (b->op == BinaryOp::Disjoint) return {l.poly * r.poly, std::nullopt, l.empty && r.empty};
    if (l.empty || r.empty) throw Error(ErrorKind::InvalidArc, "connected sum with the empty shadow");
    if (!l.comp || !r.comp) throw Error(ErrorKind::InvalidArc, "operand carries no canonical cut points");
    return {csum_poly(l.poly, r.poly), csum_components(l.poly, *l.comp, r.poly, *r.comp)};
  }
  if (auto* p = std::get_if<PowerNode>(&e->node)) {
    const LawValue c = eval_laws(p->child);
    if (p->kind == BinaryOp::Disjoint) {
      if (p->n == 0) return {Polynomial::one(), std::nullopt, true};
      return {poly_pow(c.poly, p->n), std::nullopt, c.empty};
    }
    if (p->n == 0) return {Polynomial::x(), Components{{1}, {}}};
    if (p->n == 1) return c;
    if (c.empty) throw Error(ErrorKind::InvalidArc, "connected sum with the empty shadow");
    if (!c.comp) throw Error(ErrorKind::InvalidArc, "operand carries no canonical cut points");
    const Polynomial poly = generated_poly(c.poly, p->n);
    return {poly, components_solve(poly, closure_of_generated(*c.comp, p->n))};
  }
  const LawValue c = eval_laws(std::get<ClosureNode>(e->node).child);
  if (!c.comp) throw Error(ErrorKind::ClosureUnsupported, "closure of a diagram without canonical cut points");
  const Polynomial x = Polynomial::x();
  return {Polynomial::monomial(1, 2) * c.comp->alpha + x * c.comp->beta, swapped(*c.comp)};
}

}  // namespace detail

inline Polynomial eval_poly(const ExprPtr& e, EvalMethod method, const EvalOptions& opts = {}) {
  if (method == EvalMethod::Brute) return state_sum(eval_shadow(e), opts.state_sum);
  return detail::eval_laws(e).poly;
}

inline Polynomial eval_poly(std::string_view text, EvalMethod method, const EvalOptions& opts = {}) {
  return eval_poly(parse(text), method, opts);
}

}  // namespace knotshadow
