#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>

#include "zipkit/formula.hpp"

namespace zipkit {

// Idempotent substitution: no mapped formula mentions any variable of the
// domain. Maintained by eagerly applying new bindings to existing ones.
using Substitution = std::map<std::string, Formula>;

inline Formula apply_subst(const Substitution& s, const Formula& f) {
  switch (f.kind()) {
    case FormulaKind::Meta: {
      auto it = s.find(f.name());
      return it == s.end() ? f : it->second;
    }
    case FormulaKind::And: return Formula::conj(apply_subst(s, f.left()), apply_subst(s, f.right()));
    case FormulaKind::Or: return Formula::disj(apply_subst(s, f.left()), apply_subst(s, f.right()));
    case FormulaKind::Imp: return Formula::imp(apply_subst(s, f.left()), apply_subst(s, f.right()));
    default: return f;
  }
}

inline Sequent apply_subst(const Substitution& s, const Sequent& g) {
  Sequent out;
  out.hypotheses.reserve(g.hypotheses.size());
  for (const auto& h : g.hypotheses) out.hypotheses.push_back(apply_subst(s, h));
  out.conclusion = apply_subst(s, g.conclusion);
  return out;
}

inline bool occurs(const std::string& var, const Formula& f) {
  switch (f.kind()) {
    case FormulaKind::Meta: return f.name() == var;
    case FormulaKind::And:
    case FormulaKind::Or:
    case FormulaKind::Imp: return occurs(var, f.left()) || occurs(var, f.right());
    default: return false;
  }
}

// Binds var to value (already in s-normal form), rewriting existing bindings
// so the result stays idempotent.
inline Substitution extend(Substitution s, const std::string& var, const Formula& value) {
  Substitution single{{var, value}};
  for (auto& [k, v] : s) v = apply_subst(single, v);
  s.emplace(var, value);
  return s;
}

namespace unify_detail {

inline std::optional<Substitution> go(const Formula& a, const Formula& b, Substitution s);

inline std::optional<Substitution> bind_meta(const std::string& var, const Formula& t, Substitution s) {
  if (t.kind() == FormulaKind::Meta && t.name() == var) return s;
  if (occurs(var, t)) return std::nullopt;
  return extend(std::move(s), var, t);
}

inline std::optional<Substitution> go(const Formula& a0, const Formula& b0, Substitution s) {
  Formula a = apply_subst(s, a0);
  Formula b = apply_subst(s, b0);
  if (a.kind() == FormulaKind::Meta) return bind_meta(a.name(), b, std::move(s));
  if (b.kind() == FormulaKind::Meta) return bind_meta(b.name(), a, std::move(s));
  if (a.kind() != b.kind()) return std::nullopt;
  switch (a.kind()) {
    case FormulaKind::Atom: return a.name() == b.name() ? std::optional(std::move(s)) : std::nullopt;
    case FormulaKind::Top:
    case FormulaKind::Bot: return s;
    default: {
      auto s1 = go(a.left(), b.left(), std::move(s));
      if (!s1) return std::nullopt;
      return go(a.right(), b.right(), std::move(*s1));
    }
  }
}

}  // namespace unify_detail

// First-order syntactic unification with occurs check, relative to an existing
// idempotent substitution. Success extends it; failure leaves no trace.
inline std::optional<Substitution> unify(const Formula& a, const Formula& b, Substitution s = {}) {
  return unify_detail::go(a, b, std::move(s));
}

}  // namespace zipkit
