#pragma once

#include <memory>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace zipkit {

enum class FormulaKind { Atom, Top, Bot, Meta, And, Or, Imp };

// Immutable propositional formula with metavariables; copies share structure.
class Formula {
  struct Rep {
    FormulaKind kind;
    std::string name;  // Atom / Meta only
    std::shared_ptr<const Rep> left, right;
  };

  std::shared_ptr<const Rep> rep_;

  explicit Formula(std::shared_ptr<const Rep> r) : rep_(std::move(r)) {}

  static Formula binary(FormulaKind k, Formula a, Formula b) {
    return Formula(std::make_shared<Rep>(Rep{k, {}, a.rep_, b.rep_}));
  }

 public:
  Formula() : Formula(top()) {}

  static Formula atom(std::string name) {
    return Formula(std::make_shared<Rep>(Rep{FormulaKind::Atom, std::move(name), nullptr, nullptr}));
  }
  static Formula meta(std::string name) {
    return Formula(std::make_shared<Rep>(Rep{FormulaKind::Meta, std::move(name), nullptr, nullptr}));
  }
  static Formula top() {
    static const Formula t(std::make_shared<Rep>(Rep{FormulaKind::Top, {}, nullptr, nullptr}));
    return t;
  }
  static Formula bot() {
    static const Formula b(std::make_shared<Rep>(Rep{FormulaKind::Bot, {}, nullptr, nullptr}));
    return b;
  }
  static Formula conj(Formula a, Formula b) { return binary(FormulaKind::And, std::move(a), std::move(b)); }
  static Formula disj(Formula a, Formula b) { return binary(FormulaKind::Or, std::move(a), std::move(b)); }
  static Formula imp(Formula a, Formula b) { return binary(FormulaKind::Imp, std::move(a), std::move(b)); }

  FormulaKind kind() const { return rep_->kind; }
  const std::string& name() const { return rep_->name; }
  Formula left() const { return Formula(rep_->left); }
  Formula right() const { return Formula(rep_->right); }

  friend bool operator==(const Formula& a, const Formula& b) {
    if (a.rep_ == b.rep_) return true;
    if (a.rep_->kind != b.rep_->kind) return false;
    switch (a.rep_->kind) {
      case FormulaKind::Atom:
      case FormulaKind::Meta:
        return a.rep_->name == b.rep_->name;
      case FormulaKind::Top:
      case FormulaKind::Bot:
        return true;
      default:
        return a.left() == b.left() && a.right() == b.right();
    }
  }
  friend bool operator!=(const Formula& a, const Formula& b) { return !(a == b); }
};

// Precedence: -> binds loosest, then |, then &; all right-associative.
inline int precedence(FormulaKind k) {
  switch (k) {
    case FormulaKind::Imp: return 1;
    case FormulaKind::Or: return 2;
    case FormulaKind::And: return 3;
    default: return 4;
  }
}

inline void print_formula(std::string& out, const Formula& f, int parent_prec) {
  int prec = precedence(f.kind());
  switch (f.kind()) {
    case FormulaKind::Atom: out += f.name(); return;
    case FormulaKind::Meta: out += '?'; out += f.name(); return;
    case FormulaKind::Top: out += "true"; return;
    case FormulaKind::Bot: out += "false"; return;
    default: break;
  }
  const char* op = f.kind() == FormulaKind::And ? " & " : f.kind() == FormulaKind::Or ? " | " : " -> ";
  bool parens = prec < parent_prec;
  if (parens) out += '(';
  print_formula(out, f.left(), prec + 1);  // right-associative: left child needs tighter binding
  out += op;
  print_formula(out, f.right(), prec);
  if (parens) out += ')';
}

inline std::string to_string(const Formula& f) {
  std::string out;
  print_formula(out, f, 0);
  return out;
}

inline void collect_metavars(const Formula& f, std::set<std::string>& out) {
  switch (f.kind()) {
    case FormulaKind::Meta: out.insert(f.name()); return;
    case FormulaKind::And:
    case FormulaKind::Or:
    case FormulaKind::Imp:
      collect_metavars(f.left(), out);
      collect_metavars(f.right(), out);
      return;
    default:
      return;
  }
}

struct Sequent {
  std::vector<Formula> hypotheses;
  Formula conclusion;
};

inline bool operator==(const Sequent& a, const Sequent& b) {
  return a.hypotheses == b.hypotheses && a.conclusion == b.conclusion;
}
inline bool operator!=(const Sequent& a, const Sequent& b) { return !(a == b); }

inline std::string to_string(const Sequent& s) {
  std::string out;
  for (std::size_t i = 0; i < s.hypotheses.size(); ++i) {
    if (i) out += ", ";
    out += to_string(s.hypotheses[i]);
  }
  if (!s.hypotheses.empty()) out += ' ';
  out += "|- ";
  out += to_string(s.conclusion);
  return out;
}

inline std::set<std::string> metavars_of(const Formula& f) {
  std::set<std::string> out;
  collect_metavars(f, out);
  return out;
}

inline std::set<std::string> metavars_of(const Sequent& s) {
  std::set<std::string> out;
  for (const auto& h : s.hypotheses) collect_metavars(h, out);
  collect_metavars(s.conclusion, out);
  return out;
}

}  // namespace zipkit
