#pragma once

// Shared fixtures: the reference S_3 tables, random polynomial generators and
// a naive reference multiplier.

#include <map>
#include <ostream>
#include <random>
#include <string>
#include <vector>

#include "qgroth/catalog.hpp"

namespace qgroth {

inline void PrintTo(const MultiPoly& f, std::ostream* os) { *os << to_text(f); }
inline void PrintTo(const Permutation& w, std::ostream* os) { *os << "(" << w.str() << ")"; }

}  // namespace qgroth

namespace qgroth::testing {

struct GoldenEntry {
  std::string family;  // "G", "H", "qG", "qH"
  Word word;
  std::string printed;
};

// S_3 table of double and double dual Grothendieck polynomials.
inline const std::vector<GoldenEntry>& classical_golden() {
  static const std::vector<GoldenEntry> t = {
      {"G", {1, 2, 1}, "(x1+y1)(x1+y2)(x2+y1)"},
      {"G", {1, 2}, "(x1+y1)(x2+y1)(1-b*y2)"},
      {"G", {2, 1}, "(x1+y1)(x1+y2)(1-b*y1)"},
      {"G", {1}, "(x1+y1)(1-b*y1)(1-b*y2)"},
      {"G", {2}, "(x1+x2+y1+y2+b*x1*x2-b*y1*y2)(1-b*y1)"},
      {"G", {}, "(1-b*y1)^2(1-b*y2)"},
      {"H", {1, 2, 1}, "(x1+y1)(x1+y2)(x2+y1)"},
      {"H", {1, 2}, "(x1+y1)(x2+y1)(1+b*x1)"},
      {"H", {2, 1}, "(x1+y1)(x1+y2)(1+b*x2)"},
      {"H", {1}, "(x1+y1)(1+b*x1)(1+b*x2)"},
      {"H", {2}, "(x1+x2+y1+y2+b*x1*x2-b*y1*y2)(1+b*x1)"},
      {"H", {}, "(1+b*x1)^2(1+b*x2)"},
  };
  return t;
}

// S_3 table of the quantum families; the capital X_1 in the H~_21 entry is
// read as x1.
inline const std::vector<GoldenEntry>& quantum_golden() {
  static const std::vector<GoldenEntry> t = {
      {"qG", {1, 2, 1}, "(x1+y1)(x1+y2)(x2+y1)+q1(x1+y2)"},
      {"qG", {1, 2}, "((x1+y1)(x2+y1)+q1)(1-b*y2)"},
      {"qG", {2, 1}, "((x1+y1)(x1+y2)-q1)(1-b*y1)"},
      {"qG", {1}, "(x1+y1)((1-b*y1)(1-b*y2)+q1*b^2)"},
      {"qG", {2}, "(x1+x2+y1+y2-b*y1*y2+b*x1*x2+b*q1)(1-b*y1)"},
      {"qG", {}, "(1-b*y1)((1-b*y1)(1-b*y2)+q1*b^2)"},
      {"qH", {1, 2, 1}, "(x1+y1)(x1+y2)(x2+y1)+q1(x1+y2)"},
      {"qH", {1, 2}, "((x1+y1)(x2+y1)+q1)(1+b*x1)"},
      {"qH", {2, 1}, "((x1+y1)(x1+y2)-q1)(1+b*x2)+q1*b(x1+x2+y1+y2)"},
      {"qH", {1}, "(x1+y1)((1+b*x1)(1+b*x2)+q1*b^2)"},
      {"qH", {2}, "(x1+x2+y1+y2+b*x1*x2-b*y1*y2+b*q1)(1+b*x1)"},
      {"qH", {}, "(1+b*x1)((1+b*x1)(1+b*x2)+q1*b^2)"},
  };
  return t;
}

inline std::string golden_name(const GoldenEntry& e) {
  return e.family + "_" + (e.word.empty() ? std::string("id") : word_str(e.word));
}

/// Random polynomial with integer coefficients in [-5, 5] over the first n
/// variables of each listed kind; total degree at most max_deg.
inline MultiPoly random_poly(std::mt19937& rng, int n, int max_deg,
                             std::vector<VarKind> kinds = {VarKind::X},
                             int max_terms = 6) {
  std::uniform_int_distribution<int> coef(-5, 5);
  std::uniform_int_distribution<int> nterms(0, max_terms);
  std::vector<Variable> vars;
  for (VarKind k : kinds) {
    if (k == VarKind::Beta) {
      vars.push_back(Variable::beta());
    } else {
      const int top = k == VarKind::Q ? n - 1 : n;
      for (int i = 1; i <= top; ++i) vars.push_back(Variable{k, i});
    }
  }
  std::uniform_int_distribution<std::size_t> pick(0, vars.empty() ? 0 : vars.size() - 1);
  std::uniform_int_distribution<int> deg(0, max_deg);
  MultiPoly f;
  const int terms = nterms(rng);
  for (int t = 0; t < terms; ++t) {
    Monomial m;
    const int d = vars.empty() ? 0 : deg(rng);
    for (int s = 0; s < d; ++s) {
      const Variable v = vars[pick(rng)];
      m.set_exponent(v, m.exponent(v) + 1);
    }
    f += MultiPoly(m, coef(rng));
  }
  return f;
}

/// Reference multiplication over exponent maps, no hashing or ordering tricks.
inline MultiPoly naive_multiply(const MultiPoly& a, const MultiPoly& b) {
  std::map<std::vector<unsigned>, mpz_class> acc;
  for (const auto& s : a.terms()) {
    for (const auto& t : b.terms()) {
      std::vector<unsigned> e(Monomial::kSlots);
      for (int k = 0; k < Monomial::kSlots; ++k) {
        e[k] = s.mono.exponent_at(k) + t.mono.exponent_at(k);
      }
      acc[e] += s.coef * t.coef;
    }
  }
  MultiPoly r;
  for (const auto& [e, c] : acc) {
    Monomial m;
    for (int k = 0; k < Monomial::kSlots; ++k) m.set_exponent(Variable::from_slot(k), e[k]);
    r += MultiPoly(m, c);
  }
  return r;
}

}  // namespace qgroth::testing
