#include "qgroth/divdiff.hpp"

#include <stdexcept>
#include <unordered_map>

namespace qgroth {

namespace {

void check_index(int i) {
  if (i < 1 || i >= kMaxRank) {
    throw std::out_of_range("operator index out of range: " + std::to_string(i));
  }
}

}  // namespace

MultiPoly swap_vars(const MultiPoly& f, int i, VarKind alphabet) {
  check_index(i);
  const Variable a{alphabet, i};
  const Variable b{alphabet, i + 1};
  std::vector<Term> out;
  out.reserve(f.size());
  for (const auto& t : f.terms()) {
    Monomial m = t.mono;
    m.set_exponent(a, t.mono.exponent(b));
    m.set_exponent(b, t.mono.exponent(a));
    out.push_back({m, t.coef});
  }
  return MultiPoly::from_terms(std::move(out));
}

MultiPoly del(int i, const MultiPoly& f, VarKind alphabet) {
  check_index(i);
  const Variable va{alphabet, i};
  const Variable vb{alphabet, i + 1};
  std::unordered_map<Monomial, mpz_class, MonomialHash> acc;
  for (const auto& t : f.terms()) {
    const unsigned a = t.mono.exponent(va);
    const unsigned b = t.mono.exponent(vb);
    if (a == b) continue;
    const unsigned lo = std::min(a, b);
    const unsigned span = (a > b ? a - b : b - a) - 1;
    Monomial m = t.mono;
    for (unsigned k = 0; k <= span; ++k) {
      m.set_exponent(va, lo + span - k);
      m.set_exponent(vb, lo + k);
      if (a > b) {
        acc[m] += t.coef;
      } else {
        acc[m] -= t.coef;
      }
    }
  }
  std::vector<Term> out;
  out.reserve(acc.size());
  for (auto& [m, c] : acc) {
    if (c != 0) out.push_back({m, std::move(c)});
  }
  return MultiPoly::from_terms(std::move(out));
}

MultiPoly pi(int i, int sign, const MultiPoly& f, VarKind alphabet) {
  MultiPoly shifted = del(i, f.mul_monomial(Monomial(Variable{alphabet, i + 1})), alphabet);
  MultiPoly r = del(i, f, alphabet);
  if (sign >= 0) {
    r += beta() * shifted;
  } else {
    r -= beta() * shifted;
  }
  return r;
}

MultiPoly apply_op(OpKind kind, int i, const MultiPoly& f, VarKind alphabet) {
  switch (kind) {
    case OpKind::Del: return del(i, f, alphabet);
    case OpKind::PiPlus: return pi(i, +1, f, alphabet);
    case OpKind::PiMinus: return pi(i, -1, f, alphabet);
  }
  throw std::logic_error("unknown operator kind");
}

MultiPoly apply_word(OpKind kind, const Word& word, const MultiPoly& f,
                     VarKind alphabet) {
  MultiPoly r = f;
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    r = apply_op(kind, *it, r, alphabet);
  }
  return r;
}

MultiPoly apply_perm(OpKind kind, const Permutation& w, const MultiPoly& f,
                     VarKind alphabet) {
  return apply_word(kind, reduced_word(w), f, alphabet);
}

std::map<Permutation, MultiPoly> operator_orbit(OpKind kind, int n,
                                                const MultiPoly& f,
                                                VarKind alphabet) {
  std::map<Permutation, MultiPoly> orbit;
  std::vector<Permutation> level{Permutation::identity(n)};
  orbit.emplace(level.front(), f);
  while (!level.empty()) {
    std::vector<Permutation> next;
    for (const auto& v : level) {
      const int lv = v.length();
      for (int i = 1; i < n; ++i) {
        Permutation u = Permutation::simple(n, i) * v;
        if (u.length() != lv + 1 || orbit.count(u)) continue;
        orbit.emplace(u, apply_op(kind, i, orbit.at(v), alphabet));
        next.push_back(std::move(u));
      }
    }
    level = std::move(next);
  }
  return orbit;
}

MultiPoly bruhat_sum(const Permutation& w,
                     const std::map<Permutation, MultiPoly>& orbit, int sign) {
  const int lw = w.length();
  const MultiPoly b = sign >= 0 ? beta() : -beta();
  MultiPoly r;
  for (const auto& [v, p] : orbit) {
    if (!bruhat_leq(v, w)) continue;
    r += b.pow(static_cast<unsigned>(lw - v.length())) * p;
  }
  return r;
}

MultiPoly apply_psi(const Permutation& w, const MultiPoly& f, VarKind alphabet) {
  MultiPoly r;
  const int lw = w.length();
  for (const auto& v : enumerate_sn(w.n())) {
    if (!bruhat_leq(v, w)) continue;
    r += beta().pow(static_cast<unsigned>(lw - v.length())) *
         apply_perm(OpKind::PiPlus, v, f, alphabet);
  }
  return r;
}

}  // namespace qgroth
