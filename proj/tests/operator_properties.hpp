#pragma once

// Randomized operator identities shared by the unit tests and the acceptance
// runner. Each check counts as one assertion.

#include <functional>
#include <random>
#include <string>
#include <vector>

#include "qgroth/catalog.hpp"
#include "support.hpp"

namespace qgroth::testing {

struct PropertyTally {
  std::size_t assertions = 0;
  std::size_t failures = 0;
  std::vector<std::string> first_failures;  // at most a few

  void check(bool ok, const std::string& what) {
    ++assertions;
    if (ok) return;
    ++failures;
    if (first_failures.size() < 5) first_failures.push_back(what);
  }
};

using Op = std::function<MultiPoly(int, const MultiPoly&)>;

inline Op op_of(OpKind k) {
  return [k](int i, const MultiPoly& f) { return apply_op(k, i, f, VarKind::X); };
}

inline const char* op_name(OpKind k) {
  switch (k) {
    case OpKind::Del: return "del";
    case OpKind::PiPlus: return "pi+";
    case OpKind::PiMinus: return "pi-";
  }
  return "?";
}

/// Relations, braid and commutation, squares, both Leibniz rules.
inline void check_relations(PropertyTally& t, std::mt19937& rng, int n, int rounds) {
  const std::vector<VarKind> kinds = {VarKind::X, VarKind::Y, VarKind::Beta};
  for (int r = 0; r < rounds; ++r) {
    const MultiPoly f = random_poly(rng, n, 6, kinds, 5);
    const MultiPoly g = random_poly(rng, n, 3, kinds, 3);
    const std::string tag = " n=" + std::to_string(n) + " f=" + to_text(f);
    for (OpKind k : {OpKind::Del, OpKind::PiPlus, OpKind::PiMinus}) {
      const Op T = op_of(k);
      const std::string name = op_name(k);
      for (int i = 1; i < n; ++i) {
        const MultiPoly Tf = T(i, f);
        // Squares: del^2 = 0, (pi+)^2 = -b pi+, (pi-)^2 = +b pi-.
        const MultiPoly sq = k == OpKind::Del       ? MultiPoly()
                             : k == OpKind::PiPlus ? -beta() * Tf
                                                    : beta() * Tf;
        t.check(T(i, Tf) == sq, name + " square i=" + std::to_string(i) + tag);
        if (i + 1 < n) {
          t.check(T(i, T(i + 1, T(i, f))) == T(i + 1, T(i, T(i + 1, f))),
                  name + " braid i=" + std::to_string(i) + tag);
        }
        for (int j = i + 2; j < n; ++j) {
          t.check(T(i, T(j, f)) == T(j, T(i, f)), name + " commute" + tag);
        }
      }
    }
    for (int i = 1; i < n; ++i) {
      const MultiPoly sf = swap_vars(f, i);
      const MultiPoly dg = del(i, g);
      t.check(del(i, f * g) == del(i, f) * g + sf * dg, "del Leibniz" + tag);
      t.check(pi(i, +1, f * g) == pi(i, +1, f) * g + (constant(1) + beta() * xv(i)) * sf * dg,
              "pi+ Leibniz" + tag);
      t.check(pi(i, -1, f * g) == pi(i, -1, f) * g + (constant(1) - beta() * xv(i)) * sf * dg,
              "pi- Leibniz" + tag);
      // Symmetric factors pass through.
      const MultiPoly s = f + sf;
      t.check(pi(i, +1, s * g) == s * pi(i, +1, g), "pi+ linear over invariants" + tag);
      t.check(del(i, s) == MultiPoly(), "del kills invariants" + tag);
    }
  }
}

/// psi_w = sum_{v<=w} b^{l(w)-l(v)} pi_v and pi_w = sum_{v<=w} (-b)^{l(w)-l(v)} psi_v.
inline void check_moebius(PropertyTally& t, std::mt19937& rng, int n, int rounds) {
  const auto perms = enumerate_sn(n);
  for (int r = 0; r < rounds; ++r) {
    const MultiPoly f = random_poly(rng, n, 5, {VarKind::X, VarKind::Y}, 4);
    std::map<Permutation, MultiPoly> psi;
    for (const auto& v : perms) psi[v] = apply_psi(v, f);
    for (const auto& w : perms) {
      MultiPoly back;
      for (const auto& v : perms) {
        if (bruhat_leq(v, w)) back += (-beta()).pow(w.length() - v.length()) * psi.at(v);
      }
      t.check(back == apply_perm(OpKind::PiPlus, w, f),
              "moebius inversion w=" + w.str() + " f=" + to_text(f));
    }
  }
}

/// [X_i, X_j] = 0.
inline void check_x_commutation(PropertyTally& t, std::mt19937& rng, int n, int rounds) {
  for (int r = 0; r < rounds; ++r) {
    const MultiPoly f = random_poly(rng, n, 4, {VarKind::X, VarKind::Y}, 4);
    for (int i = 1; i <= n; ++i) {
      for (int j = i + 1; j <= n; ++j) {
        t.check(apply_X(i, apply_X(j, f, n), n) == apply_X(j, apply_X(i, f, n), n),
                "X commute i=" + std::to_string(i) + " j=" + std::to_string(j) +
                    " f=" + to_text(f));
      }
    }
  }
}

/// The full suite; returns the tally.
inline PropertyTally run_operator_properties(unsigned seed) {
  PropertyTally t;
  std::mt19937 rng(seed);
  for (int n = 2; n <= 4; ++n) check_relations(t, rng, n, 40);
  check_moebius(t, rng, 3, 20);
  check_moebius(t, rng, 4, 2);
  for (int n = 2; n <= 4; ++n) check_x_commutation(t, rng, n, 15);
  return t;
}

}  // namespace qgroth::testing
