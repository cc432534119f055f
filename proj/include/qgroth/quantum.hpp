#pragma once

// Quantum elementary polynomials, Givental-Kim determinants, the commuting
// operators X_j, the quantization map and the quantum double families.

#include <map>
#include <string>
#include <vector>

#include "qgroth/classical.hpp"
#include "qgroth/polyring.hpp"
#include "qgroth/report.hpp"
#include "qgroth/symgroup.hpp"

namespace qgroth {

/// q_i q_{i+1} ... q_{j-1} for i < j.
MultiPoly q_product(int i, int j);

/// The quantum elementary polynomial e~_i(x_1..x_k | q_1..q_{k-1}).
MultiPoly quantum_elementary(int k, int i);

/// sum_{i=0}^{k} t^{k-i} e~_i(x_1..x_k), or with beta_form
/// sum_{i=0}^{k} t^{k-i} (1 + beta t)^i e~_i(x_1..x_k).
MultiPoly gk_determinant(int k, const MultiPoly& t, bool beta_form = false);

/// del_i del_{i+1} ... del_{j-1} ... del_{i+1} del_i on x.
MultiPoly del_transposition(int i, int j, const MultiPoly& f);

/// X_j = x_j - sum_{i<j} q_ij del_(ij) + sum_{j<k} q_jk del_(jk) at rank n.
MultiPoly apply_X(int j, const MultiPoly& f, int n);

/// A polynomial in commuting symbols X_1..X_n, stored with x_i standing for
/// X_i and coefficients in y, beta, q.
struct OperatorPoly {
  MultiPoly symbols;
};

/// F(X_1..X_n)(1). Caches X^I(1) per call.
MultiPoly evaluate_operator(const OperatorPoly& F, int n);

struct Quantization {
  OperatorPoly F;
  MultiPoly fq;  // F with X_i read as x_i
};

/// The unique F with F(X)(1) = f, by elimination on x-degree.
/// Throws std::logic_error if the degree fails to drop.
Quantization quantize(const MultiPoly& f, int n);

/// Quantum families for S_n:
///   S~_w0  = prod_{i=1}^{n-1} Delta_i(y_{n-i} | x_1..x_i)
///   S~_w   = del^{(y)}_{w w0} S~_w0
///   H~_w   = (pi^-)^{(y)}_{w w0} S~_w0
///   G~_w   = sum_{w <= v} (-beta)^{l(v)-l(w)} H~_v
///   Gb_w0  = prod_k Delta^{(beta)}_k(y_{n-k} | x_1..x_k)
///   Gb_w   = pi^{(y)}_{w w0} Gb_w0,  Hb_w = psi^{(y)}_{w w0} Gb_w0
struct QuantumFamilies {
  int n = 0;
  std::map<Permutation, MultiPoly> S, H, G, boldG, boldH;
};

const QuantumFamilies& quantum_families(int n);

MultiPoly quantum_schubert_double(const Permutation& w);
MultiPoly quantum_dual_grothendieck_double(const Permutation& w);
MultiPoly quantum_grothendieck_double(const Permutation& w);
MultiPoly bold_grothendieck(const Permutation& w);
MultiPoly bold_dual_grothendieck(const Permutation& w);

const std::vector<std::string>& quantum_identity_ids();

VerificationReport verify_quantum(const std::string& id, int n,
                                  const CheckOptions& opts = {});

}  // namespace qgroth
