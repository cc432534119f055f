#pragma once

// Double Grothendieck, double dual Grothendieck and double Schubert
// polynomials; the scalar product; normal forms modulo I_n and J_n; and the
// catalog of classical identity checks.

#include <map>
#include <memory>
#include <mutex>
#include <set>
#include <string>
#include <vector>

#include "qgroth/divdiff.hpp"
#include "qgroth/polyring.hpp"
#include "qgroth/report.hpp"
#include "qgroth/symgroup.hpp"

namespace qgroth {

/// prod_{i+j<=n} (x_i + y_j).
MultiPoly top_grothendieck(int n);

/// Every member of the three families for S_n:
///   G_w = pi^{(x)}_{w^{-1} w0} top,  H_w = psi^{(x)}_{w^{-1} w0} top,
///   S_w = del^{(x)}_{w^{-1} w0} top.
struct ClassicalFamilies {
  int n = 0;
  std::map<Permutation, MultiPoly> G;
  std::map<Permutation, MultiPoly> H;
  std::map<Permutation, MultiPoly> S;
};

/// Built once per rank and shared; safe to call from several threads.
const ClassicalFamilies& classical_families(int n);

MultiPoly grothendieck_double(const Permutation& w);
MultiPoly dual_grothendieck_double(const Permutation& w);
MultiPoly schubert_double(const Permutation& w);

/// Sets y = 0.
inline MultiPoly single(const MultiPoly& f) { return kill(f, VarKind::Y); }

/// x_i -> 0 (and y_i -> 0 when kill_y).
MultiPoly eta(const MultiPoly& f, bool kill_y = false);

/// pi_{w0}(f g), or eta of it when `quotient`.
MultiPoly scalar_product(const MultiPoly& f, const MultiPoly& g, int n,
                         bool quotient);

/// eta(pi_{w0}(.)) as a linear functional with a per-monomial cache.
class QuotientPairing {
 public:
  explicit QuotientPairing(int n) : n_(n) {}
  MultiPoly operator()(const MultiPoly& f);

 private:
  int n_;
  std::map<Monomial, MultiPoly> cache_;
};

enum class Ideal { I, JSigned, JUnsigned };

std::string ideal_name(Ideal c);

/// Reduction modulo I_n (e_i(x)), the signed J_n (e_i(x) + (-1)^{i-1} e_i(y))
/// or the unsigned J_n (e_i(x) - e_i(y)). Leading monomials of the rewriting
/// generators are x_i^{n-i+1}, so normal forms live on the staircase.
class NormalFormContext {
 public:
  NormalFormContext(int n, Ideal convention);

  int n() const { return n_; }
  Ideal convention() const { return convention_; }

  /// g_i, leading monomial x_i^{n-i+1}.
  const std::vector<MultiPoly>& generators() const { return gens_; }
  /// The defining generators of the ideal.
  std::vector<MultiPoly> ideal_generators() const;

  MultiPoly reduce(const MultiPoly& f) const;

 private:
  const MultiPoly& reduce_monomial(const Monomial& xpart) const;

  int n_;
  Ideal convention_;
  std::vector<MultiPoly> gens_;
  // x_i^{n-i+1} = tail_i modulo the ideal, split by x-monomial.
  std::vector<std::map<Monomial, MultiPoly>> tails_;
  mutable std::mutex mu_;
  mutable std::map<Monomial, MultiPoly> cache_;
};

MultiPoly normal_form(const MultiPoly& f, const NormalFormContext& ctx);

/// Monomials x^I with I_k <= n-k, in increasing order.
std::vector<Monomial> staircase(int n);

MultiPoly elementary(int k, const std::vector<MultiPoly>& vars);
MultiPoly complete(int k, const std::vector<MultiPoly>& vars);
/// x_1..x_n (or y, z).
std::vector<MultiPoly> alphabet(VarKind kind, int n);

/// The literal index set: w (i_1 j_1)...(i_{m+1} j_{m+1}) with
/// i_l <= k < j_l and length l(w)+m+1.
std::set<Permutation> pieri_targets(const Permutation& w, int k, int m);
/// The union over m of pieri_targets.
std::set<Permutation> pieri_targets_all(const Permutation& w, int k);
/// Saturated k-Bruhat chains from w whose steps w -> w (a b) have
/// a <= k < b, with b weakly decreasing along the chain and a strictly
/// increasing among steps sharing b.
std::set<Permutation> pieri_chain_targets(const Permutation& w, int k);

/// x_i -> x_{n+1-i}, y_i -> y_{n+1-i}.
MultiPoly omega(const MultiPoly& f, int n);

/// c_u = eta(pi_u f), so that f = sum_u c_u H_u(x) modulo I_n.
std::map<Permutation, MultiPoly> expand_dual_basis(const MultiPoly& f, int n);

/// Determinant by fraction-free elimination; entries are polynomials.
MultiPoly bareiss_determinant(std::vector<std::vector<MultiPoly>> m);

/// Coefficient matrix of `polys` over the monomials of `basis` in `kind`;
/// entries are the remaining parts (e.g. in beta, or in y).
std::vector<std::vector<MultiPoly>> coefficient_matrix(
    const std::vector<MultiPoly>& polys, const std::vector<Monomial>& basis,
    VarKind kind);

const std::vector<std::string>& classical_identity_ids();

struct CheckOptions {
  unsigned seed = 20240601;
  int interpolation_samples = 0;  // 0: 50 for n <= 3, 10 otherwise
};

/// Throws std::invalid_argument for an unknown id.
VerificationReport verify_classical(const std::string& id, int n,
                                    const CheckOptions& opts = {});

}  // namespace qgroth
