#include "qgroth/quantum.hpp"

#include <functional>
#include <mutex>
#include <random>
#include <stdexcept>

namespace qgroth {

MultiPoly q_product(int i, int j) {
  MultiPoly r(1);
  for (int k = i; k < j; ++k) r *= qv(k);
  return r;
}

MultiPoly quantum_elementary(int k, int i) {
  if (i < 0 || i > k) return {};
  // E_m = (x_m + t) E_{m-1} + q_{m-1} E_{m-2}, tracked coefficientwise in t.
  std::vector<MultiPoly> prev2;               // E_{m-2}: coefficients e~_0..
  std::vector<MultiPoly> prev{constant(1)};   // E_0
  for (int m = 1; m <= k; ++m) {
    std::vector<MultiPoly> cur(m + 1);
    for (int d = 0; d <= m; ++d) {
      if (d < static_cast<int>(prev.size())) cur[d] += prev[d];
      if (d >= 1 && d - 1 < static_cast<int>(prev.size())) cur[d] += xv(m) * prev[d - 1];
      if (m >= 2 && d >= 2 && d - 2 < static_cast<int>(prev2.size())) {
        cur[d] += qv(m - 1) * prev2[d - 2];
      }
    }
    prev2 = std::move(prev);
    prev = std::move(cur);
  }
  return prev[i];
}

MultiPoly gk_determinant(int k, const MultiPoly& t, bool beta_form) {
  MultiPoly r;
  const MultiPoly shift = constant(1) + beta() * t;
  for (int i = 0; i <= k; ++i) {
    MultiPoly term = t.pow(k - i) * quantum_elementary(k, i);
    if (beta_form) term *= shift.pow(i);
    r += term;
  }
  return r;
}

MultiPoly del_transposition(int i, int j, const MultiPoly& f) {
  Word w;
  for (int a = i; a < j; ++a) w.push_back(a);
  for (int a = j - 2; a >= i; --a) w.push_back(a);
  return apply_word(OpKind::Del, w, f, VarKind::X);
}

MultiPoly apply_X(int j, const MultiPoly& f, int n) {
  MultiPoly r = f.mul_monomial(Monomial(Variable::x(j)));
  for (int i = 1; i < j; ++i) r -= q_product(i, j) * del_transposition(i, j, f);
  for (int k = j + 1; k <= n; ++k) r += q_product(j, k) * del_transposition(j, k, f);
  return r;
}

namespace {

class XPowers {
 public:
  explicit XPowers(int n) : n_(n) {}

  const MultiPoly& get(const Monomial& m) {
    auto it = cache_.find(m);
    if (it != cache_.end()) return it->second;
    MultiPoly val(1);
    if (!m.is_one()) {
      int j = n_;
      while (m.exponent(Variable::x(j)) == 0) --j;
      Monomial lower = m;
      lower.set_exponent(Variable::x(j), m.exponent(Variable::x(j)) - 1);
      val = apply_X(j, get(lower), n_);
    }
    return cache_.emplace(m, std::move(val)).first->second;
  }

 private:
  int n_;
  std::map<Monomial, MultiPoly> cache_;
};

}  // namespace

MultiPoly evaluate_operator(const OperatorPoly& F, int n) {
  XPowers powers(n);
  MultiPoly r;
  for (const auto& [xpart, coef] : F.symbols.split_by(VarKind::X)) {
    r += coef * powers.get(xpart);
  }
  return r;
}

Quantization quantize(const MultiPoly& f, int n) {
  XPowers powers(n);
  MultiPoly residual = f;
  MultiPoly F;
  unsigned last = ~0u;
  while (!residual.is_zero()) {
    const unsigned d = residual.degree(VarKind::X);
    if (d >= last) throw std::logic_error("quantize: x-degree did not drop");
    last = d;
    for (const auto& [xpart, coef] : residual.split_by(VarKind::X)) {
      if (xpart.degree() != d) continue;
      F += coef.mul_monomial(xpart);
      residual -= coef * powers.get(xpart);
    }
  }
  return {OperatorPoly{F}, F};
}

// Families ------------------------------------------------------------------

namespace {

std::unique_ptr<QuantumFamilies> build_quantum(int n) {
  auto fam = std::make_unique<QuantumFamilies>();
  fam->n = n;
  const Permutation w0 = Permutation::longest(n);
  MultiPoly top(1), bold(1);
  for (int i = 1; i < n; ++i) {
    top *= gk_determinant(i, yv(n - i));
    bold *= gk_determinant(i, yv(n - i), true);
  }
  const auto orbit_del = operator_orbit(OpKind::Del, n, top, VarKind::Y);
  const auto orbit_pim = operator_orbit(OpKind::PiMinus, n, top, VarKind::Y);
  const auto orbit_bold = operator_orbit(OpKind::PiPlus, n, bold, VarKind::Y);
  const auto perms = enumerate_sn(n);
  for (const auto& w : perms) {
    const Permutation u = w * w0;
    fam->S.emplace(w, orbit_del.at(u));
    fam->H.emplace(w, orbit_pim.at(u));
    fam->boldG.emplace(w, orbit_bold.at(u));
    fam->boldH.emplace(w, bruhat_sum(u, orbit_bold, +1));
  }
  for (const auto& w : perms) {
    MultiPoly g;
    for (const auto& v : perms) {
      if (!bruhat_leq(w, v)) continue;
      g += (-beta()).pow(v.length() - w.length()) * fam->H.at(v);
    }
    fam->G.emplace(w, std::move(g));
  }
  return fam;
}

}  // namespace

const QuantumFamilies& quantum_families(int n) {
  if (n < 1 || n > kMaxRank) throw std::invalid_argument("rank out of range");
  static std::mutex mu;
  static std::map<int, std::unique_ptr<QuantumFamilies>> cache;
  std::lock_guard lock(mu);
  auto& slot = cache[n];
  if (!slot) slot = build_quantum(n);
  return *slot;
}

MultiPoly quantum_schubert_double(const Permutation& w) {
  return quantum_families(w.n()).S.at(w);
}
MultiPoly quantum_dual_grothendieck_double(const Permutation& w) {
  return quantum_families(w.n()).H.at(w);
}
MultiPoly quantum_grothendieck_double(const Permutation& w) {
  return quantum_families(w.n()).G.at(w);
}
MultiPoly bold_grothendieck(const Permutation& w) {
  return quantum_families(w.n()).boldG.at(w);
}
MultiPoly bold_dual_grothendieck(const Permutation& w) {
  return quantum_families(w.n()).boldH.at(w);
}

// Identity checks -------------------------------------------------------------

namespace {

using nlohmann::json;

json mismatch(const MultiPoly& lhs, const MultiPoly& rhs, json where = json::object()) {
  where["lhs_minus_rhs"] = to_text(lhs - rhs);
  return where;
}

MultiPoly kill_q(const MultiPoly& f) { return kill(f, VarKind::Q); }

MultiPoly random_x_poly(std::mt19937& rng, int n, int max_deg) {
  std::uniform_int_distribution<int> coef(-4, 4);
  std::uniform_int_distribution<int> e(0, max_deg);
  std::uniform_int_distribution<int> count(1, 5);
  MultiPoly f;
  const int terms = count(rng);
  for (int t = 0; t < terms; ++t) {
    Monomial m;
    int budget = max_deg;
    for (int i = 1; i <= n && budget > 0; ++i) {
      const int k = std::min(budget, e(rng) % (budget + 1));
      m.set_exponent(Variable::x(i), k);
      budget -= k;
    }
    f += MultiPoly(m, coef(rng));
  }
  return f;
}

json check_theorem1(int n, json&) {
  const auto& qf = quantum_families(n);
  const auto& cf = classical_families(n);
  const Permutation w0 = Permutation::longest(n);
  const MultiPoly lhs = evaluate_operator({qf.S.at(w0)}, n);
  if (lhs == cf.S.at(w0)) return nullptr;
  return mismatch(lhs, cf.S.at(w0));
}

json check_corollary1(int n, json&) {
  const auto& qf = quantum_families(n);
  const auto& cf = classical_families(n);
  for (const auto& w : enumerate_sn(n)) {
    const MultiPoly s = evaluate_operator({qf.S.at(w)}, n);
    if (!(s == cf.S.at(w))) return mismatch(s, cf.S.at(w), {{"w", w.str()}, {"family", "S"}});
    const MultiPoly h = evaluate_operator({qf.H.at(w)}, n);
    if (!(h == cf.H.at(w))) return mismatch(h, cf.H.at(w), {{"w", w.str()}, {"family", "H"}});
  }
  return nullptr;
}

json check_quantum_cauchy(int n, json& detail) {
  const auto& qf = quantum_families(n);
  const auto& cf = classical_families(n);
  const Permutation w0 = Permutation::longest(n);
  std::map<Variable, RatExpr> bind;
  for (int i = 1; i <= n; ++i) bind.emplace(Variable::y(i), ominus(Variable::z(i)));
  RatExpr lhs;
  for (const auto& [w, h] : qf.H) {
    const MultiPoly g = rename_alphabets(cf.G.at(w * w0),
                                         {{VarKind::X, VarKind::Y}, {VarKind::Y, VarKind::Z}});
    lhs = lhs + substitute(h, bind) * RatExpr(g);
  }
  const MultiPoly& rhs = qf.boldG.at(w0);
  detail = {{"denominator", to_text(lhs.expanded_den())}};
  if (rat_eq(lhs, RatExpr(rhs))) return nullptr;
  return mismatch(lhs.num, rhs * lhs.expanded_den());
}

json check_corollary2(int n, json&) {
  const auto& qf = quantum_families(n);
  const auto& cf = classical_families(n);
  const Permutation w0 = Permutation::longest(n);
  const auto perms = enumerate_sn(n);
  for (const auto& w : perms) {
    const MultiPoly h = single(qf.H.at(w));
    const MultiPoly g = single(qf.G.at(w));
    if (!(h == single(qf.boldH.at(w)))) {
      return mismatch(h, single(qf.boldH.at(w)), {{"w", w.str()}, {"bullet", 1}});
    }
    if (!(g == single(qf.boldG.at(w)))) {
      return mismatch(g, single(qf.boldG.at(w)), {{"w", w.str()}, {"bullet", 2}});
    }
    MultiPoly sum;
    for (const auto& v : perms) {
      const MultiPoly c = eta(apply_perm(OpKind::PiPlus, w * w0, single(cf.G.at(v * w0))));
      sum += c * single(qf.H.at(v));
    }
    if (!(g == sum)) return mismatch(g, sum, {{"w", w.str()}, {"bullet", 3}});
  }
  return nullptr;
}

MultiPoly reverse_q(const MultiPoly& f, int n) {
  std::map<Variable, MultiPoly> b;
  for (int i = 1; i < n; ++i) b.emplace(Variable::q(i), qv(n - i));
  return substitute(f, b);
}

json check_remark_id(int n, json& detail) {
  const auto& qf = quantum_families(n);
  const Permutation w0 = Permutation::longest(n);
  const Permutation id = Permutation::identity(n);
  const unsigned N = static_cast<unsigned>(n * (n - 1) / 2);
  const MultiPoly weighted = beta_weighted_sub(qf.G.at(w0), N);
  const MultiPoly& gid = qf.G.at(id);
  const MultiPoly& hid = qf.H.at(id);
  const MultiPoly swapped = substitute(
      rename_alphabets(gid, {{VarKind::X, VarKind::Y}, {VarKind::Y, VarKind::X}}),
      std::map<Variable, MultiPoly>{{Variable::beta(), -beta()}});
  const bool first = weighted == gid;
  const bool second = hid == swapped;
  const bool second_reversed = hid == reverse_q(swapped, n);
  detail = {{"beta_weighted_top", to_text(weighted)},
            {"beta_weighted_top_equals_G~_id", first},
            {"beta_weighted_top_equals_H~_id", weighted == hid},
            {"beta_weighted_top_equals_pi_minus_w0_of_G~_w0",
             weighted == apply_perm(OpKind::PiMinus, w0, qf.G.at(w0), VarKind::Y)},
            {"swap_holds_q_fixed", second},
            {"swap_holds_q_reversed", second_reversed}};
  if (first && (second || second_reversed)) return nullptr;
  json ce = json::object();
  if (!first) ce["beta_weighted_top_minus_G~_id"] = to_text(weighted - gid);
  if (!(second || second_reversed)) ce["H~_id_minus_swapped_G~_id"] = to_text(hid - swapped);
  return ce;
}

json check_quantization_props(int n, const CheckOptions& opts, json& detail) {
  const auto xs = alphabet(VarKind::X, n);
  int assertions = 0;
  for (int i = 1; i <= n; ++i) {
    const MultiPoly e = evaluate_operator({quantum_elementary(n, i)}, n);
    ++assertions;
    if (!(e == elementary(i, xs))) return mismatch(e, elementary(i, xs), {{"i", i}});
    const Quantization qz = quantize(elementary(i, xs), n);
    ++assertions;
    if (!(qz.fq == quantum_elementary(n, i))) {
      return mismatch(qz.fq, quantum_elementary(n, i), {{"i", i}, {"form", "quantize(e_i)"}});
    }
  }
  std::mt19937 rng(opts.seed + 17);
  for (int s = 0; s < 20; ++s) {
    const int i = 1 + s % n;
    const MultiPoly f = elementary(i, xs) * (s % 3 == 0 ? elementary(1, xs) : constant(1));
    const MultiPoly g = random_x_poly(rng, n, 3);
    const MultiPoly fq = quantize(f, n).fq;
    const MultiPoly gq = quantize(g, n).fq;
    const MultiPoly fgq = quantize(f * g, n).fq;
    ++assertions;
    if (!(fgq == fq * gq)) {
      return mismatch(fgq, fq * gq, {{"f", to_text(f)}, {"g", to_text(g)}, {"form", "quantize(fg)"}});
    }
  }
  // e~_i(X) acts on any g as multiplication by e_i(x).
  for (int s = 0; s < 10; ++s) {
    const int i = 1 + s % n;
    const MultiPoly g = random_x_poly(rng, n, 3);
    const MultiPoly gq = quantize(g, n).fq;
    const MultiPoly lhs = evaluate_operator({quantum_elementary(n, i) * gq}, n);
    ++assertions;
    if (!(lhs == elementary(i, xs) * g)) {
      return mismatch(lhs, elementary(i, xs) * g, {{"i", i}, {"g", to_text(g)}, {"form", "e~_i(X) g~(X)(1)"}});
    }
  }
  detail = {{"assertions", assertions}};
  return nullptr;
}

json check_commuting(int n, const CheckOptions& opts, json& detail) {
  std::mt19937 rng(opts.seed + 29);
  int assertions = 0;
  for (int s = 0; s < 10; ++s) {
    const MultiPoly f = random_x_poly(rng, n, 5);
    for (int i = 1; i <= n; ++i) {
      for (int j = i + 1; j <= n; ++j) {
        const MultiPoly a = apply_X(i, apply_X(j, f, n), n);
        const MultiPoly b = apply_X(j, apply_X(i, f, n), n);
        ++assertions;
        if (!(a == b)) return mismatch(a, b, {{"i", i}, {"j", j}, {"f", to_text(f)}});
      }
    }
  }
  detail = {{"assertions", assertions}};
  return nullptr;
}

json check_classical_limit(int n, json&) {
  const auto& qf = quantum_families(n);
  const auto& cf = classical_families(n);
  for (const auto& w : enumerate_sn(n)) {
    json where = {{"w", w.str()}};
    if (!(kill_q(qf.S.at(w)) == cf.S.at(w))) {
      where["family"] = "S~";
      return mismatch(kill_q(qf.S.at(w)), cf.S.at(w), where);
    }
    if (!(kill_q(qf.H.at(w)) == cf.H.at(w))) {
      where["family"] = "H~";
      return mismatch(kill_q(qf.H.at(w)), cf.H.at(w), where);
    }
    if (!(kill_q(qf.G.at(w)) == cf.G.at(w))) {
      where["family"] = "G~";
      return mismatch(kill_q(qf.G.at(w)), cf.G.at(w), where);
    }
  }
  return nullptr;
}

json check_quantum_stability(int n, json& detail) {
  const int m = n + 1;
  const auto& small = quantum_families(n);
  const auto& big = quantum_families(m);
  const MultiPoly hid_n = small.H.at(Permutation::identity(n));
  const MultiPoly hid_m = big.H.at(Permutation::identity(m));
  const MultiPoly gid_n = small.G.at(Permutation::identity(n));
  const MultiPoly gid_m = big.G.at(Permutation::identity(m));
  int literal_h_mismatches = 0;
  for (const auto& w : enumerate_sn(n)) {
    const Permutation wm = w.embed(m);
    json where = {{"w", w.str()}, {"m", m}};
    if (!(small.S.at(w) == big.S.at(wm))) {
      where["form"] = "S~_w(x,y)";
      return mismatch(small.S.at(w), big.S.at(wm), where);
    }
    if (!(small.H.at(w) * hid_m == big.H.at(wm) * hid_n)) {
      where["form"] = "H~_w/H~_id";
      return mismatch(small.H.at(w) * hid_m, big.H.at(wm) * hid_n, where);
    }
    if (!(small.G.at(w) * gid_m == big.G.at(wm) * gid_n)) {
      where["form"] = "G~_w/G~_id";
      return mismatch(small.G.at(w) * gid_m, big.G.at(wm) * gid_n, where);
    }
    if (!(small.H.at(w) == big.H.at(wm))) ++literal_h_mismatches;
  }
  detail = {{"m", m},
            {"checked", {"S~_w(x,y)", "H~_w/H~_id", "G~_w/G~_id"}},
            {"H~_w_unnormalized_mismatches", literal_h_mismatches}};
  return nullptr;
}

using Checker = std::function<json(int, const CheckOptions&, json&)>;

const std::vector<std::pair<std::string, Checker>>& catalog() {
  static const std::vector<std::pair<std::string, Checker>> c = {
      {"theorem1", [](int n, const CheckOptions&, json& d) { return check_theorem1(n, d); }},
      {"corollary1", [](int n, const CheckOptions&, json& d) { return check_corollary1(n, d); }},
      {"quantum_cauchy", [](int n, const CheckOptions&, json& d) { return check_quantum_cauchy(n, d); }},
      {"corollary2", [](int n, const CheckOptions&, json& d) { return check_corollary2(n, d); }},
      {"remark_id", [](int n, const CheckOptions&, json& d) { return check_remark_id(n, d); }},
      {"quantization_props", [](int n, const CheckOptions& o, json& d) { return check_quantization_props(n, o, d); }},
      {"commuting", [](int n, const CheckOptions& o, json& d) { return check_commuting(n, o, d); }},
      {"classical_limit", [](int n, const CheckOptions&, json& d) { return check_classical_limit(n, d); }},
      {"quantum_stability", [](int n, const CheckOptions&, json& d) { return check_quantum_stability(n, d); }},
  };
  return c;
}

}  // namespace

const std::vector<std::string>& quantum_identity_ids() {
  static const std::vector<std::string> ids = [] {
    std::vector<std::string> v;
    for (const auto& [id, fn] : catalog()) v.push_back(id);
    return v;
  }();
  return ids;
}

VerificationReport verify_quantum(const std::string& id, int n, const CheckOptions& opts) {
  for (const auto& [name, fn] : catalog()) {
    if (name != id) continue;
    if (n < 1 || n > 5) throw std::invalid_argument("quantum checks need 1 <= n <= 5");
    Stopwatch sw;
    json detail;
    json ce = fn(n, opts, detail);
    auto r = make_report(id, n, std::move(ce), std::move(detail));
    r.ms = sw.ms();
    return r;
  }
  throw std::invalid_argument("unknown identity id: " + id);
}

}  // namespace qgroth
