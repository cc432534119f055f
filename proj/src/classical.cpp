#include "qgroth/classical.hpp"

#include <functional>
#include <mutex>
#include <random>
#include <stdexcept>

namespace qgroth {

MultiPoly top_grothendieck(int n) {
  MultiPoly r(1);
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; i + j <= n; ++j) r *= xv(i) + yv(j);
  }
  return r;
}

namespace {

std::unique_ptr<ClassicalFamilies> build_families(int n) {
  auto fam = std::make_unique<ClassicalFamilies>();
  fam->n = n;
  const MultiPoly top = top_grothendieck(n);
  const Permutation w0 = Permutation::longest(n);
  const auto orbit_pi = operator_orbit(OpKind::PiPlus, n, top, VarKind::X);
  const auto orbit_del = operator_orbit(OpKind::Del, n, top, VarKind::X);
  for (const auto& w : enumerate_sn(n)) {
    const Permutation u = w.inverse() * w0;
    fam->G.emplace(w, orbit_pi.at(u));
    fam->S.emplace(w, orbit_del.at(u));
    fam->H.emplace(w, bruhat_sum(u, orbit_pi, +1));
  }
  return fam;
}

}  // namespace

const ClassicalFamilies& classical_families(int n) {
  if (n < 1 || n > kMaxRank) throw std::invalid_argument("rank out of range");
  static std::mutex mu;
  static std::map<int, std::unique_ptr<ClassicalFamilies>> cache;
  std::lock_guard lock(mu);
  auto& slot = cache[n];
  if (!slot) slot = build_families(n);
  return *slot;
}

MultiPoly grothendieck_double(const Permutation& w) {
  return classical_families(w.n()).G.at(w);
}
MultiPoly dual_grothendieck_double(const Permutation& w) {
  return classical_families(w.n()).H.at(w);
}
MultiPoly schubert_double(const Permutation& w) {
  return classical_families(w.n()).S.at(w);
}

MultiPoly eta(const MultiPoly& f, bool kill_y) {
  MultiPoly r = kill(f, VarKind::X);
  return kill_y ? kill(r, VarKind::Y) : r;
}

MultiPoly scalar_product(const MultiPoly& f, const MultiPoly& g, int n,
                         bool quotient) {
  MultiPoly p = apply_perm(OpKind::PiPlus, Permutation::longest(n), f * g);
  return quotient ? eta(p) : p;
}

MultiPoly QuotientPairing::operator()(const MultiPoly& f) {
  MultiPoly r;
  const Permutation w0 = Permutation::longest(n_);
  for (const auto& [xpart, rest] : f.split_by(VarKind::X)) {
    auto it = cache_.find(xpart);
    if (it == cache_.end()) {
      it = cache_.emplace(xpart, eta(apply_perm(OpKind::PiPlus, w0,
                                                MultiPoly(xpart, 1))))
               .first;
    }
    r += it->second * rest;
  }
  return r;
}

// Symmetric functions -------------------------------------------------------

std::vector<MultiPoly> alphabet(VarKind kind, int n) {
  std::vector<MultiPoly> v;
  for (int i = 1; i <= n; ++i) v.push_back(var(Variable{kind, i}));
  return v;
}

MultiPoly elementary(int k, const std::vector<MultiPoly>& vars) {
  if (k < 0) return {};
  std::vector<MultiPoly> e(k + 1);
  e[0] = constant(1);
  for (const auto& v : vars) {
    for (int j = k; j >= 1; --j) e[j] += v * e[j - 1];
  }
  return e[k];
}

MultiPoly complete(int k, const std::vector<MultiPoly>& vars) {
  if (k < 0) return {};
  std::vector<MultiPoly> h(k + 1);
  h[0] = constant(1);
  for (const auto& v : vars) {
    for (int j = 1; j <= k; ++j) h[j] += v * h[j - 1];
  }
  return h[k];
}

// Normal forms ---------------------------------------------------------------

std::string ideal_name(Ideal c) {
  switch (c) {
    case Ideal::I: return "I_n";
    case Ideal::JSigned: return "J_signed";
    case Ideal::JUnsigned: return "J_unsigned";
  }
  return {};
}

NormalFormContext::NormalFormContext(int n, Ideal convention)
    : n_(n), convention_(convention) {
  const auto xs = alphabet(VarKind::X, n);
  std::vector<MultiPoly> ys;
  if (convention != Ideal::I) {
    for (const auto& y : alphabet(VarKind::Y, n)) {
      ys.push_back(convention == Ideal::JSigned ? -y : y);
    }
  }
  for (int i = 1; i <= n; ++i) {
    const int k = n - i + 1;
    const std::vector<MultiPoly> head(xs.begin(), xs.begin() + i);
    const std::vector<MultiPoly> tail(xs.begin() + i, xs.end());
    MultiPoly g = complete(k, head);
    for (int b = 0; b <= k; ++b) {
      MultiPoly term = elementary(b, tail) * complete(k - b, ys);
      if (b % 2) {
        g += term;
      } else {
        g -= term;
      }
    }
    tails_.push_back((xv(i).pow(k) - g).split_by(VarKind::X));
    gens_.push_back(std::move(g));
  }
}

std::vector<MultiPoly> NormalFormContext::ideal_generators() const {
  const auto xs = alphabet(VarKind::X, n_);
  const auto ys = alphabet(VarKind::Y, n_);
  std::vector<MultiPoly> out;
  for (int i = 1; i <= n_; ++i) {
    MultiPoly g = elementary(i, xs);
    if (convention_ == Ideal::JSigned) {
      g += (i % 2 ? constant(1) : constant(-1)) * elementary(i, ys);
    } else if (convention_ == Ideal::JUnsigned) {
      g -= elementary(i, ys);
    }
    out.push_back(std::move(g));
  }
  return out;
}

const MultiPoly& NormalFormContext::reduce_monomial(const Monomial& xpart) const {
  auto it = cache_.find(xpart);
  if (it != cache_.end()) return it->second;
  int hit = 0;
  for (int i = 1; i <= n_; ++i) {
    if (xpart.exponent(Variable::x(i)) >= static_cast<unsigned>(n_ - i + 1)) {
      hit = i;
      break;
    }
  }
  MultiPoly val;
  if (!hit) {
    val = MultiPoly(xpart, 1);
  } else {
    const Monomial rest = xpart / Monomial(Variable::x(hit), n_ - hit + 1);
    for (const auto& [xp, coef] : tails_[hit - 1]) {
      val += coef * reduce_monomial(rest * xp);
    }
  }
  return cache_.emplace(xpart, std::move(val)).first->second;
}

MultiPoly NormalFormContext::reduce(const MultiPoly& f) const {
  std::lock_guard lock(mu_);
  MultiPoly r;
  for (const auto& [xpart, coef] : f.split_by(VarKind::X)) {
    r += coef * reduce_monomial(xpart);
  }
  return r;
}

MultiPoly normal_form(const MultiPoly& f, const NormalFormContext& ctx) {
  return ctx.reduce(f);
}

std::vector<Monomial> staircase(int n) {
  std::vector<Monomial> out{Monomial()};
  for (int k = 1; k <= n; ++k) {
    std::vector<Monomial> next;
    for (const auto& m : out) {
      for (int e = 0; e <= n - k; ++e) {
        Monomial t = m;
        t.set_exponent(Variable::x(k), e);
        next.push_back(t);
      }
    }
    out = std::move(next);
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Pieri index sets ------------------------------------------------------------

std::set<Permutation> pieri_targets(const Permutation& w, int k, int m) {
  const int n = w.n();
  if (k < 1 || k >= n) throw std::invalid_argument("pieri index out of range");
  std::set<Permutation> level{w};
  for (int step = 0; step <= m; ++step) {
    std::set<Permutation> next;
    for (const auto& u : level) {
      for (int i = 1; i <= k; ++i) {
        for (int j = k + 1; j <= n; ++j) {
          next.insert(u * Permutation::transposition(n, i, j));
        }
      }
    }
    level = std::move(next);
  }
  std::set<Permutation> out;
  for (const auto& v : level) {
    if (v.length() == w.length() + m + 1) out.insert(v);
  }
  return out;
}

std::set<Permutation> pieri_targets_all(const Permutation& w, int k) {
  std::set<Permutation> out;
  const int top = Permutation::longest(w.n()).length();
  for (int m = 0; w.length() + m + 1 <= top; ++m) {
    auto s = pieri_targets(w, k, m);
    out.insert(s.begin(), s.end());
  }
  return out;
}

namespace {

void chain_step(const Permutation& u, int k, int last_a, int last_b,
                std::set<Permutation>& out) {
  const int n = u.n();
  for (int b = n; b > k; --b) {
    if (last_b && b > last_b) continue;
    for (int a = 1; a <= k; ++a) {
      if (last_b && b == last_b && a <= last_a) continue;
      Permutation v = u * Permutation::transposition(n, a, b);
      if (v.length() != u.length() + 1) continue;
      out.insert(v);
      chain_step(v, k, a, b, out);
    }
  }
}

}  // namespace

std::set<Permutation> pieri_chain_targets(const Permutation& w, int k) {
  if (k < 1 || k >= w.n()) throw std::invalid_argument("pieri index out of range");
  std::set<Permutation> out;
  chain_step(w, k, 0, 0, out);
  return out;
}

MultiPoly omega(const MultiPoly& f, int n) {
  std::vector<Term> out;
  out.reserve(f.size());
  for (const auto& t : f.terms()) {
    Monomial m = t.mono;
    for (int i = 1; i <= n; ++i) {
      m.set_exponent(Variable::x(i), t.mono.exponent(Variable::x(n + 1 - i)));
      m.set_exponent(Variable::y(i), t.mono.exponent(Variable::y(n + 1 - i)));
    }
    out.push_back({m, t.coef});
  }
  return MultiPoly::from_terms(std::move(out));
}

std::map<Permutation, MultiPoly> expand_dual_basis(const MultiPoly& f, int n) {
  std::map<Permutation, MultiPoly> out;
  for (auto& [u, p] : operator_orbit(OpKind::PiPlus, n, f, VarKind::X)) {
    out.emplace(u, eta(p));
  }
  return out;
}

MultiPoly bareiss_determinant(std::vector<std::vector<MultiPoly>> m) {
  const std::size_t n = m.size();
  if (n == 0) return constant(1);
  bool negate = false;
  MultiPoly prev(1);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k].is_zero()) {
      std::size_t r = k + 1;
      while (r < n && m[r][k].is_zero()) ++r;
      if (r == n) return {};
      std::swap(m[k], m[r]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m[i][j] = exact_divide(m[k][k] * m[i][j] - m[i][k] * m[k][j], prev);
      }
      m[i][k] = MultiPoly();
    }
    prev = m[k][k];
  }
  return negate ? -m[n - 1][n - 1] : m[n - 1][n - 1];
}

std::vector<std::vector<MultiPoly>> coefficient_matrix(
    const std::vector<MultiPoly>& polys, const std::vector<Monomial>& basis,
    VarKind kind) {
  std::vector<std::vector<MultiPoly>> rows;
  for (const auto& p : polys) {
    const auto parts = p.split_by(kind);
    std::vector<MultiPoly> row;
    std::size_t used = 0;
    for (const auto& m : basis) {
      auto it = parts.find(m);
      if (it == parts.end()) {
        row.emplace_back();
      } else {
        row.push_back(it->second);
        ++used;
      }
    }
    if (used != parts.size()) {
      throw std::domain_error("polynomial has monomials outside the basis");
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

// Identity checks ----------------------------------------------------------

namespace {

using nlohmann::json;

json mismatch(const MultiPoly& lhs, const MultiPoly& rhs, json where = json::object()) {
  where["lhs_minus_rhs"] = to_text(lhs - rhs);
  return where;
}

MultiPoly beta_pow(long sign, int e) {
  return (sign >= 0 ? beta() : -beta()).pow(static_cast<unsigned>(e));
}

MultiPoly negate_y(const MultiPoly& f, int n) {
  std::map<Variable, MultiPoly> b;
  for (int i = 1; i <= n; ++i) b.emplace(Variable::y(i), -yv(i));
  return substitute(f, b);
}

MultiPoly flip_beta(const MultiPoly& f) {
  return substitute(f, std::map<Variable, MultiPoly>{{Variable::beta(), -beta()}});
}

MultiPoly permute_y(const MultiPoly& f, const Permutation& w) {
  std::map<Variable, MultiPoly> b;
  for (int i = 1; i <= w.n(); ++i) b.emplace(Variable::y(i), yv(w(i)));
  return substitute(f, b);
}

MultiPoly cauchy_rhs(int n) {
  MultiPoly r(1);
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; i + j <= n; ++j) r *= xv(i) + yv(j) + beta() * xv(i) * yv(j);
  }
  return r;
}

json check_cauchy(int n, json& detail) {
  const auto& fam = classical_families(n);
  const Permutation w0 = Permutation::longest(n);
  std::map<Variable, RatExpr> bind;
  for (int i = 1; i <= n; ++i) bind.emplace(Variable::y(i), ominus(Variable::z(i)));
  RatExpr lhs;
  for (const auto& [w, h] : fam.H) {
    const MultiPoly g = rename_alphabets(fam.G.at(w * w0),
                                         {{VarKind::X, VarKind::Y}, {VarKind::Y, VarKind::Z}});
    lhs = lhs + substitute(h, bind) * RatExpr(g);
  }
  const MultiPoly rhs = cauchy_rhs(n);
  detail = {{"denominator", to_text(lhs.expanded_den())}};
  if (rat_eq(lhs, RatExpr(rhs))) return nullptr;
  return mismatch(lhs.num, rhs * lhs.expanded_den());
}

json check_orthogonality(int n, json& detail) {
  const auto& fam = classical_families(n);
  const auto perms = enumerate_sn(n);
  const Permutation w0 = Permutation::longest(n);
  QuotientPairing pair(n);
  json matrix = json::array();
  json bad = nullptr;
  for (const auto& u : perms) {
    json row = json::array();
    const MultiPoly hu = single(fam.H.at(u));
    for (const auto& v : perms) {
      const MultiPoly val = pair(hu * single(fam.G.at(v)));
      const MultiPoly want = constant(v == w0 * u ? 1 : 0);
      row.push_back(to_text(val));
      if (!(val == want) && bad.is_null()) {
        bad = {{"u", u.str()}, {"v", v.str()}, {"value", to_text(val)},
               {"expected", to_text(want)}};
      }
    }
    matrix.push_back(row);
  }
  detail = {{"rows", "H_u(x) in length-then-lex order"},
            {"columns", "G_v(x) in length-then-lex order"},
            {"matrix", matrix}};
  return bad;
}

json check_pieri_simple(int n, json& detail) {
  const auto& fam = classical_families(n);
  const NormalFormContext ctx(n, Ideal::I);
  json bad = nullptr;
  int printed_failures = 0;
  json printed_example = nullptr;
  int cases = 0;
  for (const auto& w : enumerate_sn(n)) {
    const MultiPoly gw = single(fam.G.at(w));
    for (int k = 1; k < n; ++k) {
      ++cases;
      const MultiPoly lhs = single(fam.G.at(Permutation::simple(n, k))) * gw;
      auto sum_over = [&](const std::set<Permutation>& vs) {
        MultiPoly r;
        for (const auto& v : vs) {
          r += beta_pow(1, v.length() - w.length() - 1) * single(fam.G.at(v));
        }
        return r;
      };
      const MultiPoly rhs = sum_over(pieri_chain_targets(w, k));
      const MultiPoly diff = ctx.reduce(lhs - rhs);
      if (!diff.is_zero() && bad.is_null()) {
        bad = {{"w", w.str()}, {"k", k}, {"normal_form_difference", to_text(diff)}};
      }
      const MultiPoly printed = sum_over(pieri_targets_all(w, k));
      if (!ctx.reduce(lhs - printed).is_zero()) {
        if (printed_failures++ == 0) printed_example = {{"w", w.str()}, {"k", k}};
      }
    }
  }
  detail = {{"cases", cases},
            {"index_set", "k-Bruhat chains, b weakly decreasing, a increasing on ties"},
            {"unordered_transposition_products_failures", printed_failures},
            {"unordered_transposition_products_first_failure", printed_example}};
  return bad;
}

json pieri_double_failure(int n, Ideal conv) {
  const auto& fam = classical_families(n);
  const NormalFormContext ctx(n, conv);
  const MultiPoly gid = fam.G.at(Permutation::identity(n));
  for (const auto& w : enumerate_sn(n)) {
    for (int k = 1; k < n; ++k) {
      const MultiPoly lhs = permute_y(fam.G.at(Permutation::simple(n, k)), w) * fam.G.at(w);
      MultiPoly sum;
      for (const auto& v : pieri_chain_targets(w, k)) {
        sum += beta_pow(1, v.length() - w.length() - 1) * fam.G.at(v);
      }
      const MultiPoly diff = ctx.reduce(lhs - permute_y(gid, w) * sum);
      if (!diff.is_zero()) {
        return {{"w", w.str()}, {"k", k}, {"ideal", ideal_name(conv)},
                {"normal_form_difference", to_text(diff)}};
      }
    }
  }
  return nullptr;
}

json check_pieri_double(int n, json& detail) {
  json signed_fail = pieri_double_failure(n, Ideal::JSigned);
  if (signed_fail.is_null()) {
    detail = {{"holding_convention", "J_signed"}};
    return nullptr;
  }
  json unsigned_fail = pieri_double_failure(n, Ideal::JUnsigned);
  detail = {{"holding_convention", unsigned_fail.is_null() ? json("J_unsigned") : json(nullptr)},
            {"J_unsigned_counterexample", unsigned_fail}};
  return signed_fail;
}

json check_interpolation(int n, const CheckOptions& opts, json& detail) {
  const auto& fam = classical_families(n);
  const int samples =
      opts.interpolation_samples > 0 ? opts.interpolation_samples : (n <= 3 ? 50 : 10);
  std::mt19937 rng(opts.seed);
  std::uniform_int_distribution<int> coef(-3, 3);
  std::uniform_int_distribution<int> bexp(0, 2);
  const auto basis = staircase(n);
  const MultiPoly gid_neg = negate_y(fam.G.at(Permutation::identity(n)), n);
  std::map<Permutation, MultiPoly> h_neg;
  for (const auto& [w, h] : fam.H) h_neg.emplace(w, negate_y(h, n));
  for (int s = 0; s < samples; ++s) {
    MultiPoly f;
    for (const auto& m : basis) {
      f += MultiPoly(m, coef(rng)) * beta().pow(bexp(rng));
    }
    const MultiPoly fy = rename_alphabets(f, {{VarKind::X, VarKind::Y}});
    const auto orbit = operator_orbit(OpKind::PiPlus, n, fy, VarKind::Y);
    MultiPoly rhs;
    for (const auto& [w, p] : orbit) rhs += h_neg.at(w) * p;
    const MultiPoly lhs = f * gid_neg;
    if (!(lhs == rhs)) return mismatch(lhs, rhs, {{"sample", s}, {"f", to_text(f)}});
  }
  detail = {{"samples", samples}, {"seed", opts.seed}};
  return nullptr;
}

json involution_failure(int n, Ideal conv) {
  const auto& fam = classical_families(n);
  const NormalFormContext ctx(n, conv);
  const Permutation w0 = Permutation::longest(n);
  const Permutation id = Permutation::identity(n);
  const MultiPoly hid = fam.H.at(id);
  const MultiPoly wgid = omega(fam.G.at(id), n);
  for (const auto& v : enumerate_sn(n)) {
    const MultiPoly lhs = omega(fam.G.at(v), n) * hid;
    MultiPoly rhs = fam.H.at(w0 * v * w0) * wgid;
    if (v.length() % 2) rhs = -rhs;
    const MultiPoly diff = ctx.reduce(lhs - rhs);
    if (!diff.is_zero()) {
      return {{"v", v.str()}, {"ideal", ideal_name(conv)},
              {"normal_form_difference", to_text(diff)}};
    }
  }
  return nullptr;
}

json check_involution(int n, json& detail) {
  json s = involution_failure(n, Ideal::JSigned);
  json u = involution_failure(n, Ideal::JUnsigned);
  json holding = json::array();
  if (s.is_null()) holding.push_back("J_signed");
  if (u.is_null()) holding.push_back("J_unsigned");
  detail = {{"holding_conventions", holding},
            {"J_signed_counterexample", s},
            {"J_unsigned_counterexample", u}};
  if (!holding.empty()) return nullptr;
  return {{"J_signed", s}, {"J_unsigned", u}};
}

json check_moebius(int n, json&) {
  const auto& fam = classical_families(n);
  const Permutation w0 = Permutation::longest(n);
  const MultiPoly gid = fam.G.at(Permutation::identity(n));
  for (const auto& w : enumerate_sn(n)) {
    const MultiPoly ph = apply_perm(OpKind::PiPlus, w0, fam.H.at(w));
    const MultiPoly want_h = w == w0 ? gid : MultiPoly();
    if (!(ph == want_h)) return mismatch(ph, want_h, {{"w", w.str()}, {"family", "H"}});
    const MultiPoly pg = apply_perm(OpKind::PiPlus, w0, fam.G.at(w));
    const MultiPoly want_g = beta_pow(-1, (w0 * w).length()) * gid;
    if (!(pg == want_g)) return mismatch(pg, want_g, {{"w", w.str()}, {"family", "G"}});
  }
  return nullptr;
}

json check_closed_forms(int n, json& detail) {
  const auto& fam = classical_families(n);
  const Permutation id = Permutation::identity(n);
  MultiPoly g(1), h(1);
  for (int k = 1; k < n; ++k) {
    g *= (constant(1) - beta() * yv(k)).pow(n - k);
    h *= (constant(1) + beta() * xv(k)).pow(n - k);
  }
  detail = {{"G_id", to_text(fam.G.at(id))}, {"H_id", to_text(fam.H.at(id))}};
  if (!(fam.G.at(id) == g)) return mismatch(fam.G.at(id), g, {{"family", "G"}});
  if (!(fam.H.at(id) == h)) return mismatch(fam.H.at(id), h, {{"family", "H"}});
  return nullptr;
}

json check_dominant(int n, json& detail) {
  const auto& fam = classical_families(n);
  const MultiPoly gid = fam.G.at(Permutation::identity(n));
  int count = 0;
  for (const auto& w : enumerate_sn(n)) {
    if (!is_dominant(w)) continue;
    ++count;
    const auto c = code(w);
    MultiPoly num(1), den(1);
    for (int k = 1; k <= n; ++k) {
      for (int i = 1; i <= c[k - 1]; ++i) {
        num *= xv(k) + yv(i);
        den *= constant(1) - beta() * yv(i);
      }
    }
    const MultiPoly lhs = fam.G.at(w) * den;
    const MultiPoly rhs = gid * num;
    if (!(lhs == rhs)) return mismatch(lhs, rhs, {{"w", w.str()}});
  }
  detail = {{"dominant_permutations", count}};
  return nullptr;
}

json check_duality(int n, json&) {
  const auto& fam = classical_families(n);
  for (const auto& [w, h] : fam.H) {
    const MultiPoly swapped = flip_beta(rename_alphabets(
        fam.G.at(w.inverse()), {{VarKind::X, VarKind::Y}, {VarKind::Y, VarKind::X}}));
    if (!(h == swapped)) return mismatch(h, swapped, {{"w", w.str()}});
  }
  return nullptr;
}

json check_inversion(int n, json&) {
  const auto& fam = classical_families(n);
  for (const auto& w : enumerate_sn(n)) {
    MultiPoly hsum, gsum;
    for (const auto& v : enumerate_sn(n)) {
      if (!bruhat_leq(w, v)) continue;
      const int d = v.length() - w.length();
      hsum += beta_pow(1, d) * fam.G.at(v);
      gsum += beta_pow(-1, d) * fam.H.at(v);
    }
    if (!(fam.H.at(w) == hsum)) return mismatch(fam.H.at(w), hsum, {{"w", w.str()}, {"expansion", "H in G"}});
    if (!(fam.G.at(w) == gsum)) return mismatch(fam.G.at(w), gsum, {{"w", w.str()}, {"expansion", "G in H"}});
  }
  return nullptr;
}

json check_stability(int n, json& detail) {
  const int m = n + 1;
  const auto& small = classical_families(n);
  const auto& big = classical_families(m);
  const MultiPoly gid_n = small.G.at(Permutation::identity(n));
  const MultiPoly gid_m = big.G.at(Permutation::identity(m));
  const MultiPoly hid_n = small.H.at(Permutation::identity(n));
  const MultiPoly hid_m = big.H.at(Permutation::identity(m));
  int literal_double_failures = 0;
  for (const auto& w : enumerate_sn(n)) {
    const Permutation wm = w.embed(m);
    json where = {{"w", w.str()}, {"m", m}};
    const MultiPoly& g = small.G.at(w);
    const MultiPoly& gm = big.G.at(wm);
    if (!(single(g) == single(gm))) {
      where["form"] = "G_w(x)";
      return mismatch(single(g), single(gm), where);
    }
    if (!(small.S.at(w) == big.S.at(wm))) {
      where["form"] = "S_w(x,y)";
      return mismatch(small.S.at(w), big.S.at(wm), where);
    }
    if (!(g * gid_m == gm * gid_n)) {
      where["form"] = "G_w(x,y)/G_id(x,y)";
      return mismatch(g * gid_m, gm * gid_n, where);
    }
    if (!(small.H.at(w) * hid_m == big.H.at(wm) * hid_n)) {
      where["form"] = "H_w(x,y)/H_id(x,y)";
      return mismatch(small.H.at(w) * hid_m, big.H.at(wm) * hid_n, where);
    }
    if (!(g == gm)) ++literal_double_failures;
  }
  detail = {{"m", m},
            {"checked", {"G_w(x)", "S_w(x,y)", "G_w(x,y)/G_id(x,y)", "H_w(x,y)/H_id(x,y)"}},
            {"G_w(x,y)_unnormalized_mismatches", literal_double_failures}};
  return nullptr;
}

json check_basis(int n, json& detail) {
  const auto& fam = classical_families(n);
  std::vector<MultiPoly> polys;
  for (const auto& w : enumerate_sn(n)) polys.push_back(single(fam.G.at(w)));
  const MultiPoly det = bareiss_determinant(coefficient_matrix(polys, staircase(n), VarKind::X));
  detail = {{"determinant", to_text(det)}};
  if (det == constant(1) || det == constant(-1)) return nullptr;
  return {{"determinant", to_text(det)}};
}

json check_free_module(int n, json& detail) {
  const auto& fam = classical_families(n);
  const NormalFormContext ctx(n, Ideal::JUnsigned);
  json dets = json::object();
  json bad = nullptr;
  for (const bool dbl : {false, true}) {
    std::vector<MultiPoly> polys;
    for (const auto& w : enumerate_sn(n)) {
      const MultiPoly s = dbl ? fam.S.at(w) : single(fam.S.at(w));
      polys.push_back(ctx.reduce(s));
    }
    const MultiPoly det =
        bareiss_determinant(coefficient_matrix(polys, staircase(n), VarKind::X));
    const std::string name = dbl ? "S_w(x,y)" : "S_w(x)";
    dets[name] = to_text(det);
    if (det.is_zero() && bad.is_null()) bad = {{"basis", name}, {"determinant", "0"}};
  }
  detail = {{"determinants", dets}};
  return bad;
}

using Checker = std::function<json(int, const CheckOptions&, json&)>;

const std::vector<std::pair<std::string, Checker>>& catalog() {
  static const std::vector<std::pair<std::string, Checker>> c = {
      {"cauchy", [](int n, const CheckOptions&, json& d) { return check_cauchy(n, d); }},
      {"orthogonality", [](int n, const CheckOptions&, json& d) { return check_orthogonality(n, d); }},
      {"pieri_simple", [](int n, const CheckOptions&, json& d) { return check_pieri_simple(n, d); }},
      {"pieri_double", [](int n, const CheckOptions&, json& d) { return check_pieri_double(n, d); }},
      {"interpolation", [](int n, const CheckOptions& o, json& d) { return check_interpolation(n, o, d); }},
      {"involution", [](int n, const CheckOptions&, json& d) { return check_involution(n, d); }},
      {"moebius", [](int n, const CheckOptions&, json& d) { return check_moebius(n, d); }},
      {"closed_forms", [](int n, const CheckOptions&, json& d) { return check_closed_forms(n, d); }},
      {"dominant", [](int n, const CheckOptions&, json& d) { return check_dominant(n, d); }},
      {"duality", [](int n, const CheckOptions&, json& d) { return check_duality(n, d); }},
      {"inversion", [](int n, const CheckOptions&, json& d) { return check_inversion(n, d); }},
      {"stability", [](int n, const CheckOptions&, json& d) { return check_stability(n, d); }},
      {"basis", [](int n, const CheckOptions&, json& d) { return check_basis(n, d); }},
      {"free_module", [](int n, const CheckOptions&, json& d) { return check_free_module(n, d); }},
  };
  return c;
}

}  // namespace

const std::vector<std::string>& classical_identity_ids() {
  static const std::vector<std::string> ids = [] {
    std::vector<std::string> v;
    for (const auto& [id, fn] : catalog()) v.push_back(id);
    return v;
  }();
  return ids;
}

VerificationReport verify_classical(const std::string& id, int n,
                                    const CheckOptions& opts) {
  for (const auto& [name, fn] : catalog()) {
    if (name != id) continue;
    if (n < 1 || n > 5) throw std::invalid_argument("classical checks need 1 <= n <= 5");
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
