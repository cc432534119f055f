#include "qgroth/polyring.hpp"

#include <algorithm>
#include <cctype>
#include <cstring>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace qgroth {

namespace {

constexpr int kXBase = 0;
constexpr int kYBase = kMaxRank;
constexpr int kZBase = 2 * kMaxRank;
constexpr int kBetaSlot = 3 * kMaxRank;
constexpr int kQBase = 3 * kMaxRank + 1;

int base_of(VarKind kind) {
  switch (kind) {
    case VarKind::X: return kXBase;
    case VarKind::Y: return kYBase;
    case VarKind::Z: return kZBase;
    case VarKind::Beta: return kBetaSlot;
    case VarKind::Q: return kQBase;
  }
  return 0;
}

int width_of(VarKind kind) {
  switch (kind) {
    case VarKind::Beta: return 1;
    case VarKind::Q: return kMaxRank - 1;
    default: return kMaxRank;
  }
}

// Rendering order inside a monomial: parameters first, then alphabets.
constexpr VarKind kRenderOrder[] = {VarKind::Beta, VarKind::Q, VarKind::X,
                                    VarKind::Y, VarKind::Z};

using Accumulator = std::unordered_map<Monomial, mpz_class, MonomialHash>;

MultiPoly from_accumulator(Accumulator& acc) {
  std::vector<Term> out;
  out.reserve(acc.size());
  for (auto& [m, c] : acc) {
    if (c != 0) out.push_back({m, std::move(c)});
  }
  std::sort(out.begin(), out.end(),
            [](const Term& a, const Term& b) { return a.mono < b.mono; });
  return MultiPoly::from_terms(std::move(out));
}

MultiPoly one_minus_beta(Variable v) { return constant(1) - beta() * var(v); }

}  // namespace

// Variable ---------------------------------------------------------------

int Variable::slot() const {
  if (kind == VarKind::Beta) return kBetaSlot;
  if (index < 1 || index > width_of(kind)) {
    throw std::out_of_range("variable index out of range: " +
                            std::to_string(index));
  }
  return base_of(kind) + index - 1;
}

Variable Variable::from_slot(int slot) {
  if (slot == kBetaSlot) return beta();
  if (slot >= kQBase) return q(slot - kQBase + 1);
  if (slot >= kZBase) return z(slot - kZBase + 1);
  if (slot >= kYBase) return y(slot - kYBase + 1);
  return x(slot + 1);
}

std::string Variable::name() const {
  switch (kind) {
    case VarKind::X: return "x" + std::to_string(index);
    case VarKind::Y: return "y" + std::to_string(index);
    case VarKind::Z: return "z" + std::to_string(index);
    case VarKind::Beta: return "b";
    case VarKind::Q: return "q" + std::to_string(index);
  }
  return {};
}

Variable Variable::parse(std::string_view name) {
  if (name == "b" || name == "beta") return beta();
  if (name.size() < 2) {
    throw std::invalid_argument("bad variable name: " + std::string(name));
  }
  int idx = 0;
  for (char c : name.substr(1)) {
    if (!std::isdigit(static_cast<unsigned char>(c))) {
      throw std::invalid_argument("bad variable name: " + std::string(name));
    }
    idx = idx * 10 + (c - '0');
  }
  Variable v;
  switch (name[0]) {
    case 'x': v = x(idx); break;
    case 'y': v = y(idx); break;
    case 'z': v = z(idx); break;
    case 'q': v = q(idx); break;
    default:
      throw std::invalid_argument("bad variable name: " + std::string(name));
  }
  try {
    (void)v.slot();
  } catch (const std::out_of_range& e) {
    throw std::invalid_argument(e.what());
  }
  return v;
}

// Monomial ---------------------------------------------------------------

Monomial::Monomial(Variable v, unsigned e) : Monomial() { set_exponent(v, e); }

void Monomial::set_exponent(Variable v, unsigned e) {
  if (e > 255) throw std::overflow_error("monomial exponent overflow");
  exps_[v.slot()] = static_cast<std::uint8_t>(e);
}

unsigned Monomial::degree() const {
  unsigned d = 0;
  for (auto e : exps_) d += e;
  return d;
}

unsigned Monomial::degree(VarKind kind) const {
  unsigned d = 0;
  const int b = base_of(kind);
  for (int s = b; s < b + width_of(kind); ++s) d += exps_[s];
  return d;
}

std::vector<std::pair<Variable, unsigned>> Monomial::support() const {
  std::vector<std::pair<Variable, unsigned>> out;
  for (int s = 0; s < kSlots; ++s) {
    if (exps_[s]) out.emplace_back(Variable::from_slot(s), exps_[s]);
  }
  return out;
}

Monomial Monomial::restricted(VarKind kind, bool keep) const {
  Monomial out;
  const int b = base_of(kind);
  const int e = b + width_of(kind);
  for (int s = 0; s < kSlots; ++s) {
    const bool inside = s >= b && s < e;
    if (inside == keep) out.exps_[s] = exps_[s];
  }
  return out;
}

bool Monomial::divides(const Monomial& other) const {
  for (int s = 0; s < kSlots; ++s) {
    if (exps_[s] > other.exps_[s]) return false;
  }
  return true;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial out;
  for (int s = 0; s < kSlots; ++s) {
    const unsigned e = unsigned(exps_[s]) + other.exps_[s];
    if (e > 255) throw std::overflow_error("monomial exponent overflow");
    out.exps_[s] = static_cast<std::uint8_t>(e);
  }
  return out;
}

Monomial Monomial::operator/(const Monomial& other) const {
  if (!other.divides(*this)) {
    throw std::domain_error("monomial division is not exact");
  }
  Monomial out;
  for (int s = 0; s < kSlots; ++s) out.exps_[s] = exps_[s] - other.exps_[s];
  return out;
}

std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
  const unsigned da = a.degree(VarKind::X);
  const unsigned db = b.degree(VarKind::X);
  if (da != db) return da <=> db;
  for (int s = kXBase + kMaxRank - 1; s >= kXBase; --s) {
    if (a.exps_[s] != b.exps_[s]) return a.exps_[s] <=> b.exps_[s];
  }
  for (int s = kYBase; s < Monomial::kSlots; ++s) {
    if (a.exps_[s] != b.exps_[s]) return a.exps_[s] <=> b.exps_[s];
  }
  return std::strong_ordering::equal;
}

std::size_t Monomial::hash() const {
  static_assert(kSlots % 8 == 0);
  std::uint64_t h = 0x9e3779b97f4a7c15ULL;
  for (int i = 0; i < kSlots; i += 8) {
    std::uint64_t w;
    std::memcpy(&w, exps_.data() + i, 8);
    h ^= w + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    h *= 0xff51afd7ed558ccdULL;
  }
  return static_cast<std::size_t>(h ^ (h >> 33));
}

// MultiPoly --------------------------------------------------------------

MultiPoly::MultiPoly(const mpz_class& c) {
  if (c != 0) terms_.push_back({Monomial(), c});
}

MultiPoly::MultiPoly(Variable v) { terms_.push_back({Monomial(v), 1}); }

MultiPoly::MultiPoly(const Monomial& m, const mpz_class& c) {
  if (c != 0) terms_.push_back({m, c});
}

MultiPoly MultiPoly::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(),
            [](const Term& a, const Term& b) { return a.mono < b.mono; });
  MultiPoly out;
  out.terms_.reserve(terms.size());
  for (auto& t : terms) {
    if (!out.terms_.empty() && out.terms_.back().mono == t.mono) {
      out.terms_.back().coef += t.coef;
    } else {
      if (!out.terms_.empty() && out.terms_.back().coef == 0) {
        out.terms_.pop_back();
      }
      out.terms_.push_back(std::move(t));
    }
  }
  if (!out.terms_.empty() && out.terms_.back().coef == 0) out.terms_.pop_back();
  return out;
}

bool MultiPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one());
}

mpz_class MultiPoly::coefficient(const Monomial& m) const {
  auto it = std::lower_bound(
      terms_.begin(), terms_.end(), m,
      [](const Term& t, const Monomial& key) { return t.mono < key; });
  if (it != terms_.end() && it->mono == m) return it->coef;
  return 0;
}

unsigned MultiPoly::degree() const {
  unsigned d = 0;
  for (const auto& t : terms_) d = std::max(d, t.mono.degree());
  return d;
}

unsigned MultiPoly::degree(VarKind kind) const {
  unsigned d = 0;
  for (const auto& t : terms_) d = std::max(d, t.mono.degree(kind));
  return d;
}

unsigned MultiPoly::degree(Variable v) const {
  unsigned d = 0;
  for (const auto& t : terms_) d = std::max(d, t.mono.exponent(v));
  return d;
}

bool MultiPoly::free_of(VarKind kind) const { return degree(kind) == 0; }
bool MultiPoly::free_of(Variable v) const { return degree(v) == 0; }

MultiPoly MultiPoly::operator-() const {
  MultiPoly out = *this;
  for (auto& t : out.terms_) t.coef = -t.coef;
  return out;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  if (o.terms_.empty()) return *this;
  std::vector<Term> merged;
  merged.reserve(terms_.size() + o.terms_.size());
  auto a = terms_.begin();
  auto b = o.terms_.begin();
  while (a != terms_.end() && b != o.terms_.end()) {
    if (a->mono < b->mono) {
      merged.push_back(std::move(*a++));
    } else if (b->mono < a->mono) {
      merged.push_back(*b++);
    } else {
      mpz_class c = a->coef + b->coef;
      if (c != 0) merged.push_back({a->mono, std::move(c)});
      ++a;
      ++b;
    }
  }
  for (; a != terms_.end(); ++a) merged.push_back(std::move(*a));
  for (; b != o.terms_.end(); ++b) merged.push_back(*b);
  terms_ = std::move(merged);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) { return *this += -o; }

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  if (a.size() == 1) return b.mul_monomial(a.terms_[0].mono) * a.terms_[0].coef;
  if (b.size() == 1) return a.mul_monomial(b.terms_[0].mono) * b.terms_[0].coef;
  Accumulator acc;
  acc.reserve(a.size() * b.size() / 2 + 16);
  mpz_class prod;
  for (const auto& s : a.terms_) {
    for (const auto& t : b.terms_) {
      mpz_mul(prod.get_mpz_t(), s.coef.get_mpz_t(), t.coef.get_mpz_t());
      acc[s.mono * t.mono] += prod;
    }
  }
  return from_accumulator(acc);
}

MultiPoly& MultiPoly::operator*=(const MultiPoly& o) {
  *this = *this * o;
  return *this;
}

MultiPoly& MultiPoly::operator*=(const mpz_class& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.coef *= c;
  return *this;
}

MultiPoly MultiPoly::mul_monomial(const Monomial& m) const {
  // Multiplication by a monomial preserves the order.
  MultiPoly out = *this;
  for (auto& t : out.terms_) t.mono = t.mono * m;
  return out;
}

MultiPoly MultiPoly::pow(unsigned e) const {
  MultiPoly result(1);
  MultiPoly base = *this;
  while (e) {
    if (e & 1u) result *= base;
    e >>= 1u;
    if (e) base *= base;
  }
  return result;
}

bool operator==(const MultiPoly& a, const MultiPoly& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i) {
    if (!(a.terms_[i].mono == b.terms_[i].mono) ||
        a.terms_[i].coef != b.terms_[i].coef) {
      return false;
    }
  }
  return true;
}

std::map<Monomial, MultiPoly> MultiPoly::split_by(VarKind kind) const {
  std::map<Monomial, std::vector<Term>> groups;
  for (const auto& t : terms_) {
    groups[t.mono.restricted(kind)].push_back(
        {t.mono.restricted(kind, false), t.coef});
  }
  std::map<Monomial, MultiPoly> out;
  for (auto& [k, ts] : groups) out.emplace(k, from_terms(std::move(ts)));
  return out;
}

// RatExpr ----------------------------------------------------------------

RatExpr::RatExpr(MultiPoly n, std::map<Variable, unsigned> d)
    : num(std::move(n)) {
  for (auto& [v, e] : d) {
    if (v.kind != VarKind::Y && v.kind != VarKind::Z) {
      throw std::invalid_argument("denominator variables must be y or z");
    }
    if (e) den.emplace(v, e);
  }
}

MultiPoly RatExpr::expanded_den() const {
  MultiPoly out(1);
  for (const auto& [v, e] : den) out *= one_minus_beta(v).pow(e);
  return out;
}

namespace {

// Brings a numerator over the denominator `target` (which must dominate den).
MultiPoly lift(const RatExpr& r, const std::map<Variable, unsigned>& target) {
  MultiPoly out = r.num;
  for (const auto& [v, e] : target) {
    auto it = r.den.find(v);
    const unsigned have = it == r.den.end() ? 0 : it->second;
    if (e > have) out *= one_minus_beta(v).pow(e - have);
  }
  return out;
}

std::map<Variable, unsigned> den_lcm(const RatExpr& a, const RatExpr& b) {
  std::map<Variable, unsigned> m = a.den;
  for (const auto& [v, e] : b.den) m[v] = std::max(m[v], e);
  return m;
}

}  // namespace

RatExpr operator+(const RatExpr& a, const RatExpr& b) {
  auto m = den_lcm(a, b);
  return RatExpr(lift(a, m) + lift(b, m), m);
}

RatExpr operator-(const RatExpr& a, const RatExpr& b) {
  auto m = den_lcm(a, b);
  return RatExpr(lift(a, m) - lift(b, m), m);
}

RatExpr operator*(const RatExpr& a, const RatExpr& b) {
  auto d = a.den;
  for (const auto& [v, e] : b.den) d[v] += e;
  return RatExpr(a.num * b.num, d);
}

bool rat_eq(const RatExpr& a, const RatExpr& b) {
  // Over an integral domain, cross-multiplying by the full denominators and
  // by the complementary factors of their lcm decide the same equality.
  auto m = den_lcm(a, b);
  return lift(a, m) == lift(b, m);
}

RatExpr ominus(Variable v) { return RatExpr(-var(v), {{v, 1}}); }

// Substitution -----------------------------------------------------------

namespace {

class PowerCache {
 public:
  explicit PowerCache(MultiPoly base) { powers_.push_back(MultiPoly(1)); powers_.push_back(std::move(base)); }
  const MultiPoly& get(unsigned e) {
    while (powers_.size() <= e) powers_.push_back(powers_.back() * powers_[1]);
    return powers_[e];
  }

 private:
  std::vector<MultiPoly> powers_;
};

}  // namespace

MultiPoly substitute(const MultiPoly& f,
                     const std::map<Variable, MultiPoly>& bindings) {
  if (bindings.empty()) return f;
  std::vector<std::pair<int, PowerCache>> caches;
  Monomial bound_mask;
  for (const auto& [v, p] : bindings) {
    caches.emplace_back(v.slot(), PowerCache(p));
    bound_mask.set_exponent(v, 1);
  }
  Accumulator acc;
  for (const auto& t : f.terms()) {
    Monomial rest = t.mono;
    MultiPoly factor(1);
    bool trivial = true;
    for (auto& [slot, cache] : caches) {
      const unsigned e = t.mono.exponent_at(slot);
      if (e == 0) continue;
      rest.set_exponent(Variable::from_slot(slot), 0);
      factor *= cache.get(e);
      trivial = false;
    }
    if (trivial) {
      acc[t.mono] += t.coef;
      continue;
    }
    for (const auto& s : factor.terms()) acc[s.mono * rest] += s.coef * t.coef;
  }
  return from_accumulator(acc);
}

RatExpr substitute(const MultiPoly& f,
                   const std::map<Variable, RatExpr>& bindings) {
  struct Bound {
    int slot;
    unsigned max_deg;
    PowerCache num;
    PowerCache den;
  };
  std::vector<Bound> bound;
  std::map<Variable, unsigned> den;
  for (const auto& [v, r] : bindings) {
    const unsigned d = f.degree(v);
    bound.push_back({v.slot(), d, PowerCache(r.num), PowerCache(r.expanded_den())});
    for (const auto& [w, e] : r.den) den[w] += e * d;
  }
  Accumulator acc;
  for (const auto& t : f.terms()) {
    Monomial rest = t.mono;
    MultiPoly factor(1);
    for (auto& b : bound) {
      const unsigned e = t.mono.exponent_at(b.slot);
      rest.set_exponent(Variable::from_slot(b.slot), 0);
      if (e) factor *= b.num.get(e);
      if (b.max_deg > e) factor *= b.den.get(b.max_deg - e);
    }
    for (const auto& s : factor.terms()) acc[s.mono * rest] += s.coef * t.coef;
  }
  return RatExpr(from_accumulator(acc), den);
}

MultiPoly rename_alphabets(const MultiPoly& f,
                           const std::map<VarKind, VarKind>& renaming) {
  std::vector<Term> out;
  out.reserve(f.size());
  for (const auto& t : f.terms()) {
    Monomial m = t.mono;
    for (const auto& [from, to] : renaming) {
      m = m.restricted(from, false);
    }
    for (const auto& [from, to] : renaming) {
      for (int i = 1; i <= width_of(from); ++i) {
        const unsigned e = t.mono.exponent(Variable{from, i});
        if (e == 0) continue;
        const Variable target{to, i};
        m.set_exponent(target, m.exponent(target) + e);
      }
    }
    out.push_back({m, t.coef});
  }
  return MultiPoly::from_terms(std::move(out));
}

MultiPoly kill(const MultiPoly& f, VarKind kind) {
  std::vector<Term> out;
  for (const auto& t : f.terms()) {
    if (t.mono.degree(kind) == 0) out.push_back(t);
  }
  return MultiPoly::from_terms(std::move(out));
}

MultiPoly specialize(const MultiPoly& f, std::optional<long> beta_value,
                     std::optional<std::vector<long>> q_values) {
  std::map<Variable, MultiPoly> b;
  if (beta_value) b.emplace(Variable::beta(), constant(*beta_value));
  if (q_values) {
    for (std::size_t i = 0; i < q_values->size(); ++i) {
      b.emplace(Variable::q(static_cast<int>(i) + 1), constant((*q_values)[i]));
    }
  }
  return substitute(f, b);
}

MultiPoly beta_weighted_sub(const MultiPoly& f, unsigned N) {
  std::vector<Term> out;
  out.reserve(f.size());
  for (const auto& t : f.terms()) {
    const unsigned j = t.mono.degree(VarKind::Y);
    if (j > N) {
      throw std::domain_error(
          "beta_weighted_sub: y-degree exceeds the beta weight");
    }
    Monomial m = t.mono.restricted(VarKind::Y, false);
    m.set_exponent(Variable::beta(), m.exponent(Variable::beta()) + N - j);
    out.push_back({m, t.coef});
  }
  return MultiPoly::from_terms(std::move(out));
}

MultiPoly exact_divide(const MultiPoly& a, const MultiPoly& b) {
  if (b.is_zero()) throw std::domain_error("division by zero polynomial");
  const Term& lb = b.terms().back();
  std::vector<Term> quotient;
  MultiPoly rest = a;
  while (!rest.is_zero()) {
    const Term& lt = rest.terms().back();
    if (!lb.mono.divides(lt.mono) || !mpz_divisible_p(lt.coef.get_mpz_t(), lb.coef.get_mpz_t())) {
      throw std::domain_error("polynomial division is not exact");
    }
    Term q{lt.mono / lb.mono, lt.coef / lb.coef};
    rest -= b.mul_monomial(q.mono) * q.coef;
    quotient.push_back(std::move(q));
  }
  return MultiPoly::from_terms(std::move(quotient));
}

// Rendering ----------------------------------------------------------------

namespace {

std::string monomial_text(const Monomial& m, bool latex) {
  std::string out;
  for (VarKind kind : kRenderOrder) {
    const int b = base_of(kind);
    for (int s = b; s < b + width_of(kind); ++s) {
      const unsigned e = m.exponent_at(s);
      if (e == 0) continue;
      const Variable v = Variable::from_slot(s);
      if (latex) {
        if (!out.empty()) out += ' ';
        if (v.kind == VarKind::Beta) {
          out += "\\beta";
        } else {
          out += v.name().substr(0, 1) + "_{" + std::to_string(v.index) + "}";
        }
        if (e > 1) out += "^{" + std::to_string(e) + "}";
      } else {
        if (!out.empty()) out += '*';
        out += v.name();
        if (e > 1) out += "^" + std::to_string(e);
      }
    }
  }
  return out;
}

std::string render(const MultiPoly& f, bool latex) {
  if (f.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (auto it = f.terms().rbegin(); it != f.terms().rend(); ++it) {
    const bool neg = it->coef < 0;
    mpz_class mag = abs(it->coef);
    if (first) {
      if (neg) out += '-';
    } else {
      out += neg ? " - " : " + ";
    }
    first = false;
    const std::string mono = monomial_text(it->mono, latex);
    if (mono.empty()) {
      out += mag.get_str();
    } else {
      if (mag != 1) out += mag.get_str() + (latex ? " " : "*");
      out += mono;
    }
  }
  return out;
}

}  // namespace

std::string to_text(const MultiPoly& f) { return render(f, false); }
std::string to_latex(const MultiPoly& f) { return render(f, true); }

nlohmann::json to_json(const MultiPoly& f) {
  nlohmann::json arr = nlohmann::json::array();
  for (auto it = f.terms().rbegin(); it != f.terms().rend(); ++it) {
    nlohmann::json mono = nlohmann::json::object();
    for (const auto& [v, e] : it->mono.support()) mono[v.name()] = e;
    arr.push_back({{"coef", it->coef.get_str()}, {"monomial", mono}});
  }
  return arr;
}

MultiPoly poly_from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw std::invalid_argument("polynomial JSON must be a list");
  std::vector<Term> terms;
  for (const auto& item : j) {
    if (!item.is_object() || !item.contains("coef") || !item.contains("monomial") ||
        !item["coef"].is_string() || !item["monomial"].is_object()) {
      throw std::invalid_argument("malformed polynomial term");
    }
    mpz_class c;
    if (c.set_str(item["coef"].get<std::string>(), 10) != 0) {
      throw std::invalid_argument("malformed coefficient");
    }
    Monomial m;
    for (const auto& [name, e] : item["monomial"].items()) {
      if (!e.is_number_unsigned()) throw std::invalid_argument("bad exponent");
      m.set_exponent(Variable::parse(name), e.get<unsigned>());
    }
    terms.push_back({m, c});
  }
  return MultiPoly::from_terms(std::move(terms));
}

// Parsing ------------------------------------------------------------------

namespace {

class Parser {
 public:
  explicit Parser(std::string_view s) : s_(s) {}

  MultiPoly parse() {
    MultiPoly r = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected trailing input");
    return r;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw std::invalid_argument("parse_poly: " + msg + " at offset " +
                                std::to_string(pos_));
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool peek(char c) {
    skip();
    return pos_ < s_.size() && s_[pos_] == c;
  }
  bool starts_primary() {
    skip();
    if (pos_ >= s_.size()) return false;
    const char c = s_[pos_];
    return c == '(' || std::isalnum(static_cast<unsigned char>(c));
  }

  MultiPoly expr() {
    MultiPoly acc;
    bool neg = false;
    if (peek('+')) {
      ++pos_;
    } else if (peek('-')) {
      ++pos_;
      neg = true;
    }
    acc = term();
    if (neg) acc = -acc;
    while (true) {
      if (peek('+')) {
        ++pos_;
        acc += term();
      } else if (peek('-')) {
        ++pos_;
        acc -= term();
      } else {
        return acc;
      }
    }
  }

  MultiPoly term() {
    MultiPoly acc = power();
    while (true) {
      if (peek('*')) {
        ++pos_;
        acc *= power();
      } else if (starts_primary()) {
        acc *= power();
      } else {
        return acc;
      }
    }
  }

  MultiPoly power() {
    MultiPoly base = primary();
    if (peek('^')) {
      ++pos_;
      skip();
      return base.pow(static_cast<unsigned>(number().get_ui()));
    }
    return base;
  }

  mpz_class number() {
    skip();
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected a number");
    return mpz_class(std::string(s_.substr(start, pos_ - start)));
  }

  MultiPoly primary() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    const char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      MultiPoly inner = expr();
      if (!peek(')')) fail("expected ')'");
      ++pos_;
      return inner;
    }
    if (c == '-') {
      ++pos_;
      return -power();
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return MultiPoly(number());
    if (std::isalpha(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < s_.size() && std::isalpha(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      return var(Variable::parse(s_.substr(start, pos_ - start)));
    }
    fail(std::string("unexpected character '") + c + "'");
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

MultiPoly parse_poly(std::string_view text) { return Parser(text).parse(); }

}  // namespace qgroth
