#pragma once

// Exact sparse multivariate polynomials over Z in the alphabets
// x_1..x_n, y_1..y_n, z_1..z_n, the deformation parameter beta and the
// quantum parameters q_1..q_{n-1}, plus rational expressions whose
// denominators are products of (1 - beta*v).

#include <gmpxx.h>

#include <nlohmann/json.hpp>

#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace qgroth {

/// Largest rank any alphabet may reach. q-indices run to kMaxRank - 1.
inline constexpr int kMaxRank = 8;

enum class VarKind : std::uint8_t { X, Y, Z, Beta, Q };

struct Variable {
  VarKind kind = VarKind::X;
  int index = 1;  // 1-based; 0 for Beta

  static Variable x(int i) { return {VarKind::X, i}; }
  static Variable y(int i) { return {VarKind::Y, i}; }
  static Variable z(int i) { return {VarKind::Z, i}; }
  static Variable beta() { return {VarKind::Beta, 0}; }
  static Variable q(int i) { return {VarKind::Q, i}; }

  /// Position in the dense exponent layout; kind-major, index-minor.
  int slot() const;
  static Variable from_slot(int slot);

  /// "x3", "y1", "b", "q2".
  std::string name() const;
  static Variable parse(std::string_view name);

  friend bool operator==(const Variable&, const Variable&) = default;
  friend auto operator<=>(const Variable& a, const Variable& b) {
    return a.slot() <=> b.slot();
  }
};

/// Exponent vector over the fixed variable universe. Zero exponents are
/// simply absent from the sparse view exposed by `support()`.
class Monomial {
 public:
  static constexpr int kSlots = 3 * kMaxRank + 1 + (kMaxRank - 1);

  Monomial() { exps_.fill(0); }
  explicit Monomial(Variable v, unsigned e = 1);

  unsigned exponent(Variable v) const { return exps_[v.slot()]; }
  unsigned exponent_at(int slot) const { return exps_[slot]; }
  void set_exponent(Variable v, unsigned e);

  unsigned degree() const;
  unsigned degree(VarKind kind) const;
  bool is_one() const { return degree() == 0; }

  /// Non-zero exponents in variable order.
  std::vector<std::pair<Variable, unsigned>> support() const;

  /// Keeps only the variables of `kind` (or drops them when `keep` is false).
  Monomial restricted(VarKind kind, bool keep = true) const;

  bool divides(const Monomial& other) const;
  Monomial operator*(const Monomial& other) const;
  /// Requires divides(); throws std::domain_error otherwise.
  Monomial operator/(const Monomial& other) const;

  /// Graded in x first, then lexicographic with x_1 < x_2 < ... < x_n,
  /// then lexicographic on the remaining slots. A monomial order.
  friend std::strong_ordering operator<=>(const Monomial& a,
                                          const Monomial& b);
  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.exps_ == b.exps_;
  }

  std::size_t hash() const;

 private:
  std::array<std::uint8_t, kSlots> exps_;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

struct Term {
  Monomial mono;
  mpz_class coef;
};

class MultiPoly {
 public:
  MultiPoly() = default;
  explicit MultiPoly(const mpz_class& c);
  explicit MultiPoly(long c) : MultiPoly(mpz_class(c)) {}
  explicit MultiPoly(Variable v);
  MultiPoly(const Monomial& m, const mpz_class& c);

  /// Collects duplicates, drops zeros, sorts.
  static MultiPoly from_terms(std::vector<Term> terms);

  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// Coefficient of the given monomial (zero when absent).
  mpz_class coefficient(const Monomial& m) const;

  unsigned degree() const;
  unsigned degree(VarKind kind) const;
  unsigned degree(Variable v) const;
  /// True if no variable of `kind` occurs.
  bool free_of(VarKind kind) const;
  bool free_of(Variable v) const;

  MultiPoly operator-() const;
  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  MultiPoly& operator*=(const MultiPoly& o);
  MultiPoly& operator*=(const mpz_class& c);
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(MultiPoly a, const mpz_class& c) { return a *= c; }
  friend MultiPoly operator*(const mpz_class& c, MultiPoly a) { return a *= c; }

  MultiPoly mul_monomial(const Monomial& m) const;
  MultiPoly pow(unsigned e) const;

  friend bool operator==(const MultiPoly& a, const MultiPoly& b);

  /// Groups terms by their `kind` part: f = sum_J coef_J * v^J with coef_J
  /// free of `kind`.
  std::map<Monomial, MultiPoly> split_by(VarKind kind) const;

  /// Rebuilds the canonical form; a no-op on any value produced by this API.
  MultiPoly canonicalized() const { return from_terms(terms_); }

 private:
  std::vector<Term> terms_;  // strictly increasing monomials, nonzero coefs
};

inline MultiPoly var(Variable v) { return MultiPoly(v); }
inline MultiPoly xv(int i) { return MultiPoly(Variable::x(i)); }
inline MultiPoly yv(int i) { return MultiPoly(Variable::y(i)); }
inline MultiPoly zv(int i) { return MultiPoly(Variable::z(i)); }
inline MultiPoly qv(int i) { return MultiPoly(Variable::q(i)); }
inline MultiPoly beta() { return MultiPoly(Variable::beta()); }
inline MultiPoly constant(long c) { return MultiPoly(c); }

/// Rational expression num / prod_v (1 - beta*v)^{den[v]}, v of kind Y or Z.
struct RatExpr {
  MultiPoly num;
  std::map<Variable, unsigned> den;

  RatExpr() = default;
  RatExpr(MultiPoly n) : num(std::move(n)) {}  // NOLINT: polynomials embed
  RatExpr(MultiPoly n, std::map<Variable, unsigned> d);

  /// prod_v (1 - beta*v)^{den[v]} as a polynomial.
  MultiPoly expanded_den() const;
  bool is_polynomial() const { return den.empty(); }
};

RatExpr operator+(const RatExpr& a, const RatExpr& b);
RatExpr operator-(const RatExpr& a, const RatExpr& b);
RatExpr operator*(const RatExpr& a, const RatExpr& b);

/// a == b as rational functions: a.num * b.den == b.num * a.den.
bool rat_eq(const RatExpr& a, const RatExpr& b);

/// The binding -v/(1 - beta*v), i.e. the beta-deformed negation of v.
RatExpr ominus(Variable v);

/// Simultaneous substitution of polynomials for variables.
MultiPoly substitute(const MultiPoly& f,
                     const std::map<Variable, MultiPoly>& bindings);

/// Simultaneous substitution of rational expressions. The result's
/// denominator exponent for each factor is bounded by the degree of f in
/// the bound variables.
RatExpr substitute(const MultiPoly& f,
                   const std::map<Variable, RatExpr>& bindings);

/// Replaces whole alphabets, e.g. {X->Y, Y->Z} for G(x,y) -> G(y,z).
MultiPoly rename_alphabets(const MultiPoly& f,
                           const std::map<VarKind, VarKind>& renaming);

/// Sets every variable of `kind` to zero.
MultiPoly kill(const MultiPoly& f, VarKind kind);

/// Sets beta and/or q_i to integer constants.
MultiPoly specialize(const MultiPoly& f, std::optional<long> beta,
                     std::optional<std::vector<long>> q);

/// beta^N * f|_{y_i := 1/beta}. Throws std::domain_error when a term has
/// total y-degree above N.
MultiPoly beta_weighted_sub(const MultiPoly& f, unsigned N);

/// Exact quotient a / b. Throws std::domain_error if b does not divide a.
MultiPoly exact_divide(const MultiPoly& a, const MultiPoly& b);

// Rendering -------------------------------------------------------------

/// "x1^2*y1 - 3*b*x2 + 1"; terms in decreasing monomial order.
std::string to_text(const MultiPoly& f);
/// Same ordering with x_{1}^{2}, \beta, q_{1}.
std::string to_latex(const MultiPoly& f);
/// JSON list of {"coef": "<decimal>", "monomial": {"x1": 2, ...}}.
nlohmann::json to_json(const MultiPoly& f);
/// Inverse of to_json; throws std::invalid_argument on malformed input.
MultiPoly poly_from_json(const nlohmann::json& j);

/// Parses +, -, *, ^, parentheses, integers and variable names. Juxtaposed
/// parenthesised factors multiply: "(x1+y1)(1-b*y2)".
MultiPoly parse_poly(std::string_view text);

}  // namespace qgroth
