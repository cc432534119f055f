#pragma once

// Permutations of S_n in one-line notation, reduced words, Bruhat order.
//
// Composition: (u * v)(i) = u(v(i)). A word a_1..a_p denotes the product
// s_{a_1} * ... * s_{a_p}; right multiplication by s_a swaps the entries in
// positions a, a+1.

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace qgroth {

using Word = std::vector<int>;

class Permutation {
 public:
  Permutation() = default;
  /// Validates bijectivity onto 1..n; throws std::invalid_argument.
  explicit Permutation(std::vector<int> oneline);

  static Permutation identity(int n);
  static Permutation longest(int n);
  /// The transposition exchanging i and j.
  static Permutation transposition(int n, int i, int j);
  static Permutation simple(int n, int i) { return transposition(n, i, i + 1); }

  int n() const { return static_cast<int>(p_.size()); }
  int operator()(int i) const { return p_[i - 1]; }
  const std::vector<int>& oneline() const { return p_; }

  Permutation inverse() const;
  /// Number of inversions.
  int length() const;
  bool is_identity() const;

  /// Embeds into S_m by fixing n+1..m.
  Permutation embed(int m) const;

  friend Permutation operator*(const Permutation& u, const Permutation& v);
  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

  /// "3,2,1".
  std::string str() const;

 private:
  std::vector<int> p_;
};

Permutation perm_from_word(const Word& word, int n);
/// Parses "3,2,1" (or "321" when n <= 9).
Permutation parse_perm(std::string_view text);
/// Parses "121" or "1,2,1"; the empty string is the empty word.
Word parse_word(std::string_view text);
std::string word_str(const Word& w);

/// One reduced word, built by peeling right descents.
Word reduced_word(const Permutation& w);
/// All reduced words (or the first `limit`), lexicographically sorted.
std::vector<Word> reduced_words(const Permutation& w,
                                std::optional<std::size_t> limit = {});
bool is_reduced(const Word& word, int n);

/// Rank-matrix criterion.
bool bruhat_leq(const Permutation& u, const Permutation& v);
/// Subword criterion over one reduced word of v; slow reference.
bool bruhat_leq_subword(const Permutation& u, const Permutation& v);

std::vector<int> code(const Permutation& w);
bool is_dominant(const Permutation& w);

/// All of S_n ordered by length, then one-line lexicographically.
std::vector<Permutation> enumerate_sn(int n);

}  // namespace qgroth
