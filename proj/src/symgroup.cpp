#include "qgroth/symgroup.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <numeric>
#include <set>
#include <stdexcept>

namespace qgroth {

Permutation::Permutation(std::vector<int> oneline) : p_(std::move(oneline)) {
  std::vector<bool> seen(p_.size() + 1, false);
  for (int v : p_) {
    if (v < 1 || v > n() || seen[v]) {
      throw std::invalid_argument("not a permutation: " + str());
    }
    seen[v] = true;
  }
}

Permutation Permutation::identity(int n) {
  if (n < 1) throw std::invalid_argument("rank must be positive");
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 1);
  return Permutation(std::move(p));
}

Permutation Permutation::longest(int n) {
  std::vector<int> p(n);
  for (int i = 0; i < n; ++i) p[i] = n - i;
  return Permutation(std::move(p));
}

Permutation Permutation::transposition(int n, int i, int j) {
  if (i < 1 || j < 1 || i > n || j > n || i == j) {
    throw std::invalid_argument("bad transposition");
  }
  Permutation t = identity(n);
  std::swap(t.p_[i - 1], t.p_[j - 1]);
  return t;
}

Permutation Permutation::inverse() const {
  Permutation r = *this;
  for (int i = 0; i < n(); ++i) r.p_[p_[i] - 1] = i + 1;
  return r;
}

int Permutation::length() const {
  int l = 0;
  for (int i = 0; i < n(); ++i) {
    for (int j = i + 1; j < n(); ++j) l += p_[i] > p_[j];
  }
  return l;
}

bool Permutation::is_identity() const {
  for (int i = 0; i < n(); ++i) {
    if (p_[i] != i + 1) return false;
  }
  return true;
}

Permutation Permutation::embed(int m) const {
  if (m < n()) throw std::invalid_argument("cannot embed into a smaller rank");
  std::vector<int> p = p_;
  for (int i = n() + 1; i <= m; ++i) p.push_back(i);
  return Permutation(std::move(p));
}

Permutation operator*(const Permutation& u, const Permutation& v) {
  if (u.n() != v.n()) throw std::invalid_argument("rank mismatch");
  Permutation r = v;
  for (int i = 0; i < v.n(); ++i) r.p_[i] = u.p_[v.p_[i] - 1];
  return r;
}

std::string Permutation::str() const {
  std::string s;
  for (std::size_t i = 0; i < p_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(p_[i]);
  }
  return s;
}

Permutation perm_from_word(const Word& word, int n) {
  Permutation p = Permutation::identity(n);
  std::vector<int> a = p.oneline();
  for (int letter : word) {
    if (letter < 1 || letter >= n) {
      throw std::invalid_argument("word letter out of range: " +
                                  std::to_string(letter));
    }
    std::swap(a[letter - 1], a[letter]);
  }
  return Permutation(std::move(a));
}

Permutation parse_perm(std::string_view text) {
  std::vector<int> p;
  if (text.find(',') == std::string_view::npos) {
    for (char c : text) {
      if (!std::isdigit(static_cast<unsigned char>(c))) {
        throw std::invalid_argument("bad permutation: " + std::string(text));
      }
      p.push_back(c - '0');
    }
  } else {
    std::size_t start = 0;
    while (start <= text.size()) {
      const std::size_t end = std::min(text.find(',', start), text.size());
      const std::string tok(text.substr(start, end - start));
      if (tok.empty() || !std::all_of(tok.begin(), tok.end(), [](char c) {
            return std::isdigit(static_cast<unsigned char>(c));
          })) {
        throw std::invalid_argument("bad permutation: " + std::string(text));
      }
      p.push_back(std::stoi(tok));
      start = end + 1;
    }
  }
  if (p.empty()) throw std::invalid_argument("empty permutation");
  return Permutation(std::move(p));
}

Word parse_word(std::string_view text) {
  Word w;
  if (text.find(',') == std::string_view::npos) {
    for (char c : text) {
      if (!std::isdigit(static_cast<unsigned char>(c))) {
        throw std::invalid_argument("bad word: " + std::string(text));
      }
      w.push_back(c - '0');
    }
    return w;
  }
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t end = std::min(text.find(',', start), text.size());
    const std::string tok(text.substr(start, end - start));
    if (tok.empty()) throw std::invalid_argument("bad word: " + std::string(text));
    w.push_back(std::stoi(tok));
    start = end + 1;
  }
  return w;
}

std::string word_str(const Word& w) {
  std::string s;
  for (int a : w) s += std::to_string(a);
  return s;
}

Word reduced_word(const Permutation& w) {
  std::vector<int> a = w.oneline();
  Word out;
  bool found = true;
  while (found) {
    found = false;
    for (std::size_t i = 0; i + 1 < a.size(); ++i) {
      if (a[i] > a[i + 1]) {
        std::swap(a[i], a[i + 1]);
        out.push_back(static_cast<int>(i) + 1);
        found = true;
        break;
      }
    }
  }
  std::reverse(out.begin(), out.end());
  return out;
}

namespace {

void collect_words(std::vector<int>& a, Word& suffix, std::set<Word>& out,
                   std::optional<std::size_t> limit) {
  if (limit && out.size() >= *limit) return;
  bool any = false;
  for (std::size_t i = 0; i + 1 < a.size(); ++i) {
    if (a[i] > a[i + 1]) {
      any = true;
      std::swap(a[i], a[i + 1]);
      suffix.push_back(static_cast<int>(i) + 1);
      collect_words(a, suffix, out, limit);
      suffix.pop_back();
      std::swap(a[i], a[i + 1]);
    }
  }
  if (!any) out.insert(Word(suffix.rbegin(), suffix.rend()));
}

}  // namespace

std::vector<Word> reduced_words(const Permutation& w,
                                std::optional<std::size_t> limit) {
  std::vector<int> a = w.oneline();
  Word suffix;
  std::set<Word> out;
  collect_words(a, suffix, out, limit);
  std::vector<Word> v(out.begin(), out.end());
  if (limit && v.size() > *limit) v.resize(*limit);
  return v;
}

bool is_reduced(const Word& word, int n) {
  return perm_from_word(word, n).length() == static_cast<int>(word.size());
}

bool bruhat_leq(const Permutation& u, const Permutation& v) {
  if (u.n() != v.n()) throw std::invalid_argument("rank mismatch");
  const int n = u.n();
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      int cu = 0;
      int cv = 0;
      for (int k = 1; k <= i; ++k) {
        cu += u(k) >= j;
        cv += v(k) >= j;
      }
      if (cu > cv) return false;
    }
  }
  return true;
}

bool bruhat_leq_subword(const Permutation& u, const Permutation& v) {
  if (u.n() != v.n()) throw std::invalid_argument("rank mismatch");
  const Word word = reduced_word(v);
  const int target = u.length();
  const std::size_t p = word.size();
  for (std::size_t mask = 0; mask < (std::size_t{1} << p); ++mask) {
    if (std::popcount(mask) != target) continue;
    Word sub;
    for (std::size_t i = 0; i < p; ++i) {
      if (mask >> i & 1u) sub.push_back(word[i]);
    }
    if (perm_from_word(sub, u.n()) == u) return true;
  }
  return false;
}

std::vector<int> code(const Permutation& w) {
  std::vector<int> c(w.n(), 0);
  for (int i = 1; i <= w.n(); ++i) {
    for (int j = i + 1; j <= w.n(); ++j) c[i - 1] += w(j) < w(i);
  }
  return c;
}

bool is_dominant(const Permutation& w) {
  const auto c = code(w);
  return std::is_sorted(c.rbegin(), c.rend());
}

std::vector<Permutation> enumerate_sn(int n) {
  std::vector<int> a(n);
  std::iota(a.begin(), a.end(), 1);
  std::vector<Permutation> out;
  do {
    out.emplace_back(a);
  } while (std::next_permutation(a.begin(), a.end()));
  std::stable_sort(out.begin(), out.end(),
                   [](const Permutation& x, const Permutation& y) {
                     return x.length() < y.length();
                   });
  return out;
}

}  // namespace qgroth
