#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <string>
#include <vector>

namespace fmes {

// Bi-index [k;d] with k >= 1, d >= 0.
struct Letter {
  int k = 1;
  int d = 0;
  friend auto operator<=>(const Letter&, const Letter&) = default;
};

Letter make_letter(int k, int d);
constexpr int letter_weight(const Letter& a) { return a.k + a.d; }

// z_k of the classical alphabet.
struct ZLetter {
  int k = 1;
  friend auto operator<=>(const ZLetter&, const ZLetter&) = default;
};
constexpr int letter_weight(const ZLetter& a) { return a.k; }

// b_i of the balanced alphabet; b_0 carries weight one.
struct BLetter {
  int i = 0;
  friend auto operator<=>(const BLetter&, const BLetter&) = default;
};
constexpr int letter_weight(const BLetter& a) { return a.i == 0 ? 1 : a.i; }

// Letters x, y of the two-letter encoding z_k = x^{k-1} y.
enum class XY : unsigned char { x = 0, y = 1 };
constexpr int letter_weight(XY) { return 1; }
constexpr std::strong_ordering operator<=>(XY a, XY b) {
  return static_cast<int>(a) <=> static_cast<int>(b);
}

template <class L>
struct BasicWord {
  std::vector<L> letters;

  BasicWord() = default;
  explicit BasicWord(std::vector<L> ls) : letters(std::move(ls)) {}
  BasicWord(std::initializer_list<L> ls) : letters(ls) {}

  [[nodiscard]] std::size_t size() const { return letters.size(); }
  [[nodiscard]] bool empty() const { return letters.empty(); }
  const L& operator[](std::size_t i) const { return letters[i]; }
  L& operator[](std::size_t i) { return letters[i]; }
  [[nodiscard]] auto begin() const { return letters.begin(); }
  [[nodiscard]] auto end() const { return letters.end(); }

  [[nodiscard]] int weight() const {
    int w = 0;
    for (const auto& a : letters) w += letter_weight(a);
    return w;
  }
  [[nodiscard]] int depth() const { return static_cast<int>(letters.size()); }

  [[nodiscard]] BasicWord slice(std::size_t from, std::size_t to) const {
    return BasicWord(std::vector<L>(letters.begin() + static_cast<std::ptrdiff_t>(from),
                                    letters.begin() + static_cast<std::ptrdiff_t>(to)));
  }

  friend bool operator==(const BasicWord&, const BasicWord&) = default;

  // Graded lexicographic: weight, then depth, then letters.
  friend std::strong_ordering operator<=>(const BasicWord& u, const BasicWord& v) {
    if (auto c = u.weight() <=> v.weight(); c != 0) return c;
    if (auto c = u.letters.size() <=> v.letters.size(); c != 0) return c;
    for (std::size_t i = 0; i < u.letters.size(); ++i)
      if (auto c = u.letters[i] <=> v.letters[i]; c != 0) return c;
    return std::strong_ordering::equal;
  }
};

template <class L>
BasicWord<L> concat(const BasicWord<L>& u, const BasicWord<L>& v) {
  BasicWord<L> w = u;
  w.letters.insert(w.letters.end(), v.letters.begin(), v.letters.end());
  return w;
}

using Word = BasicWord<Letter>;
using ZWord = BasicWord<ZLetter>;
using BWord = BasicWord<BLetter>;
using XYWord = BasicWord<XY>;

struct Grade {
  int weight = 0;
  int lwt = 0;
  int depth = 0;
  friend bool operator==(const Grade&, const Grade&) = default;
};

Grade grade(const Word& w);
int lower_weight(const Word& w);

// Word from parallel index lists.
Word make_word(const std::vector<int>& ks, const std::vector<int>& ds);
Word lwt0_word(const std::vector<int>& ks);
ZWord make_zword(const std::vector<int>& ks);
BWord make_bword(const std::vector<int>& is);

Word to_word(const ZWord& z);
XYWord to_xy(const ZWord& z);
ZWord from_xy(const XYWord& w);

std::string to_string(const Word& w);
std::string to_string(const ZWord& w);
std::string to_string(const BWord& w);

std::uint64_t hash_value(const Letter& a);
std::uint64_t hash_value(const ZLetter& a);
std::uint64_t hash_value(const BLetter& a);
std::uint64_t hash_value(XY a);

template <class L>
std::uint64_t hash_value(const BasicWord<L>& w) {
  std::uint64_t h = 0xcbf29ce484222325ULL ^ w.letters.size();
  for (const auto& a : w.letters) {
    h ^= hash_value(a);
    h *= 0x100000001b3ULL;
  }
  return h;
}

struct WordHash {
  template <class L>
  std::size_t operator()(const BasicWord<L>& w) const {
    return static_cast<std::size_t>(hash_value(w));
  }
};

}  // namespace fmes
