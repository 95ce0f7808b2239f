#pragma once

#include "fmes/rational.hpp"
#include "fmes/word.hpp"

#include <map>
#include <string>
#include <utility>

namespace fmes {

// Finite formal sum with exact coefficients; zero coefficients are never stored.
template <class Key>
class LinComb {
 public:
  using Terms = std::map<Key, Rational>;

  LinComb() = default;
  explicit LinComb(Key key, Rational c = 1) {
    if (c != 0) terms_.emplace(std::move(key), std::move(c));
  }

  static LinComb scalar(const Rational& c) { return LinComb(Key{}, c); }

  void add(const Key& key, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(key, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  void add(const LinComb& other, const Rational& factor) {
    if (factor == 0) return;
    for (const auto& [k, c] : other.terms_) add(k, c * factor);
  }

  [[nodiscard]] Rational coefficient(const Key& key) const {
    auto it = terms_.find(key);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  [[nodiscard]] bool is_zero() const { return terms_.empty(); }
  [[nodiscard]] std::size_t size() const { return terms_.size(); }
  [[nodiscard]] const Terms& terms() const { return terms_; }
  [[nodiscard]] auto begin() const { return terms_.begin(); }
  [[nodiscard]] auto end() const { return terms_.end(); }

  LinComb& operator+=(const LinComb& o) {
    for (const auto& [k, c] : o.terms_) add(k, c);
    return *this;
  }
  LinComb& operator-=(const LinComb& o) {
    for (const auto& [k, c] : o.terms_) add(k, -c);
    return *this;
  }
  LinComb& operator*=(const Rational& s) {
    if (s == 0) {
      terms_.clear();
    } else {
      for (auto& [k, c] : terms_) c *= s;
    }
    return *this;
  }

  friend LinComb operator+(LinComb a, const LinComb& b) { return a += b; }
  friend LinComb operator-(LinComb a, const LinComb& b) { return a -= b; }
  friend LinComb operator-(LinComb a) { return a *= Rational(-1); }
  friend LinComb operator*(const Rational& s, LinComb a) { return a *= s; }
  friend LinComb operator*(LinComb a, const Rational& s) { return a *= s; }
  friend bool operator==(const LinComb&, const LinComb&) = default;

 private:
  Terms terms_;
};

// Linear extension of a key-wise map.
template <class Key, class F>
auto apply_linear(const LinComb<Key>& x, F&& f) {
  using Out = std::decay_t<decltype(f(std::declval<const Key&>()))>;
  Out out;
  for (const auto& [k, c] : x) out.add(f(k), c);
  return out;
}

// Bilinear extension of a key-pair map.
template <class Key, class F>
auto apply_bilinear(const LinComb<Key>& x, const LinComb<Key>& y, F&& f) {
  using Out = std::decay_t<decltype(f(std::declval<const Key&>(), std::declval<const Key&>()))>;
  Out out;
  for (const auto& [u, a] : x)
    for (const auto& [v, b] : y) out.add(f(u, v), a * b);
  return out;
}

template <class Key>
LinComb<Key> homogeneous_component(const LinComb<Key>& x, int weight) {
  LinComb<Key> out;
  for (const auto& [k, c] : x)
    if (k.weight() == weight) out.add(k, c);
  return out;
}

template <class Key>
int max_weight(const LinComb<Key>& x) {
  int m = -1;
  for (const auto& [k, c] : x) m = std::max(m, k.weight());
  return m;
}

template <class Key>
bool is_homogeneous(const LinComb<Key>& x) {
  int w = -1;
  for (const auto& [k, c] : x) {
    if (w >= 0 && k.weight() != w) return false;
    w = k.weight();
  }
  return true;
}

// "3*G[2] - 1/2*G[{1},{2}] + 1"; zero renders "0".
template <class Key>
std::string to_string(const LinComb<Key>& x) {
  if (x.is_zero()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [k, c] : x) {
    Rational mag = abs(c);
    if (first) {
      if (c < 0) s += "-";
    } else {
      s += c < 0 ? " - " : " + ";
    }
    first = false;
    const std::string body = to_string(k);
    if (body == "1") {
      s += to_string(mag);
    } else if (mag == 1) {
      s += body;
    } else {
      s += to_string(mag) + "*" + body;
    }
  }
  return s;
}

using Element = LinComb<Word>;
using ZElement = LinComb<ZWord>;
using BElement = LinComb<BWord>;

inline Element unit_element() { return Element(Word{}); }
inline Element G(const Word& w, const Rational& c = 1) { return Element(w, c); }

}  // namespace fmes
