#include "fmes/word.hpp"

#include <stdexcept>

namespace fmes {

Letter make_letter(int k, int d) {
  if (k < 1 || d < 0) throw std::invalid_argument("letter requires k >= 1 and d >= 0");
  return Letter{k, d};
}

Grade grade(const Word& w) {
  Grade g;
  for (const auto& a : w) {
    g.weight += a.k + a.d;
    g.lwt += a.d;
  }
  g.depth = w.depth();
  return g;
}

int lower_weight(const Word& w) { return grade(w).lwt; }

Word make_word(const std::vector<int>& ks, const std::vector<int>& ds) {
  if (ks.size() != ds.size()) throw std::invalid_argument("index lists differ in length");
  Word w;
  w.letters.reserve(ks.size());
  for (std::size_t i = 0; i < ks.size(); ++i) w.letters.push_back(make_letter(ks[i], ds[i]));
  return w;
}

Word lwt0_word(const std::vector<int>& ks) { return make_word(ks, std::vector<int>(ks.size(), 0)); }

ZWord make_zword(const std::vector<int>& ks) {
  ZWord w;
  for (int k : ks) {
    if (k < 1) throw std::invalid_argument("z-letter index must be positive");
    w.letters.push_back(ZLetter{k});
  }
  return w;
}

BWord make_bword(const std::vector<int>& is) {
  BWord w;
  for (int i : is) {
    if (i < 0) throw std::invalid_argument("b-letter index must be non-negative");
    w.letters.push_back(BLetter{i});
  }
  return w;
}

Word to_word(const ZWord& z) {
  Word w;
  for (const auto& a : z) w.letters.push_back(Letter{a.k, 0});
  return w;
}

XYWord to_xy(const ZWord& z) {
  XYWord w;
  for (const auto& a : z) {
    w.letters.insert(w.letters.end(), static_cast<std::size_t>(a.k - 1), XY::x);
    w.letters.push_back(XY::y);
  }
  return w;
}

ZWord from_xy(const XYWord& w) {
  ZWord z;
  int run = 0;
  for (XY a : w) {
    if (a == XY::x) {
      ++run;
    } else {
      z.letters.push_back(ZLetter{run + 1});
      run = 0;
    }
  }
  if (run != 0) throw std::invalid_argument("xy-word does not end in y");
  return z;
}

namespace {

std::string join(const std::vector<int>& xs) {
  std::string s;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(xs[i]);
  }
  return s;
}

}  // namespace

std::string to_string(const Word& w) {
  if (w.empty()) return "1";
  std::vector<int> ks, ds;
  bool flat = true;
  for (const auto& a : w) {
    ks.push_back(a.k);
    ds.push_back(a.d);
    flat = flat && a.d == 0;
  }
  if (flat) return "G[" + join(ks) + "]";
  return "G[{" + join(ks) + "},{" + join(ds) + "}]";
}

std::string to_string(const ZWord& w) {
  if (w.empty()) return "1";
  std::vector<int> ks;
  for (const auto& a : w) ks.push_back(a.k);
  return "z[" + join(ks) + "]";
}

std::string to_string(const BWord& w) {
  if (w.empty()) return "1";
  std::string s;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) s += ' ';
    s += 'b' + std::to_string(w[i].i);
  }
  return s;
}

std::uint64_t hash_value(const Letter& a) {
  return (static_cast<std::uint64_t>(a.k) << 32) ^ static_cast<std::uint64_t>(a.d) ^ 0x51ed27b3ULL;
}
std::uint64_t hash_value(const ZLetter& a) { return static_cast<std::uint64_t>(a.k) * 0x9e3779b97f4a7c15ULL; }
std::uint64_t hash_value(const BLetter& a) { return static_cast<std::uint64_t>(a.i + 1) * 0xc2b2ae3d27d4eb4fULL; }
std::uint64_t hash_value(XY a) { return a == XY::x ? 0x27d4eb2fULL : 0x165667b1ULL; }

}  // namespace fmes
