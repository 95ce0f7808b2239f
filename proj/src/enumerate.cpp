#include "fmes/enumerate.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>

namespace fmes {

std::uint64_t count_words(int weight) {
  if (weight < 0) throw std::invalid_argument("negative weight");
  std::vector<std::uint64_t> a(static_cast<std::size_t>(weight) + 1, 0);
  a[0] = 1;
  for (int k = 1; k <= weight; ++k)
    for (int w = 1; w <= k; ++w) a[static_cast<std::size_t>(k)] += static_cast<std::uint64_t>(w) * a[static_cast<std::size_t>(k - w)];
  return a[static_cast<std::size_t>(weight)];
}

namespace {

template <class L, class Letters>
void extend(int remaining, BasicWord<L>& prefix, std::vector<BasicWord<L>>& out, Letters&& letters_of_weight) {
  if (remaining == 0) {
    out.push_back(prefix);
    return;
  }
  for (int w = 1; w <= remaining; ++w)
    for (const L& a : letters_of_weight(w, prefix.empty())) {
      prefix.letters.push_back(a);
      extend(remaining - w, prefix, out, letters_of_weight);
      prefix.letters.pop_back();
    }
}

template <class L, class Letters>
std::vector<BasicWord<L>> enumerate(int weight, Letters&& letters_of_weight) {
  if (weight < 0) throw std::invalid_argument("negative weight");
  std::vector<BasicWord<L>> out;
  BasicWord<L> prefix;
  extend(weight, prefix, out, letters_of_weight);
  std::sort(out.begin(), out.end());
  return out;
}

template <class L, class Make>
const std::vector<BasicWord<L>>& cached(int weight, Make&& make) {
  static std::mutex guard;
  static std::map<int, std::vector<BasicWord<L>>> table;
  std::lock_guard lock(guard);
  auto it = table.find(weight);
  if (it == table.end()) it = table.emplace(weight, make(weight)).first;
  return it->second;
}

}  // namespace

const std::vector<Word>& words_of_weight(int weight) {
  return cached<Letter>(weight, [](int k) {
    return enumerate<Letter>(k, [](int w, bool) {
      std::vector<Letter> ls;
      for (int kk = 1; kk <= w; ++kk) ls.push_back(Letter{kk, w - kk});
      return ls;
    });
  });
}

std::vector<Word> words_of_weight_and_depth(int weight, int depth) {
  std::vector<Word> out;
  for (const auto& w : words_of_weight(weight))
    if (w.depth() == depth) out.push_back(w);
  return out;
}

std::vector<Word> words_up_to_weight(int max_weight) {
  std::vector<Word> out;
  for (int k = 0; k <= max_weight; ++k) {
    const auto& ws = words_of_weight(k);
    out.insert(out.end(), ws.begin(), ws.end());
  }
  return out;
}

const std::vector<ZWord>& zwords_of_weight(int weight) {
  return cached<ZLetter>(weight, [](int k) {
    return enumerate<ZLetter>(k, [](int w, bool) { return std::vector<ZLetter>{ZLetter{w}}; });
  });
}

const std::vector<BWord>& bwords_of_weight(int weight) {
  return cached<BLetter>(weight, [](int k) {
    return enumerate<BLetter>(k, [](int w, bool first) {
      std::vector<BLetter> ls;
      if (w == 1) {
        ls.push_back(BLetter{1});
        if (!first) ls.push_back(BLetter{0});
      } else {
        ls.push_back(BLetter{w});
      }
      return ls;
    });
  });
}

}  // namespace fmes
