#pragma once

#include "fmes/word.hpp"

#include <cstdint>
#include <vector>

namespace fmes {

// a(0) = 1, a(k) = sum_{w=1..k} w a(k-w).
std::uint64_t count_words(int weight);

// All words of the given weight in canonical order (cached, shared).
const std::vector<Word>& words_of_weight(int weight);
std::vector<Word> words_of_weight_and_depth(int weight, int depth);
std::vector<Word> words_up_to_weight(int max_weight);

// Compositions of the weight, canonical order.
const std::vector<ZWord>& zwords_of_weight(int weight);
// Words over the balanced alphabet not starting with b_0.
const std::vector<BWord>& bwords_of_weight(int weight);

}  // namespace fmes
