#ifndef LEXCHAIN_SYNTHETIC_H_
#define LEXCHAIN_SYNTHETIC_H_

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "lexchain/thesaurus.h"

namespace lexchain::synthetic {

struct ThesaurusShape {
  int heads = 990;
  std::size_t vocabulary = 60000;  // distinct lemmas
  std::size_t entries_per_head = 110;
};

// Deterministic pseudo-word vocabulary; every word is lowercase ASCII and
// at least four letters long.
std::vector<std::string> MakeVocabulary(std::size_t size, std::uint64_t seed);

// Random Roget-shaped hierarchy over `vocabulary`.
std::vector<Head> MakeHeads(const ThesaurusShape& shape, const std::vector<std::string>& vocabulary,
                            std::uint64_t seed);

// Sentences of 8-20 words mixing stop words, topical runs drawn from one
// Head at a time, and unrelated vocabulary.
std::string MakeDocument(const std::vector<Head>& heads, const std::vector<std::string>& vocabulary,
                         const std::vector<std::string>& stop_words, std::size_t tokens,
                         std::uint64_t seed);

}  // namespace lexchain::synthetic

#endif  // LEXCHAIN_SYNTHETIC_H_
