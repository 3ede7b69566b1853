#include "lexchain/synthetic.h"

#include <algorithm>
#include <random>
#include <unordered_set>

namespace lexchain::synthetic {
namespace {

constexpr const char* kOnsets[] = {"b", "c", "d", "f", "g", "h", "j", "k", "l", "m", "n",
                                   "p", "r", "s", "t", "v", "w", "z", "br", "cl", "dr", "gr",
                                   "pl", "st", "tr", "sk", "sn", "th"};
constexpr const char* kVowels[] = {"a", "e", "i", "o", "u", "ai", "ou", "ea"};
constexpr const char* kCodas[] = {"", "n", "r", "l", "m", "x", "k", "p"};

template <typename T, std::size_t N>
const char* Pick(const T (&options)[N], std::mt19937_64& rng) {
  return options[std::uniform_int_distribution<std::size_t>(0, N - 1)(rng)];
}

}  // namespace

std::vector<std::string> MakeVocabulary(std::size_t size, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> syllables(2, 4);
  std::unordered_set<std::string> seen;
  std::vector<std::string> words;
  words.reserve(size);
  while (words.size() < size) {
    std::string word;
    const int n = syllables(rng);
    for (int s = 0; s < n; ++s) {
      word += Pick(kOnsets, rng);
      word += Pick(kVowels, rng);
    }
    word += Pick(kCodas, rng);
    // Keep words clear of the suffixes the normalizer strips.
    if (word.size() < 4 || word.back() == 's' || word.back() == 'd' || word.back() == 'r') {
      continue;
    }
    if (seen.insert(word).second) words.push_back(std::move(word));
  }
  return words;
}

std::vector<Head> MakeHeads(const ThesaurusShape& shape, const std::vector<std::string>& vocabulary,
                            std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> word_dist(0, vocabulary.size() - 1);
  std::uniform_int_distribution<int> group_size(3, 8);
  std::uniform_int_distribution<int> groups_per_paragraph(2, 5);
  std::bernoulli_distribution extra_section(0.5);
  std::vector<Head> heads;
  heads.reserve(static_cast<std::size_t>(shape.heads));
  for (int h = 1; h <= shape.heads; ++h) {
    Head head;
    head.number = h;
    head.name = "Concept " + std::to_string(h);
    std::vector<PartOfSpeech> parts = {PartOfSpeech::kNoun};
    for (auto pos : {PartOfSpeech::kAdjective, PartOfSpeech::kVerb, PartOfSpeech::kAdverb}) {
      if (extra_section(rng)) parts.push_back(pos);
    }
    // Nouns take about half of the entries, the rest is shared evenly.
    std::size_t remaining = shape.entries_per_head;
    for (std::size_t p = 0; p < parts.size(); ++p) {
      const std::size_t budget =
          p + 1 == parts.size() ? remaining
                                : (p == 0 ? remaining / 2 : remaining / (parts.size() - p));
      remaining -= budget;
      PosSection section;
      section.pos = parts[p];
      std::size_t used = 0;
      while (used < budget) {
        Paragraph paragraph;
        const int groups = groups_per_paragraph(rng);
        for (int g = 0; g < groups && used < budget; ++g) {
          SemicolonGroup group;
          const auto size = std::min<std::size_t>(static_cast<std::size_t>(group_size(rng)),
                                                  budget - used);
          while (group.entries.size() < size) {
            const std::string& word = vocabulary[word_dist(rng)];
            if (std::find(group.entries.begin(), group.entries.end(), word) ==
                group.entries.end()) {
              group.entries.push_back(word);
            }
          }
          used += group.entries.size();
          paragraph.groups.push_back(std::move(group));
        }
        section.paragraphs.push_back(std::move(paragraph));
      }
      if (!section.paragraphs.empty()) head.sections.push_back(std::move(section));
    }
    heads.push_back(std::move(head));
  }
  return heads;
}

std::string MakeDocument(const std::vector<Head>& heads, const std::vector<std::string>& vocabulary,
                         const std::vector<std::string>& stop_words, std::size_t tokens,
                         std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> head_dist(0, heads.size() - 1);
  std::uniform_int_distribution<std::size_t> word_dist(0, vocabulary.size() - 1);
  std::uniform_int_distribution<std::size_t> stop_dist(0, stop_words.size() - 1);
  std::uniform_int_distribution<int> sentence_length(8, 20);
  std::uniform_real_distribution<double> unit(0.0, 1.0);

  auto topical_words = [&heads](std::size_t h) {
    std::vector<const std::string*> words;
    for (const PosSection& section : heads[h].sections) {
      if (section.pos != PartOfSpeech::kNoun) continue;
      for (const Paragraph& paragraph : section.paragraphs) {
        for (const SemicolonGroup& group : paragraph.groups) {
          for (const std::string& word : group.entries) words.push_back(&word);
        }
      }
    }
    return words;
  };

  std::string text;
  std::vector<const std::string*> topic = topical_words(head_dist(rng));
  std::size_t emitted = 0;
  while (emitted < tokens) {
    if (unit(rng) < 0.15) topic = topical_words(head_dist(rng));
    const int length = sentence_length(rng);
    for (int i = 0; i < length && emitted < tokens; ++i, ++emitted) {
      const double roll = unit(rng);
      std::string word;
      if (roll < 0.4) {
        word = stop_words[stop_dist(rng)];
      } else if (roll < 0.7 && !topic.empty()) {
        word = *topic[std::uniform_int_distribution<std::size_t>(0, topic.size() - 1)(rng)];
      } else {
        word = vocabulary[word_dist(rng)];
      }
      if (i == 0 && !word.empty() && word[0] >= 'a' && word[0] <= 'z') {
        word[0] = static_cast<char>(word[0] - 'a' + 'A');
      }
      if (i > 0) text += ' ';
      text += word;
    }
    text += ". ";
  }
  return text;
}

}  // namespace lexchain::synthetic
