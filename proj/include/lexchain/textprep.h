#ifndef LEXCHAIN_TEXTPREP_H_
#define LEXCHAIN_TEXTPREP_H_

#include <cstddef>
#include <iosfwd>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "lexchain/thesaurus.h"

namespace lexchain {

// A sentence as a byte range [begin, end) of the source text.
struct SentenceSpan {
  std::size_t begin = 0;
  std::size_t end = 0;

  std::string_view View(std::string_view text) const {
    return text.substr(begin, end - begin);
  }
};

// A word found by Tokenize; offsets are relative to the tokenized string.
struct SurfaceToken {
  std::string text;
  std::size_t offset = 0;
  bool hyphen_part = false;  // one piece of a hyphenated whole
};

struct Token {
  std::string surface;
  std::string lemma;
  std::size_t sentence_index = 0;
  std::size_t token_index = 0;
  std::size_t offset = 0;  // byte offset of surface in the document
  bool candidate = false;
};

class StopList {
 public:
  StopList() = default;
  explicit StopList(std::initializer_list<std::string_view> entries);

  static StopList Load(std::istream& source);
  static StopList LoadFromFile(const std::string& path);

  void Add(std::string_view entry);
  bool Contains(std::string_view lemma) const { return entries_.count(std::string(lemma)) != 0; }
  std::size_t size() const { return entries_.size(); }

 private:
  std::unordered_set<std::string> entries_;
};

// Splits at '.', '!' or '?' followed by whitespace and an uppercase letter,
// or by the end of the text. Abbreviations in kAbbreviations and single-letter
// initials never end a sentence. Leading and trailing whitespace is trimmed
// from every span.
std::vector<SentenceSpan> SplitSentences(std::string_view text);

// Lowercase forms, without the final period.
inline constexpr std::string_view kAbbreviations[] = {"fig", "mr", "mrs", "dr",
                                                      "vs", "e.g", "i.e"};

// Runs of letters, apostrophes and internal hyphens. A hyphenated word is
// emitted whole, followed by each of its parts.
std::vector<SurfaceToken> Tokenize(std::string_view sentence);

// Suffix-stripping candidates for a folded word, in lookup order (the folded
// form itself comes first).
std::vector<std::string> NormalizationCandidates(std::string_view folded);

// Case-folds, then returns the first candidate present in the index, or the
// folded form when none is.
std::string Normalize(std::string_view surface, const ThesaurusIndex& index);

void SelectCandidates(std::vector<Token>& tokens, const StopList& stoplist);

struct PreparedText {
  std::vector<SentenceSpan> sentences;
  std::vector<Token> tokens;

  std::size_t candidate_count() const;
};

// Full preprocessing: split, tokenize, normalize and select. Hyphen parts are
// dropped when their whole word normalizes to an indexed lemma.
PreparedText PrepareText(std::string_view text, const ThesaurusIndex& index,
                         const StopList& stoplist);

}  // namespace lexchain

#endif  // LEXCHAIN_TEXTPREP_H_
