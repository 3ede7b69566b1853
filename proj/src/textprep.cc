#include "lexchain/textprep.h"

#include <algorithm>
#include <fstream>
#include <istream>

namespace lexchain {
namespace {

bool IsSpace(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v';
}

bool IsUpper(char c) { return c >= 'A' && c <= 'Z'; }

// Bytes >= 0x80 belong to multibyte UTF-8 sequences and count as letters.
bool IsLetter(char c) {
  const auto u = static_cast<unsigned char>(c);
  return (u >= 'a' && u <= 'z') || (u >= 'A' && u <= 'Z') || u >= 0x80;
}

bool IsTerminator(char c) { return c == '.' || c == '!' || c == '?'; }

bool IsClosing(char c) { return c == '"' || c == '\'' || c == ')' || c == ']'; }

bool IsVowel(char c) {
  return c == 'a' || c == 'e' || c == 'i' || c == 'o' || c == 'u';
}

// The word (letters and dots) immediately before the period at `dot`.
std::string WordBeforeDot(std::string_view text, std::size_t dot) {
  std::size_t start = dot;
  while (start > 0 && (IsLetter(text[start - 1]) || text[start - 1] == '.')) --start;
  return FoldCase(text.substr(start, dot - start));
}

bool SuppressesBreak(std::string_view text, std::size_t dot) {
  const std::string word = WordBeforeDot(text, dot);
  if (word.size() == 1 && IsUpper(text[dot - 1])) return true;  // an initial
  return std::find(std::begin(kAbbreviations), std::end(kAbbreviations), word) !=
         std::end(kAbbreviations);
}

SentenceSpan Trim(std::string_view text, std::size_t begin, std::size_t end) {
  while (begin < end && IsSpace(text[begin])) ++begin;
  while (end > begin && IsSpace(text[end - 1])) --end;
  return {begin, end};
}

void AddStripped(std::vector<std::string>& out, const std::string& stem) {
  if (stem.size() < 2) return;
  out.push_back(stem);
  out.push_back(stem + "e");
  const std::size_t n = stem.size();
  if (n >= 3 && stem[n - 1] == stem[n - 2] && !IsVowel(stem[n - 1])) {
    out.push_back(stem.substr(0, n - 1));
  }
}

bool EndsWith(std::string_view word, std::string_view suffix) {
  return word.size() > suffix.size() && word.substr(word.size() - suffix.size()) == suffix;
}

}  // namespace

StopList::StopList(std::initializer_list<std::string_view> entries) {
  for (std::string_view entry : entries) Add(entry);
}

void StopList::Add(std::string_view entry) { entries_.insert(FoldCase(entry)); }

StopList StopList::Load(std::istream& source) {
  StopList list;
  std::string line;
  while (std::getline(source, line)) {
    std::size_t begin = 0;
    std::size_t end = line.size();
    while (begin < end && IsSpace(line[begin])) ++begin;
    while (end > begin && IsSpace(line[end - 1])) --end;
    if (begin == end || line[begin] == '#') continue;
    list.Add(std::string_view(line).substr(begin, end - begin));
  }
  if (source.bad()) throw std::ios_base::failure("stop list read error");
  return list;
}

StopList StopList::LoadFromFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::ios_base::failure("cannot open " + path);
  return Load(in);
}

std::vector<SentenceSpan> SplitSentences(std::string_view text) {
  std::vector<SentenceSpan> sentences;
  std::size_t start = 0;
  std::size_t i = 0;
  while (i < text.size()) {
    if (!IsTerminator(text[i])) {
      ++i;
      continue;
    }
    const std::size_t mark = i;
    std::size_t j = i;
    while (j < text.size() && IsTerminator(text[j])) ++j;
    while (j < text.size() && IsClosing(text[j])) ++j;
    std::size_t k = j;
    while (k < text.size() && IsSpace(text[k])) ++k;
    const bool at_end = k == text.size();
    const bool boundary = at_end || (k > j && IsUpper(text[k]));
    const bool single_dot = text[mark] == '.' && j - mark == 1;
    if (boundary && !(single_dot && !at_end && SuppressesBreak(text, mark))) {
      SentenceSpan span = Trim(text, start, j);
      if (span.begin < span.end) sentences.push_back(span);
      start = j;
    }
    i = j;
  }
  SentenceSpan tail = Trim(text, start, text.size());
  if (tail.begin < tail.end) sentences.push_back(tail);
  return sentences;
}

std::vector<SurfaceToken> Tokenize(std::string_view sentence) {
  std::vector<SurfaceToken> tokens;
  std::size_t i = 0;
  const std::size_t n = sentence.size();
  while (i < n) {
    if (!IsLetter(sentence[i])) {
      ++i;
      continue;
    }
    const std::size_t begin = i;
    std::size_t end = i;
    bool hyphenated = false;
    while (end < n) {
      const char c = sentence[end];
      if (IsLetter(c)) {
        ++end;
      } else if ((c == '\'' || c == '-') && end + 1 < n && IsLetter(sentence[end + 1])) {
        hyphenated = hyphenated || c == '-';
        ++end;
      } else {
        break;
      }
    }
    const std::string_view word = sentence.substr(begin, end - begin);
    tokens.push_back({std::string(word), begin, false});
    if (hyphenated) {
      std::size_t part_begin = 0;
      while (part_begin <= word.size()) {
        std::size_t dash = word.find('-', part_begin);
        if (dash == std::string_view::npos) dash = word.size();
        tokens.push_back(
            {std::string(word.substr(part_begin, dash - part_begin)), begin + part_begin, true});
        part_begin = dash + 1;
      }
    }
    i = end;
  }
  return tokens;
}

std::vector<std::string> NormalizationCandidates(std::string_view folded) {
  std::vector<std::string> out;
  const std::string word(folded);
  out.push_back(word);
  if (EndsWith(word, "s")) {
    const std::string stem = word.substr(0, word.size() - 1);
    if (stem.size() >= 2) out.push_back(stem);
  }
  if (EndsWith(word, "es")) {
    const std::string stem = word.substr(0, word.size() - 2);
    if (stem.size() >= 2) out.push_back(stem);
  }
  if (EndsWith(word, "ies")) {
    const std::string stem = word.substr(0, word.size() - 3);
    if (stem.size() >= 1) out.push_back(stem + "y");
  }
  for (std::string_view suffix : {"ing", "ed", "er", "est"}) {
    if (EndsWith(word, suffix)) AddStripped(out, word.substr(0, word.size() - suffix.size()));
  }
  return out;
}

std::string Normalize(std::string_view surface, const ThesaurusIndex& index) {
  const std::string folded = FoldCase(surface);
  for (const std::string& candidate : NormalizationCandidates(folded)) {
    if (index.Contains(candidate)) return candidate;
  }
  return folded;
}

void SelectCandidates(std::vector<Token>& tokens, const StopList& stoplist) {
  for (Token& token : tokens) token.candidate = !stoplist.Contains(token.lemma);
}

std::size_t PreparedText::candidate_count() const {
  return static_cast<std::size_t>(
      std::count_if(tokens.begin(), tokens.end(), [](const Token& t) { return t.candidate; }));
}

PreparedText PrepareText(std::string_view text, const ThesaurusIndex& index,
                         const StopList& stoplist) {
  PreparedText prepared;
  prepared.sentences = SplitSentences(text);
  for (std::size_t s = 0; s < prepared.sentences.size(); ++s) {
    const SentenceSpan& span = prepared.sentences[s];
    bool whole_indexed = false;
    for (const SurfaceToken& surface : Tokenize(span.View(text))) {
      std::string lemma = Normalize(surface.text, index);
      if (!surface.hyphen_part) {
        whole_indexed = index.Contains(lemma);
      } else if (whole_indexed) {
        continue;
      }
      Token token;
      token.surface = surface.text;
      token.lemma = std::move(lemma);
      token.sentence_index = s;
      token.token_index = prepared.tokens.size();
      token.offset = span.begin + surface.offset;
      prepared.tokens.push_back(std::move(token));
    }
  }
  SelectCandidates(prepared.tokens, stoplist);
  return prepared;
}

}  // namespace lexchain
