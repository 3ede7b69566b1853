#ifndef LEXCHAIN_THESAURUS_H_
#define LEXCHAIN_THESAURUS_H_

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace lexchain {

// Ordered as the lookup sort key: noun < adjective < verb < adverb < interjection.
enum class PartOfSpeech : std::uint8_t {
  kNoun,
  kAdjective,
  kVerb,
  kAdverb,
  kInterjection,
};

std::string_view PosName(PartOfSpeech pos);
std::optional<PartOfSpeech> ParsePos(std::string_view name);

struct SemicolonGroup {
  std::vector<std::string> entries;
};

struct Paragraph {
  std::vector<SemicolonGroup> groups;
};

struct PosSection {
  PartOfSpeech pos = PartOfSpeech::kNoun;
  std::vector<Paragraph> paragraphs;
};

struct Head {
  int number = 0;
  std::string name;
  std::vector<PosSection> sections;
};

struct EntryLocation {
  int head_number = 0;
  PartOfSpeech pos = PartOfSpeech::kNoun;
  std::size_t paragraph_index = 0;
  std::size_t group_index = 0;
  std::string entry;

  friend bool operator==(const EntryLocation&, const EntryLocation&) = default;
};

// Closest first; the numeric order is the strength order.
enum class SimilarityLevel : std::uint8_t {
  kSameGroup,
  kSameParagraph,
  kSamePosSection,
  kSameHead,
  kNone,
};

std::string_view SimilarityLevelName(SimilarityLevel level);

enum class RelationKind : std::uint8_t { kRepetition, kSameHead };

struct Relation {
  RelationKind kind = RelationKind::kRepetition;
  int head_number = 0;  // meaningful for kSameHead only

  static Relation Repetition() { return {RelationKind::kRepetition, 0}; }
  static Relation SameHead(int head) { return {RelationKind::kSameHead, head}; }

  friend bool operator==(const Relation&, const Relation&) = default;
};

// "Repetition" or "SameHead(209)".
std::string FormatRelation(const Relation& relation);

// Malformed thesaurus document; what() carries line/column when known.
class ThesaurusError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// ASCII case fold; bytes >= 0x80 pass through unchanged.
std::string FoldCase(std::string_view text);

// Immutable Roget-style index: Head/POS/paragraph/group hierarchy plus the
// inverted lemma -> locations map. Queries are const and thread-safe.
class ThesaurusIndex {
 public:
  ThesaurusIndex() = default;

  static ThesaurusIndex Load(std::istream& source);
  static ThesaurusIndex LoadFromString(std::string_view document);
  static ThesaurusIndex LoadFromFile(const std::string& path);
  // Validates and indexes an in-memory hierarchy (same checks as Load).
  static ThesaurusIndex FromHeads(std::vector<Head> heads);

  const std::vector<Head>& heads() const { return heads_; }
  const Head* FindHead(int number) const;
  std::size_t entry_count() const { return entry_count_; }
  std::size_t lemma_count() const { return lemma_index_.size(); }

  bool Contains(std::string_view lemma) const;

  // All locations in (head, pos, paragraph, group) order; empty if absent.
  std::span<const EntryLocation> Lookup(std::string_view lemma) const;

  // Ascending, unique head numbers where the lemma has a noun entry.
  std::span<const int> NounHeads(std::string_view lemma) const;

  // SameHead(h) for the smallest h in which both lemmas have noun entries.
  std::optional<Relation> ThesauralRelation(std::string_view lemma_a,
                                            std::string_view lemma_b) const;

  // Strongest level over all location pairs, every part of speech included.
  SimilarityLevel Similarity(std::string_view lemma_a,
                             std::string_view lemma_b) const;

  // Heads shared by both lemmas in any section, ascending.
  std::vector<int> SharedHeads(std::string_view lemma_a,
                               std::string_view lemma_b) const;

  // Every indexed lemma, sorted.
  std::vector<std::string> Lemmas() const;

  // Canonical JSON document in the thesaurus file format.
  std::string Serialize() const;

 private:
  struct LemmaRecord {
    std::vector<EntryLocation> locations;
    std::vector<int> noun_heads;
  };

  const LemmaRecord* Find(std::string_view lemma) const;

  std::vector<Head> heads_;  // sorted by number
  std::unordered_map<std::string, LemmaRecord> lemma_index_;
  std::size_t entry_count_ = 0;
};

}  // namespace lexchain

#endif  // LEXCHAIN_THESAURUS_H_
