#include "lexchain/thesaurus.h"

#include <algorithm>
#include <array>
#include <fstream>
#include <iterator>
#include <set>
#include <sstream>
#include <utility>

#include "json.hpp"

namespace lexchain {
namespace {

using nlohmann::json;

constexpr std::array<std::string_view, 5> kPosNames = {
    "noun", "adjective", "verb", "adverb", "interjection"};

// Maps a byte offset in `text` to "line L, column C" (both 1-based).
std::string DescribeOffset(std::string_view text, std::size_t offset) {
  offset = std::min(offset, text.size());
  std::size_t line = 1;
  std::size_t column = 1;
  for (std::size_t i = 0; i < offset; ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(column);
}

[[noreturn]] void Fail(const std::string& where, const std::string& what) {
  throw ThesaurusError(where + ": " + what);
}

void CheckKeys(const json& object, std::initializer_list<std::string_view> allowed,
               const std::string& where) {
  if (!object.is_object()) Fail(where, "expected an object");
  for (const auto& item : object.items()) {
    if (std::find(allowed.begin(), allowed.end(), item.key()) == allowed.end()) {
      Fail(where, "unknown key \"" + item.key() + "\"");
    }
  }
  for (std::string_view key : allowed) {
    if (!object.contains(std::string(key))) {
      Fail(where, "missing key \"" + std::string(key) + "\"");
    }
  }
}

const json& ArrayAt(const json& object, const char* key, const std::string& where) {
  const json& value = object.at(key);
  if (!value.is_array()) Fail(where + "." + key, "expected an array");
  return value;
}

std::vector<Head> HeadsFromJson(const json& document) {
  CheckKeys(document, {"heads"}, "document");
  std::vector<Head> heads;
  const json& heads_json = ArrayAt(document, "heads", "document");
  heads.reserve(heads_json.size());
  for (std::size_t h = 0; h < heads_json.size(); ++h) {
    const std::string head_where = "heads[" + std::to_string(h) + "]";
    const json& head_json = heads_json[h];
    CheckKeys(head_json, {"number", "name", "sections"}, head_where);
    Head head;
    const json& number = head_json.at("number");
    if (!number.is_number_integer()) Fail(head_where + ".number", "expected an integer");
    const auto raw_number = number.get<long long>();
    if (raw_number <= 0 || raw_number > 1'000'000'000) {
      Fail(head_where + ".number", "head numbers must be positive");
    }
    head.number = static_cast<int>(raw_number);
    if (!head_json.at("name").is_string()) Fail(head_where + ".name", "expected a string");
    head.name = head_json.at("name").get<std::string>();

    const json& sections = ArrayAt(head_json, "sections", head_where);
    for (std::size_t s = 0; s < sections.size(); ++s) {
      const std::string section_where = head_where + ".sections[" + std::to_string(s) + "]";
      CheckKeys(sections[s], {"pos", "paragraphs"}, section_where);
      PosSection section;
      const json& pos = sections[s].at("pos");
      if (!pos.is_string()) Fail(section_where + ".pos", "expected a string");
      auto parsed = ParsePos(pos.get<std::string>());
      if (!parsed) Fail(section_where + ".pos", "unknown part of speech \"" + pos.get<std::string>() + "\"");
      section.pos = *parsed;

      const json& paragraphs = ArrayAt(sections[s], "paragraphs", section_where);
      for (std::size_t p = 0; p < paragraphs.size(); ++p) {
        const std::string paragraph_where =
            section_where + ".paragraphs[" + std::to_string(p) + "]";
        CheckKeys(paragraphs[p], {"groups"}, paragraph_where);
        Paragraph paragraph;
        const json& groups = ArrayAt(paragraphs[p], "groups", paragraph_where);
        for (std::size_t g = 0; g < groups.size(); ++g) {
          const std::string group_where = paragraph_where + ".groups[" + std::to_string(g) + "]";
          if (!groups[g].is_array()) Fail(group_where, "expected an array of strings");
          SemicolonGroup group;
          for (const json& entry : groups[g]) {
            if (!entry.is_string()) Fail(group_where, "entries must be strings");
            group.entries.push_back(entry.get<std::string>());
          }
          paragraph.groups.push_back(std::move(group));
        }
        section.paragraphs.push_back(std::move(paragraph));
      }
      head.sections.push_back(std::move(section));
    }
    heads.push_back(std::move(head));
  }
  return heads;
}

void Validate(const std::vector<Head>& heads) {
  std::set<int> numbers;
  for (const Head& head : heads) {
    const std::string where = "head " + std::to_string(head.number);
    if (head.number <= 0) Fail(where, "head numbers must be positive");
    if (!numbers.insert(head.number).second) Fail(where, "duplicate head number");
    std::array<bool, kPosNames.size()> seen{};
    for (const PosSection& section : head.sections) {
      auto slot = static_cast<std::size_t>(section.pos);
      if (slot >= seen.size()) Fail(where, "unknown part of speech");
      if (seen[slot]) Fail(where, "duplicate " + std::string(PosName(section.pos)) + " section");
      seen[slot] = true;
      if (section.paragraphs.empty()) {
        Fail(where + " / " + std::string(PosName(section.pos)), "section has no paragraphs");
      }
      for (std::size_t p = 0; p < section.paragraphs.size(); ++p) {
        const Paragraph& paragraph = section.paragraphs[p];
        const std::string paragraph_where = where + " / " + std::string(PosName(section.pos)) +
                                            " / paragraph " + std::to_string(p);
        if (paragraph.groups.empty()) Fail(paragraph_where, "paragraph has no groups");
        for (std::size_t g = 0; g < paragraph.groups.size(); ++g) {
          const auto& entries = paragraph.groups[g].entries;
          const std::string group_where = paragraph_where + " / group " + std::to_string(g);
          if (entries.empty()) Fail(group_where, "empty group");
          std::set<std::string> folded;
          for (const std::string& entry : entries) {
            if (entry.empty()) Fail(group_where, "empty entry");
            if (!folded.insert(FoldCase(entry)).second) {
              Fail(group_where, "duplicate entry \"" + entry + "\"");
            }
          }
        }
      }
    }
  }
}

bool LocationLess(const EntryLocation& a, const EntryLocation& b) {
  return std::tie(a.head_number, a.pos, a.paragraph_index, a.group_index) <
         std::tie(b.head_number, b.pos, b.paragraph_index, b.group_index);
}

SimilarityLevel PairLevel(const EntryLocation& a, const EntryLocation& b) {
  if (a.head_number != b.head_number) return SimilarityLevel::kNone;
  if (a.pos != b.pos) return SimilarityLevel::kSameHead;
  if (a.paragraph_index != b.paragraph_index) return SimilarityLevel::kSamePosSection;
  if (a.group_index != b.group_index) return SimilarityLevel::kSameParagraph;
  return SimilarityLevel::kSameGroup;
}

}  // namespace

std::string_view PosName(PartOfSpeech pos) {
  return kPosNames.at(static_cast<std::size_t>(pos));
}

std::optional<PartOfSpeech> ParsePos(std::string_view name) {
  for (std::size_t i = 0; i < kPosNames.size(); ++i) {
    if (kPosNames[i] == name) return static_cast<PartOfSpeech>(i);
  }
  return std::nullopt;
}

std::string_view SimilarityLevelName(SimilarityLevel level) {
  switch (level) {
    case SimilarityLevel::kSameGroup: return "SameGroup";
    case SimilarityLevel::kSameParagraph: return "SameParagraph";
    case SimilarityLevel::kSamePosSection: return "SamePosSection";
    case SimilarityLevel::kSameHead: return "SameHead";
    case SimilarityLevel::kNone: break;
  }
  return "None";
}

std::string FormatRelation(const Relation& relation) {
  if (relation.kind == RelationKind::kRepetition) return "Repetition";
  return "SameHead(" + std::to_string(relation.head_number) + ")";
}

std::string FoldCase(std::string_view text) {
  std::string folded(text);
  for (char& c : folded) {
    if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
  }
  return folded;
}

ThesaurusIndex ThesaurusIndex::Load(std::istream& source) {
  std::string document((std::istreambuf_iterator<char>(source)), std::istreambuf_iterator<char>());
  if (source.bad()) throw ThesaurusError("read error");
  return LoadFromString(document);
}

ThesaurusIndex ThesaurusIndex::LoadFromString(std::string_view document) {
  json parsed;
  try {
    parsed = json::parse(document.begin(), document.end());
  } catch (const json::parse_error& e) {
    // e.byte is 1-based and points one past the offending character.
    const std::size_t offset = e.byte > 0 ? e.byte - 1 : 0;
    throw ThesaurusError("syntax error at " + DescribeOffset(document, offset) + ": " + e.what());
  }
  return FromHeads(HeadsFromJson(parsed));
}

ThesaurusIndex ThesaurusIndex::LoadFromFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::ios_base::failure("cannot open " + path);
  return Load(in);
}

ThesaurusIndex ThesaurusIndex::FromHeads(std::vector<Head> heads) {
  Validate(heads);
  std::sort(heads.begin(), heads.end(),
            [](const Head& a, const Head& b) { return a.number < b.number; });

  ThesaurusIndex index;
  for (const Head& head : heads) {
    for (const PosSection& section : head.sections) {
      for (std::size_t p = 0; p < section.paragraphs.size(); ++p) {
        const auto& groups = section.paragraphs[p].groups;
        for (std::size_t g = 0; g < groups.size(); ++g) {
          for (const std::string& entry : groups[g].entries) {
            LemmaRecord& record = index.lemma_index_[FoldCase(entry)];
            record.locations.push_back({head.number, section.pos, p, g, entry});
            if (section.pos == PartOfSpeech::kNoun &&
                (record.noun_heads.empty() || record.noun_heads.back() != head.number)) {
              record.noun_heads.push_back(head.number);
            }
            ++index.entry_count_;
          }
        }
      }
    }
  }
  // Heads are visited in number order, so noun_heads is already ascending;
  // sections inside a head may be listed in any POS order.
  for (auto& [lemma, record] : index.lemma_index_) {
    std::stable_sort(record.locations.begin(), record.locations.end(), LocationLess);
  }
  index.heads_ = std::move(heads);
  return index;
}

const Head* ThesaurusIndex::FindHead(int number) const {
  auto it = std::lower_bound(heads_.begin(), heads_.end(), number,
                             [](const Head& head, int n) { return head.number < n; });
  if (it == heads_.end() || it->number != number) return nullptr;
  return &*it;
}

const ThesaurusIndex::LemmaRecord* ThesaurusIndex::Find(std::string_view lemma) const {
  auto it = lemma_index_.find(std::string(lemma));
  return it == lemma_index_.end() ? nullptr : &it->second;
}

bool ThesaurusIndex::Contains(std::string_view lemma) const { return Find(lemma) != nullptr; }

std::span<const EntryLocation> ThesaurusIndex::Lookup(std::string_view lemma) const {
  const LemmaRecord* record = Find(lemma);
  if (record == nullptr) return {};
  return record->locations;
}

std::span<const int> ThesaurusIndex::NounHeads(std::string_view lemma) const {
  const LemmaRecord* record = Find(lemma);
  if (record == nullptr) return {};
  return record->noun_heads;
}

std::optional<Relation> ThesaurusIndex::ThesauralRelation(std::string_view lemma_a,
                                                          std::string_view lemma_b) const {
  auto a = NounHeads(lemma_a);
  auto b = NounHeads(lemma_b);
  auto ia = a.begin();
  auto ib = b.begin();
  while (ia != a.end() && ib != b.end()) {
    if (*ia == *ib) return Relation::SameHead(*ia);
    if (*ia < *ib) {
      ++ia;
    } else {
      ++ib;
    }
  }
  return std::nullopt;
}

SimilarityLevel ThesaurusIndex::Similarity(std::string_view lemma_a,
                                           std::string_view lemma_b) const {
  SimilarityLevel best = SimilarityLevel::kNone;
  for (const EntryLocation& a : Lookup(lemma_a)) {
    for (const EntryLocation& b : Lookup(lemma_b)) {
      best = std::min(best, PairLevel(a, b));
      if (best == SimilarityLevel::kSameGroup) return best;
    }
  }
  return best;
}

std::vector<int> ThesaurusIndex::SharedHeads(std::string_view lemma_a,
                                             std::string_view lemma_b) const {
  std::set<int> heads_a;
  for (const EntryLocation& loc : Lookup(lemma_a)) heads_a.insert(loc.head_number);
  std::set<int> shared;
  for (const EntryLocation& loc : Lookup(lemma_b)) {
    if (heads_a.count(loc.head_number) != 0) shared.insert(loc.head_number);
  }
  return {shared.begin(), shared.end()};
}

std::vector<std::string> ThesaurusIndex::Lemmas() const {
  std::vector<std::string> lemmas;
  lemmas.reserve(lemma_index_.size());
  for (const auto& [lemma, record] : lemma_index_) lemmas.push_back(lemma);
  std::sort(lemmas.begin(), lemmas.end());
  return lemmas;
}

std::string ThesaurusIndex::Serialize() const {
  nlohmann::ordered_json heads = nlohmann::ordered_json::array();
  for (const Head& head : heads_) {
    nlohmann::ordered_json sections = nlohmann::ordered_json::array();
    for (const PosSection& section : head.sections) {
      nlohmann::ordered_json paragraphs = nlohmann::ordered_json::array();
      for (const Paragraph& paragraph : section.paragraphs) {
        nlohmann::ordered_json groups = nlohmann::ordered_json::array();
        for (const SemicolonGroup& group : paragraph.groups) groups.push_back(group.entries);
        paragraphs.push_back({{"groups", std::move(groups)}});
      }
      sections.push_back({{"pos", PosName(section.pos)}, {"paragraphs", std::move(paragraphs)}});
    }
    heads.push_back(
        {{"number", head.number}, {"name", head.name}, {"sections", std::move(sections)}});
  }
  nlohmann::ordered_json document;
  document["heads"] = std::move(heads);
  return document.dump(1, '\t') + "\n";
}

}  // namespace lexchain
