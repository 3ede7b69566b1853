#include <sstream>
#include <string>

#include "doctest.h"
#include "lexchain/thesaurus.h"
#include "testing.h"

namespace lexchain {
namespace {

using testing::FixtureIndex;

constexpr const char* kMinimal =
    R"({"heads": [{"number": 1, "name": "Test", "sections": [
        {"pos": "noun", "paragraphs": [{"groups": [["alpha"]]}]}]}]})";

std::string ErrorOf(const std::string& document) {
  try {
    ThesaurusIndex::LoadFromString(document);
  } catch (const ThesaurusError& e) {
    return e.what();
  }
  return "";
}

TEST_CASE("minimal document loads") {
  std::istringstream in(kMinimal);
  const ThesaurusIndex index = ThesaurusIndex::Load(in);
  CHECK(index.heads().size() == 1);
  CHECK(index.entry_count() == 1);
  CHECK_FALSE(index.Lookup("alpha").empty());
}

TEST_CASE("bank and slope are indexed under head 209") {
  const ThesaurusIndex& index = FixtureIndex();
  for (const char* word : {"bank", "slope"}) {
    auto locations = index.Lookup(word);
    REQUIRE(locations.size() == 1);
    CHECK(locations[0].head_number == 209);
    CHECK(locations[0].pos == PartOfSpeech::kNoun);
  }
  CHECK(index.FindHead(209)->name == "Height");
}

TEST_CASE("load errors") {
  SUBCASE("duplicate head number") {
    const std::string doc = R"({"heads": [
      {"number": 7, "name": "A", "sections": []},
      {"number": 7, "name": "B", "sections": []}]})";
    CHECK(ErrorOf(doc).find("duplicate head number") != std::string::npos);
  }
  SUBCASE("syntax error carries a line") {
    const std::string doc = "{\"heads\": [\n  {\"number\": 1,,}\n]}";
    const std::string error = ErrorOf(doc);
    CHECK(error.find("syntax error at line 2") != std::string::npos);
  }
  SUBCASE("empty group") {
    const std::string doc = R"({"heads": [{"number": 1, "name": "A", "sections": [
        {"pos": "noun", "paragraphs": [{"groups": [[]]}]}]}]})";
    CHECK(ErrorOf(doc).find("empty group") != std::string::npos);
  }
  SUBCASE("unknown part of speech") {
    const std::string doc = R"({"heads": [{"number": 1, "name": "A", "sections": [
        {"pos": "preposition", "paragraphs": [{"groups": [["x"]]}]}]}]})";
    CHECK(ErrorOf(doc).find("unknown part of speech") != std::string::npos);
  }
  SUBCASE("unknown key") {
    const std::string doc = R"({"heads": [], "classes": []})";
    CHECK(ErrorOf(doc).find("unknown key \"classes\"") != std::string::npos);
  }
  SUBCASE("non-positive head number") {
    CHECK(ErrorOf(R"({"heads": [{"number": 0, "name": "A", "sections": []}]})") != "");
  }
  SUBCASE("duplicate entry in a group, after case folding") {
    const std::string doc = R"({"heads": [{"number": 1, "name": "A", "sections": [
        {"pos": "noun", "paragraphs": [{"groups": [["Rome", "rome"]]}]}]}]})";
    CHECK(ErrorOf(doc).find("duplicate entry") != std::string::npos);
  }
  SUBCASE("duplicate section") {
    const std::string doc = R"({"heads": [{"number": 1, "name": "A", "sections": [
        {"pos": "noun", "paragraphs": [{"groups": [["a"]]}]},
        {"pos": "noun", "paragraphs": [{"groups": [["b"]]}]}]}]})";
    CHECK(ErrorOf(doc).find("duplicate noun section") != std::string::npos);
  }
  SUBCASE("section without paragraphs") {
    const std::string doc = R"({"heads": [{"number": 1, "name": "A", "sections": [
        {"pos": "verb", "paragraphs": []}]}]})";
    CHECK(ErrorOf(doc).find("no paragraphs") != std::string::npos);
  }
}

TEST_CASE("lookup") {
  const ThesaurusIndex& index = FixtureIndex();
  CHECK(index.Lookup("zzzz").empty());

  auto mother = index.Lookup("mother");
  REQUIRE(mother.size() == 1);
  CHECK(mother[0].head_number == 169);
  const Head* head = index.FindHead(169);
  const auto& group = head->sections[0].paragraphs[mother[0].paragraph_index]
                          .groups[mother[0].group_index]
                          .entries;
  CHECK(std::find(group.begin(), group.end(), "grandmother") != group.end());

  SUBCASE("ordering is head, pos, paragraph, group") {
    // "relative" is a noun and an adjective in head 9; "line" spans four heads.
    auto relative = index.Lookup("relative");
    REQUIRE(relative.size() == 2);
    CHECK(relative[0].pos == PartOfSpeech::kNoun);
    CHECK(relative[1].pos == PartOfSpeech::kAdjective);
    auto line = index.Lookup("line");
    for (std::size_t i = 1; i < line.size(); ++i) {
      CHECK(line[i - 1].head_number <= line[i].head_number);
    }
    auto train = index.Lookup("train");
    std::vector<int> heads;
    for (const auto& loc : train) heads.push_back(loc.head_number);
    CHECK(heads == std::vector<int>{71, 83, 265, 624, 786});
  }

  SUBCASE("multi-word entries are indexed whole") {
    CHECK_FALSE(index.Lookup("frame of reference").empty());
    CHECK(index.Lookup("frame").empty());
  }
}

TEST_CASE("thesaural relation") {
  const ThesaurusIndex& index = FixtureIndex();
  CHECK(index.ThesauralRelation("bank", "slope") == Relation::SameHead(209));
  CHECK_FALSE(index.ThesauralRelation("constant", "train"));
  CHECK_FALSE(index.ThesauralRelation("bank", "zzzz"));
  // "line" and "train" share heads 71 and 265; the smallest wins.
  CHECK(index.ThesauralRelation("line", "train") == Relation::SameHead(71));
  // "relative" is adjectival in 9 too, but the noun entry is what counts.
  CHECK(index.ThesauralRelation("relative", "regard") == Relation::SameHead(9));
}

TEST_CASE("similarity levels") {
  const ThesaurusIndex& index = FixtureIndex();
  CHECK(index.Similarity("mother", "grandmother") == SimilarityLevel::kSameGroup);
  CHECK(index.Similarity("mother", "mother") == SimilarityLevel::kSameGroup);
  CHECK(index.Similarity("bank", "zzzz") == SimilarityLevel::kNone);
  CHECK(index.Similarity("mother", "maternity") == SimilarityLevel::kSameParagraph);
  CHECK(index.Similarity("height", "bank") == SimilarityLevel::kSamePosSection);
  CHECK(index.Similarity("constant", "train") == SimilarityLevel::kSameHead);
  CHECK(index.Similarity("ocean", "clergy") == SimilarityLevel::kNone);
}

TEST_CASE("relation properties hold over every fixture lemma pair") {
  const ThesaurusIndex& index = FixtureIndex();
  const auto lemmas = index.Lemmas();
  for (const auto& a : lemmas) {
    for (const auto& b : lemmas) {
      const auto ab = index.ThesauralRelation(a, b);
      CHECK(ab == index.ThesauralRelation(b, a));
      CHECK(index.Similarity(a, b) == index.Similarity(b, a));
      if (index.NounHeads(a).empty() || index.NounHeads(b).empty()) CHECK_FALSE(ab);
      if (!ab) continue;
      CHECK(index.Similarity(a, b) <= SimilarityLevel::kSameHead);
      auto has_head = [&](const std::string& lemma) {
        for (const auto& loc : index.Lookup(lemma)) {
          if (loc.head_number == ab->head_number && loc.pos == PartOfSpeech::kNoun) return true;
        }
        return false;
      };
      CHECK(has_head(a));
      CHECK(has_head(b));
    }
  }
}

TEST_CASE("serialize and reload preserves every lookup") {
  const ThesaurusIndex& index = FixtureIndex();
  const ThesaurusIndex reloaded = ThesaurusIndex::LoadFromString(index.Serialize());
  CHECK(reloaded.Lemmas() == index.Lemmas());
  for (const auto& lemma : index.Lemmas()) {
    auto a = index.Lookup(lemma);
    auto b = reloaded.Lookup(lemma);
    CHECK(std::equal(a.begin(), a.end(), b.begin(), b.end()));
  }
  CHECK(reloaded.Serialize() == index.Serialize());
}

TEST_CASE("repeated loads give identical lookup order") {
  const std::string doc = testing::ReadFile(testing::DataPath("fixture_thesaurus.json"));
  const ThesaurusIndex first = ThesaurusIndex::LoadFromString(doc);
  const ThesaurusIndex second = ThesaurusIndex::LoadFromString(doc);
  for (const auto& lemma : first.Lemmas()) {
    auto a = first.Lookup(lemma);
    auto b = second.Lookup(lemma);
    CHECK(std::equal(a.begin(), a.end(), b.begin(), b.end()));
  }
}

TEST_CASE("keys are case-folded") {
  const ThesaurusIndex index = ThesaurusIndex::LoadFromString(
      R"({"heads": [{"number": 3, "name": "Place", "sections": [
          {"pos": "noun", "paragraphs": [{"groups": [["Rome", "city"]]}]}]}]})");
  CHECK(index.Contains("rome"));
  CHECK_FALSE(index.Contains("Rome"));
  CHECK(index.Lookup("rome")[0].entry == "Rome");
}

}  // namespace
}  // namespace lexchain
