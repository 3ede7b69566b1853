#include "lexchain/report.h"

#include <sstream>
#include <utility>

#include "json.hpp"

namespace lexchain {

DocumentResult AnalyzeDocument(std::string id, std::string_view text,
                               const ThesaurusIndex& index, const StopList& stoplist,
                               const ChainParams& params, Execution execution) {
  DocumentResult result;
  result.id = std::move(id);
  result.text = PrepareText(text, index, stoplist);
  result.chains = ChainTokens(result.text.tokens, index, params, execution);
  return result;
}

std::string ReportJson(const DocumentResult& result) {
  using nlohmann::ordered_json;
  ordered_json chains = ordered_json::array();
  for (const Chain& chain : result.chains) {
    ordered_json members = ordered_json::array();
    for (const ChainMember& member : chain.members) {
      ordered_json item;
      item["surface"] = member.token->surface;
      item["lemma"] = member.token->lemma;
      item["sentence_index"] = member.token->sentence_index;
      item["token_index"] = member.token->token_index;
      item["relation"] =
          member.admitted_by ? ordered_json(FormatRelation(*member.admitted_by)) : ordered_json();
      item["linked_to"] = member.linked_to ? ordered_json(*member.linked_to) : ordered_json();
      members.push_back(std::move(item));
    }
    ordered_json score;
    score["length"] = chain.score.length;
    score["reiteration"] = chain.score.reiteration;
    score["span"] = chain.score.span;
    score["density"] = chain.score.density.ToString();
    score["strength"] = chain.score.strength.ToString();
    ordered_json entry;
    entry["members"] = std::move(members);
    entry["score"] = std::move(score);
    chains.push_back(std::move(entry));
  }
  ordered_json report;
  report["document"] = result.id;
  report["sentences"] = result.text.sentences.size();
  report["candidates"] = result.text.candidate_count();
  report["chains"] = std::move(chains);
  return report.dump();
}

std::string ReportText(const DocumentResult& result) {
  std::ostringstream out;
  out << "document: " << result.id << "\n";
  out << "sentences: " << result.text.sentences.size() << "\n";
  out << "candidates: " << result.text.candidate_count() << "\n";
  out << "candidate words:";
  for (const Token& token : result.text.tokens) {
    if (token.candidate) out << ' ' << token.surface;
  }
  out << "\n";
  out << "chains: " << result.chains.size() << "\n";
  for (std::size_t i = 0; i < result.chains.size(); ++i) {
    const ChainScore& score = result.chains[i].score;
    out << "chain " << i + 1 << ": length " << score.length << ", reiteration "
        << score.reiteration << ", span " << score.span << ", density "
        << score.density.ToString() << ", strength " << score.strength.ToString() << "\n ";
    for (const ChainMember& member : result.chains[i].members) {
      out << ' ' << member.token->surface << '@' << member.token->sentence_index;
    }
    out << "\n";
  }
  return out.str();
}

}  // namespace lexchain
