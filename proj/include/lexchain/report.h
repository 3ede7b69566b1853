#ifndef LEXCHAIN_REPORT_H_
#define LEXCHAIN_REPORT_H_

#include <string>
#include <string_view>
#include <vector>

#include "lexchain/chainer.h"
#include "lexchain/textprep.h"
#include "lexchain/thesaurus.h"

namespace lexchain {

// A processed document. Chains point into `text.tokens`, so the result is
// move-only.
struct DocumentResult {
  std::string id;
  PreparedText text;
  std::vector<Chain> chains;

  DocumentResult() = default;
  DocumentResult(DocumentResult&&) = default;
  DocumentResult& operator=(DocumentResult&&) = default;
  DocumentResult(const DocumentResult&) = delete;
  DocumentResult& operator=(const DocumentResult&) = delete;
};

DocumentResult AnalyzeDocument(std::string id, std::string_view text,
                               const ThesaurusIndex& index, const StopList& stoplist,
                               const ChainParams& params,
                               Execution execution = Execution::kParallel);

// One compact JSON object, no trailing newline.
std::string ReportJson(const DocumentResult& result);

// Human-readable listing, ending in a newline.
std::string ReportText(const DocumentResult& result);

}  // namespace lexchain

#endif  // LEXCHAIN_REPORT_H_
