#ifndef LEXCHAIN_CHAINER_H_
#define LEXCHAIN_CHAINER_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "lexchain/rational.h"
#include "lexchain/textprep.h"
#include "lexchain/thesaurus.h"

namespace lexchain {

struct ChainParams {
  int max_sentence_gap = 5;
  int transitivity_degree = 1;  // 0 disables merging
  int min_chain_length = 2;
  // Chains are merged only when they have at least this many token
  // occurrences in common.
  int min_shared_occurrences = 2;

  // Throws std::invalid_argument naming the offending field.
  void Validate() const;
};

struct ChainMember {
  const Token* token = nullptr;  // points into the document's token list
  std::optional<Relation> admitted_by;       // empty for a seed
  std::optional<std::size_t> linked_to;      // token_index of the admitting member
};

struct ChainScore {
  std::int64_t length = 0;
  std::int64_t reiteration = 0;  // length minus distinct lemmas
  std::int64_t span = 0;         // sentences from first to last member, inclusive
  Rational density;              // length / span
  Rational strength;             // length + reiteration + density

  friend bool operator==(const ChainScore&, const ChainScore&) = default;
};

struct Chain {
  std::vector<ChainMember> members;  // document order
  std::vector<std::size_t> seeds;    // token_index of each generating candidate, ascending
  ChainScore score;

  std::size_t first_token() const { return members.front().token->token_index; }
  std::vector<std::size_t> TokenIndices() const;
  std::vector<std::string> Lemmas() const;
};

// Repetition when the lemmas match, otherwise the noun-only thesaural relation.
std::optional<Relation> RelationBetween(const Token& a, const Token& b,
                                        const ThesaurusIndex& index);

ChainScore ScoreChain(const Chain& chain);

// Strict "a is preferred to b": strength, then earlier first token, fewer
// members, smaller lemma sequence, smaller token-index sequence.
bool StrongerThan(const Chain& a, const Chain& b);

// Chains grown forward from `seed`, one per noun Head of the seed lemma (or a
// single repetition chain when it has none). Each chain admits only tokens
// sharing its Head with the seed and closes once more than max_sentence_gap
// sentences pass without an addition. Alternatives that are shorter than
// min_chain_length, duplicated, or contained in another are dropped.
// `tokens` must be ordered by token_index and contain `seed`.
std::vector<Chain> BuildChainsForCandidate(const Token& seed, std::span<const Token> tokens,
                                           const ThesaurusIndex& index,
                                           const ChainParams& params);

// Union over every candidate seed, ordered by first token then strength.
// The plain version runs seeds in parallel with OpenMP; the serial version is
// the reference it is tested against.
std::vector<Chain> BuildAllChains(std::span<const Token> tokens, const ThesaurusIndex& index,
                                  const ChainParams& params);
std::vector<Chain> BuildAllChainsSerial(std::span<const Token> tokens,
                                        const ThesaurusIndex& index, const ChainParams& params);

// Unions chains sharing at least min_shared_occurrences tokens until no
// such pair remains. Identity and seeds of each member come from the source
// chain with the earliest first token. Returns the input (sorted) when
// transitivity_degree is 0.
std::vector<Chain> MergeChains(std::vector<Chain> chains, const ChainParams& params);

// Keeps the strongest chain per seed, then drops chains whose occurrences are
// contained in a kept chain. Reads the stored score; does not rescore.
std::vector<Chain> SelectStrongest(std::vector<Chain> chains, const ChainParams& params);

// Sorts by first token, then StrongerThan.
void SortChains(std::vector<Chain>& chains);

enum class Execution { kParallel, kSerial };

// build -> select -> merge -> select.
std::vector<Chain> ChainTokens(std::span<const Token> tokens, const ThesaurusIndex& index,
                               const ChainParams& params,
                               Execution execution = Execution::kParallel);

// The steps after chain construction, shared with test oracles.
std::vector<Chain> SelectAndMerge(std::vector<Chain> built, const ChainParams& params);

}  // namespace lexchain

#endif  // LEXCHAIN_CHAINER_H_
