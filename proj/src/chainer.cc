#include "lexchain/chainer.h"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>
#include <utility>

namespace lexchain {
namespace {

// Per-document lookups shared by every seed.
struct ChainContext {
  std::span<const Token> tokens;
  std::vector<std::span<const int>> noun_heads;  // parallel to tokens
  const ThesaurusIndex* index = nullptr;
  const ChainParams* params = nullptr;
};

ChainContext MakeContext(std::span<const Token> tokens, const ThesaurusIndex& index,
                         const ChainParams& params) {
  ChainContext context;
  context.tokens = tokens;
  context.index = &index;
  context.params = &params;
  context.noun_heads.reserve(tokens.size());
  for (const Token& token : tokens) {
    context.noun_heads.push_back(token.candidate ? index.NounHeads(token.lemma)
                                                 : std::span<const int>{});
  }
  return context;
}

bool Contains(std::span<const int> sorted, int value) {
  return std::binary_search(sorted.begin(), sorted.end(), value);
}

bool IsSubset(const std::vector<std::size_t>& small, const std::vector<std::size_t>& big) {
  return small.size() <= big.size() &&
         std::includes(big.begin(), big.end(), small.begin(), small.end());
}

// Grows one chain from tokens[seed_pos]; head < 0 means repetition only.
Chain GrowChain(const ChainContext& context, std::size_t seed_pos, int head) {
  const Token& seed = context.tokens[seed_pos];
  const auto gap = static_cast<std::size_t>(context.params->max_sentence_gap);
  Chain chain;
  chain.members.push_back({&seed, std::nullopt, std::nullopt});
  chain.seeds.push_back(seed.token_index);
  std::size_t last_sentence = seed.sentence_index;
  for (std::size_t j = seed_pos + 1; j < context.tokens.size(); ++j) {
    const Token& token = context.tokens[j];
    if (token.sentence_index > last_sentence + gap) break;
    if (!token.candidate) continue;
    const bool eligible = token.lemma == seed.lemma ||
                          (head >= 0 && Contains(context.noun_heads[j], head));
    if (!eligible) continue;
    chain.members.push_back(
        {&token, RelationBetween(token, seed, *context.index), seed.token_index});
    last_sentence = token.sentence_index;
  }
  return chain;
}

std::vector<Chain> ChainsForSeed(const ChainContext& context, std::size_t seed_pos) {
  const auto min_length = static_cast<std::size_t>(context.params->min_chain_length);
  std::vector<Chain> alternatives;
  const std::span<const int> heads = context.noun_heads[seed_pos];
  if (heads.empty()) {
    alternatives.push_back(GrowChain(context, seed_pos, -1));
  } else {
    for (int head : heads) alternatives.push_back(GrowChain(context, seed_pos, head));
  }
  std::erase_if(alternatives,
                [min_length](const Chain& chain) { return chain.members.size() < min_length; });

  // Keep only maximal alternatives; the earliest Head wins among equals.
  std::vector<std::vector<std::size_t>> occurrences;
  occurrences.reserve(alternatives.size());
  for (const Chain& chain : alternatives) occurrences.push_back(chain.TokenIndices());
  std::vector<Chain> maximal;
  for (std::size_t i = 0; i < alternatives.size(); ++i) {
    bool dominated = false;
    for (std::size_t j = 0; j < alternatives.size() && !dominated; ++j) {
      if (i == j || !IsSubset(occurrences[i], occurrences[j])) continue;
      dominated = occurrences[i].size() < occurrences[j].size() || j < i;
    }
    if (!dominated) {
      alternatives[i].score = ScoreChain(alternatives[i]);
      maximal.push_back(std::move(alternatives[i]));
    }
  }
  return maximal;
}

// Collapses chains with identical occurrence sets, merging their seeds.
std::vector<Chain> CollapseDuplicates(std::vector<Chain> chains) {
  std::map<std::vector<std::size_t>, std::size_t> seen;
  std::vector<Chain> unique;
  for (Chain& chain : chains) {
    auto [it, inserted] = seen.emplace(chain.TokenIndices(), unique.size());
    if (inserted) {
      unique.push_back(std::move(chain));
      continue;
    }
    auto& seeds = unique[it->second].seeds;
    seeds.insert(seeds.end(), chain.seeds.begin(), chain.seeds.end());
    std::sort(seeds.begin(), seeds.end());
    seeds.erase(std::unique(seeds.begin(), seeds.end()), seeds.end());
  }
  return unique;
}

std::vector<std::size_t> CandidatePositions(std::span<const Token> tokens) {
  std::vector<std::size_t> positions;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    if (tokens[i].candidate) positions.push_back(i);
  }
  return positions;
}

std::vector<Chain> FinishBuild(std::vector<std::vector<Chain>> per_seed) {
  std::vector<Chain> all;
  for (auto& chains : per_seed) {
    for (Chain& chain : chains) all.push_back(std::move(chain));
  }
  all = CollapseDuplicates(std::move(all));
  SortChains(all);
  return all;
}

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
  }
  std::size_t Find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  bool Union(std::size_t a, std::size_t b) {
    a = Find(a);
    b = Find(b);
    if (a == b) return false;
    if (b < a) std::swap(a, b);
    parent_[b] = a;
    return true;
  }

 private:
  std::vector<std::size_t> parent_;
};

// One round of pairwise merging; returns false when nothing was merged.
bool MergeRound(std::vector<Chain>& chains, std::size_t min_shared) {
  std::unordered_map<std::size_t, std::vector<std::size_t>> postings;
  for (std::size_t c = 0; c < chains.size(); ++c) {
    for (const ChainMember& member : chains[c].members) {
      postings[member.token->token_index].push_back(c);
    }
  }
  DisjointSets sets(chains.size());
  bool merged = false;
  std::unordered_map<std::size_t, std::size_t> shared;
  for (std::size_t c = 0; c < chains.size(); ++c) {
    shared.clear();
    for (const ChainMember& member : chains[c].members) {
      for (std::size_t other : postings[member.token->token_index]) {
        if (other > c) ++shared[other];
      }
    }
    for (const auto& [other, count] : shared) {
      if (count >= min_shared && sets.Union(c, other)) merged = true;
    }
  }
  if (!merged) return false;

  // Sources are visited in chain order, which SortChains makes
  // first-token order; the first record seen for a token is kept.
  std::map<std::size_t, std::vector<std::size_t>> groups;
  for (std::size_t c = 0; c < chains.size(); ++c) groups[sets.Find(c)].push_back(c);
  std::vector<Chain> next;
  next.reserve(groups.size());
  for (const auto& [root, members] : groups) {
    if (members.size() == 1) {
      next.push_back(std::move(chains[root]));
      continue;
    }
    std::map<std::size_t, ChainMember> by_token;
    Chain combined;
    for (std::size_t c : members) {
      for (const ChainMember& member : chains[c].members) {
        by_token.emplace(member.token->token_index, member);
      }
      combined.seeds.insert(combined.seeds.end(), chains[c].seeds.begin(), chains[c].seeds.end());
    }
    for (auto& [token_index, member] : by_token) combined.members.push_back(member);
    std::sort(combined.seeds.begin(), combined.seeds.end());
    combined.seeds.erase(std::unique(combined.seeds.begin(), combined.seeds.end()),
                         combined.seeds.end());
    combined.score = ScoreChain(combined);
    next.push_back(std::move(combined));
  }
  SortChains(next);
  chains = std::move(next);
  return true;
}

}  // namespace

void ChainParams::Validate() const {
  if (max_sentence_gap < 1) throw std::invalid_argument("max_sentence_gap must be >= 1");
  if (transitivity_degree != 0 && transitivity_degree != 1) {
    throw std::invalid_argument("transitivity_degree must be 0 or 1");
  }
  if (min_chain_length < 2) throw std::invalid_argument("min_chain_length must be >= 2");
  if (min_shared_occurrences < 1) {
    throw std::invalid_argument("min_shared_occurrences must be >= 1");
  }
}

std::vector<std::size_t> Chain::TokenIndices() const {
  std::vector<std::size_t> indices;
  indices.reserve(members.size());
  for (const ChainMember& member : members) indices.push_back(member.token->token_index);
  return indices;
}

std::vector<std::string> Chain::Lemmas() const {
  std::vector<std::string> lemmas;
  lemmas.reserve(members.size());
  for (const ChainMember& member : members) lemmas.push_back(member.token->lemma);
  return lemmas;
}

std::optional<Relation> RelationBetween(const Token& a, const Token& b,
                                        const ThesaurusIndex& index) {
  if (a.lemma == b.lemma) return Relation::Repetition();
  return index.ThesauralRelation(a.lemma, b.lemma);
}

ChainScore ScoreChain(const Chain& chain) {
  if (chain.members.empty()) throw std::invalid_argument("cannot score an empty chain");
  ChainScore score;
  score.length = static_cast<std::int64_t>(chain.members.size());
  std::unordered_set<std::string_view> lemmas;
  std::size_t first = chain.members.front().token->sentence_index;
  std::size_t last = first;
  for (const ChainMember& member : chain.members) {
    lemmas.insert(member.token->lemma);
    first = std::min(first, member.token->sentence_index);
    last = std::max(last, member.token->sentence_index);
  }
  score.reiteration = score.length - static_cast<std::int64_t>(lemmas.size());
  score.span = static_cast<std::int64_t>(last - first + 1);
  score.density = Rational(score.length, score.span);
  score.strength = Rational(score.length + score.reiteration) + score.density;
  return score;
}

bool StrongerThan(const Chain& a, const Chain& b) {
  if (a.score.strength != b.score.strength) return a.score.strength > b.score.strength;
  if (a.first_token() != b.first_token()) return a.first_token() < b.first_token();
  if (a.members.size() != b.members.size()) return a.members.size() < b.members.size();
  auto lemma_less = [](const ChainMember& x, const ChainMember& y) {
    return x.token->lemma < y.token->lemma;
  };
  auto lemma_greater = [](const ChainMember& x, const ChainMember& y) {
    return y.token->lemma < x.token->lemma;
  };
  if (std::lexicographical_compare(a.members.begin(), a.members.end(), b.members.begin(),
                                   b.members.end(), lemma_less)) {
    return true;
  }
  if (std::lexicographical_compare(a.members.begin(), a.members.end(), b.members.begin(),
                                   b.members.end(), lemma_greater)) {
    return false;
  }
  return a.TokenIndices() < b.TokenIndices();
}

void SortChains(std::vector<Chain>& chains) {
  std::sort(chains.begin(), chains.end(), [](const Chain& a, const Chain& b) {
    if (a.first_token() != b.first_token()) return a.first_token() < b.first_token();
    return StrongerThan(a, b);
  });
}

std::vector<Chain> BuildChainsForCandidate(const Token& seed, std::span<const Token> tokens,
                                           const ThesaurusIndex& index,
                                           const ChainParams& params) {
  params.Validate();
  if (!seed.candidate) return {};
  auto it = std::lower_bound(
      tokens.begin(), tokens.end(), seed.token_index,
      [](const Token& token, std::size_t value) { return token.token_index < value; });
  if (it == tokens.end() || it->token_index != seed.token_index) {
    throw std::invalid_argument("seed is not part of the token list");
  }
  const ChainContext context = MakeContext(tokens, index, params);
  return ChainsForSeed(context, static_cast<std::size_t>(it - tokens.begin()));
}

std::vector<Chain> BuildAllChainsSerial(std::span<const Token> tokens,
                                        const ThesaurusIndex& index, const ChainParams& params) {
  params.Validate();
  const ChainContext context = MakeContext(tokens, index, params);
  const std::vector<std::size_t> seeds = CandidatePositions(tokens);
  std::vector<std::vector<Chain>> per_seed(seeds.size());
  for (std::size_t i = 0; i < seeds.size(); ++i) per_seed[i] = ChainsForSeed(context, seeds[i]);
  return FinishBuild(std::move(per_seed));
}

std::vector<Chain> BuildAllChains(std::span<const Token> tokens, const ThesaurusIndex& index,
                                  const ChainParams& params) {
  params.Validate();
  const ChainContext context = MakeContext(tokens, index, params);
  const std::vector<std::size_t> seeds = CandidatePositions(tokens);
  std::vector<std::vector<Chain>> per_seed(seeds.size());
  const auto n = static_cast<std::int64_t>(seeds.size());
#pragma omp parallel for schedule(dynamic, 16)
  for (std::int64_t i = 0; i < n; ++i) {
    per_seed[static_cast<std::size_t>(i)] =
        ChainsForSeed(context, seeds[static_cast<std::size_t>(i)]);
  }
  return FinishBuild(std::move(per_seed));
}

std::vector<Chain> MergeChains(std::vector<Chain> chains, const ChainParams& params) {
  params.Validate();
  SortChains(chains);
  if (params.transitivity_degree == 0) return chains;
  const auto min_shared = static_cast<std::size_t>(params.min_shared_occurrences);
  while (MergeRound(chains, min_shared)) {
  }
  return chains;
}

std::vector<Chain> SelectStrongest(std::vector<Chain> chains, const ChainParams& params) {
  params.Validate();
  const auto min_length = static_cast<std::size_t>(params.min_chain_length);
  std::erase_if(chains, [min_length](const Chain& c) { return c.members.size() < min_length; });

  // Strongest per seed: greedy in preference order, a chain survives only if
  // none of its seeds was claimed by a stronger one.
  std::sort(chains.begin(), chains.end(), StrongerThan);
  std::unordered_set<std::size_t> claimed;
  std::vector<Chain> per_seed;
  for (Chain& chain : chains) {
    const bool free = std::none_of(chain.seeds.begin(), chain.seeds.end(),
                                   [&](std::size_t s) { return claimed.count(s) != 0; });
    if (!free) continue;
    claimed.insert(chain.seeds.begin(), chain.seeds.end());
    per_seed.push_back(std::move(chain));
  }

  // Subset elimination, largest first so every container is kept before
  // the chains it contains are tested.
  std::stable_sort(per_seed.begin(), per_seed.end(), [](const Chain& a, const Chain& b) {
    return a.members.size() > b.members.size();
  });
  std::vector<Chain> kept;
  std::vector<std::vector<std::size_t>> kept_tokens;
  std::unordered_map<std::size_t, std::vector<std::size_t>> kept_by_token;
  for (Chain& chain : per_seed) {
    std::vector<std::size_t> tokens = chain.TokenIndices();
    bool contained = false;
    auto posting = kept_by_token.find(tokens.front());
    if (posting != kept_by_token.end()) {
      for (std::size_t k : posting->second) {
        if (IsSubset(tokens, kept_tokens[k])) {
          contained = true;
          break;
        }
      }
    }
    if (contained) continue;
    for (std::size_t t : tokens) kept_by_token[t].push_back(kept.size());
    kept_tokens.push_back(std::move(tokens));
    kept.push_back(std::move(chain));
  }
  SortChains(kept);
  return kept;
}

std::vector<Chain> SelectAndMerge(std::vector<Chain> built, const ChainParams& params) {
  std::vector<Chain> selected = SelectStrongest(std::move(built), params);
  if (params.transitivity_degree == 0) return selected;
  return SelectStrongest(MergeChains(std::move(selected), params), params);
}

std::vector<Chain> ChainTokens(std::span<const Token> tokens, const ThesaurusIndex& index,
                               const ChainParams& params, Execution execution) {
  std::vector<Chain> built = execution == Execution::kParallel
                                 ? BuildAllChains(tokens, index, params)
                                 : BuildAllChainsSerial(tokens, index, params);
  return SelectAndMerge(std::move(built), params);
}

}  // namespace lexchain
