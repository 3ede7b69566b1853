#include "oracle.h"

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <stdexcept>
#include <string>

namespace lexchain::testing {
namespace {

using Mask = std::uint64_t;

std::map<std::string, std::set<int>> NounHeadsByWalking(const ThesaurusIndex& index) {
  std::map<std::string, std::set<int>> heads;
  for (const Head& head : index.heads()) {
    for (const PosSection& section : head.sections) {
      if (section.pos != PartOfSpeech::kNoun) continue;
      for (const Paragraph& paragraph : section.paragraphs) {
        for (const SemicolonGroup& group : paragraph.groups) {
          for (const std::string& entry : group.entries) heads[FoldCase(entry)].insert(head.number);
        }
      }
    }
  }
  return heads;
}

struct Problem {
  std::span<const Token> tokens;
  std::vector<std::set<int>> heads;  // per token
  std::size_t gap = 0;
};

bool Valid(const Problem& problem, Mask set) {
  std::vector<std::size_t> members;
  for (std::size_t i = 0; i < problem.tokens.size(); ++i) {
    if (set & (Mask{1} << i)) members.push_back(i);
  }
  if (members.empty()) return false;
  for (std::size_t m : members) {
    if (!problem.tokens[m].candidate) return false;
  }
  for (std::size_t k = 1; k < members.size(); ++k) {
    if (problem.tokens[members[k]].sentence_index >
        problem.tokens[members[k - 1]].sentence_index + problem.gap) {
      return false;
    }
  }
  bool same_lemma = true;
  std::set<int> common = problem.heads[members[0]];
  for (std::size_t m : members) {
    same_lemma = same_lemma && problem.tokens[m].lemma == problem.tokens[members[0]].lemma;
    std::set<int> next;
    std::set_intersection(common.begin(), common.end(), problem.heads[m].begin(),
                          problem.heads[m].end(), std::inserter(next, next.begin()));
    common = std::move(next);
  }
  return same_lemma || !common.empty();
}

// Depth-first over "next member" choices. A set whose key has died cannot be
// revived by adding members, so those branches are cut.
void Enumerate(const Problem& problem, Mask set, std::size_t last, std::vector<Mask>& out) {
  out.push_back(set);
  for (std::size_t next = last + 1; next < problem.tokens.size(); ++next) {
    if (problem.tokens[next].sentence_index > problem.tokens[last].sentence_index + problem.gap) {
      break;
    }
    const Mask extended = set | (Mask{1} << next);
    if (Valid(problem, extended)) Enumerate(problem, extended, next, out);
  }
}

}  // namespace

std::vector<Chain> BruteForceChains(std::span<const Token> tokens, const ThesaurusIndex& index,
                                    const ChainParams& params) {
  if (tokens.size() > 64) throw std::invalid_argument("brute force is limited to 64 tokens");
  const auto by_lemma = NounHeadsByWalking(index);
  Problem problem;
  problem.tokens = tokens;
  problem.gap = static_cast<std::size_t>(params.max_sentence_gap);
  for (const Token& token : tokens) {
    auto it = by_lemma.find(token.lemma);
    problem.heads.push_back(it == by_lemma.end() ? std::set<int>{} : it->second);
  }

  std::vector<Chain> chains;
  for (std::size_t seed = 0; seed < tokens.size(); ++seed) {
    if (!tokens[seed].candidate) continue;
    std::vector<Mask> sets;
    Enumerate(problem, Mask{1} << seed, seed, sets);
    for (Mask set : sets) {
      if (static_cast<int>(__builtin_popcountll(set)) < params.min_chain_length) continue;
      bool extendable = false;
      for (std::size_t t = seed + 1; t < tokens.size() && !extendable; ++t) {
        const Mask bit = Mask{1} << t;
        extendable = (set & bit) == 0 && Valid(problem, set | bit);
      }
      if (extendable) continue;
      Chain chain;
      chain.seeds.push_back(tokens[seed].token_index);
      for (std::size_t i = 0; i < tokens.size(); ++i) {
        if ((set & (Mask{1} << i)) == 0) continue;
        if (i == seed) {
          chain.members.push_back({&tokens[i], std::nullopt, std::nullopt});
        } else {
          chain.members.push_back({&tokens[i], RelationBetween(tokens[i], tokens[seed], index),
                                   tokens[seed].token_index});
        }
      }
      chain.score = ScoreChain(chain);
      chains.push_back(std::move(chain));
    }
  }
  return chains;
}

std::vector<Chain> BruteForcePipeline(std::span<const Token> tokens, const ThesaurusIndex& index,
                                      const ChainParams& params) {
  return SelectAndMerge(BruteForceChains(tokens, index, params), params);
}

}  // namespace lexchain::testing
