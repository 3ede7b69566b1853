#include "lexchain/cli.h"

#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "lexchain/chainer.h"
#include "lexchain/report.h"
#include "lexchain/textprep.h"
#include "lexchain/thesaurus.h"

namespace lexchain {
namespace {

struct Options {
  std::string thesaurus_path;
  std::string stoplist_path;
  std::vector<std::string> inputs;
  std::vector<std::string> words;
  ChainParams params;
  std::string format = "json";
};

class CliFailure : public std::runtime_error {
 public:
  CliFailure(int code, const std::string& message) : std::runtime_error(message), code_(code) {}
  int code() const { return code_; }

 private:
  int code_;
};

ThesaurusIndex LoadThesaurus(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw CliFailure(kExitUnreadable, "cannot read thesaurus " + path);
  try {
    return ThesaurusIndex::Load(in);
  } catch (const ThesaurusError& e) {
    throw CliFailure(kExitBadThesaurus, "malformed thesaurus " + path + ": " + e.what());
  }
}

std::string ReadInput(const std::string& path, std::istream& in) {
  if (path == "-") {
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  }
  std::ifstream file(path, std::ios::binary);
  if (!file) throw CliFailure(kExitUnreadable, "cannot read input " + path);
  std::string text((std::istreambuf_iterator<char>(file)), std::istreambuf_iterator<char>());
  if (file.bad()) throw CliFailure(kExitUnreadable, "read error on " + path);
  return text;
}

int CmdRun(const Options& options, std::istream& in, std::ostream& out) {
  try {
    options.params.Validate();
  } catch (const std::invalid_argument& e) {
    throw CliFailure(kExitBadFlags, e.what());
  }
  const ThesaurusIndex index = LoadThesaurus(options.thesaurus_path);
  StopList stoplist;
  {
    std::ifstream file(options.stoplist_path);
    if (!file) throw CliFailure(kExitUnreadable, "cannot read stop list " + options.stoplist_path);
    stoplist = StopList::Load(file);
  }

  std::vector<std::string> inputs = options.inputs;
  if (inputs.empty()) inputs.push_back("-");
  std::vector<std::string> texts;
  texts.reserve(inputs.size());
  for (const std::string& path : inputs) texts.push_back(ReadInput(path, in));

  // Documents are independent; chaining inside each one stays serial so the
  // parallel loop is not nested.
  std::vector<std::string> reports(texts.size());
  const bool json = options.format == "json";
  const auto n = static_cast<std::int64_t>(texts.size());
#pragma omp parallel for schedule(dynamic, 1) if (n > 1)
  for (std::int64_t i = 0; i < n; ++i) {
    const auto k = static_cast<std::size_t>(i);
    const DocumentResult result =
        AnalyzeDocument(inputs[k], texts[k], index, stoplist, options.params,
                        n > 1 ? Execution::kSerial : Execution::kParallel);
    reports[k] = json ? ReportJson(result) + "\n" : ReportText(result);
  }
  for (std::size_t i = 0; i < reports.size(); ++i) {
    if (!json && i > 0) out << "\n";
    out << reports[i];
  }
  return kExitOk;
}

int CmdLookup(const Options& options, std::ostream& out) {
  const ThesaurusIndex index = LoadThesaurus(options.thesaurus_path);
  const std::string lemma = Normalize(options.words.at(0), index);
  const auto locations = index.Lookup(lemma);
  if (locations.empty()) {
    out << lemma << ": not found\n";
    return kExitNotFound;
  }
  out << "lemma: " << lemma << "\n";
  for (const EntryLocation& location : locations) {
    out << "head " << location.head_number << ' ' << index.FindHead(location.head_number)->name
        << " / " << PosName(location.pos) << " / paragraph " << location.paragraph_index
        << " / group " << location.group_index << "\n";
  }
  return kExitOk;
}

int CmdRelate(const Options& options, std::ostream& out) {
  const ThesaurusIndex index = LoadThesaurus(options.thesaurus_path);
  const std::string a = Normalize(options.words.at(0), index);
  const std::string b = Normalize(options.words.at(1), index);
  out << "lemmas: " << a << ", " << b << "\n";
  std::optional<Relation> relation =
      a == b ? std::optional<Relation>(Relation::Repetition()) : index.ThesauralRelation(a, b);
  const SimilarityLevel level = index.Similarity(a, b);
  if (relation) {
    out << "relation: " << FormatRelation(*relation) << "\n";
    out << "level: " << SimilarityLevelName(level) << "\n";
    return kExitOk;
  }
  out << "no relation\n";
  out << "level: " << SimilarityLevelName(level) << "\n";
  for (int head : index.SharedHeads(a, b)) {
    out << "note: non-noun co-head at head " << head << ' ' << index.FindHead(head)->name
        << " (chaining uses noun sections only)\n";
  }
  return kExitNotFound;
}

}  // namespace

int RunCli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
           std::ostream& err) {
  Options options;
  CLI::App app{"Build lexical chains with a Roget-style thesaurus", "lexchain"};
  app.require_subcommand(1);

  auto add_thesaurus = [&options](CLI::App* command) {
    command->add_option("--thesaurus", options.thesaurus_path, "Thesaurus JSON file")
        ->required();
  };

  CLI::App* run = app.add_subcommand("run", "Chain one or more documents");
  add_thesaurus(run);
  run->add_option("--stoplist", options.stoplist_path, "Stop list, one word per line")
      ->required();
  run->add_option("--gap", options.params.max_sentence_gap,
                  "Sentences without an addition before a chain closes")
      ->capture_default_str();
  run->add_option("--transitivity", options.params.transitivity_degree,
                  "Merge transitivity degree (0 or 1)")
      ->capture_default_str();
  run->add_option("--min-length", options.params.min_chain_length, "Minimum chain length")
      ->capture_default_str();
  run->add_option("--format", options.format, "Output format")
      ->check(CLI::IsMember({"json", "text"}))
      ->capture_default_str();
  run->add_option("inputs", options.inputs, "Input files, or - for standard input");

  CLI::App* lookup = app.add_subcommand("lookup", "List thesaurus locations of a word");
  add_thesaurus(lookup);
  lookup->add_option("word", options.words, "Word to look up")->required()->expected(1);

  CLI::App* relate = app.add_subcommand("relate", "Explain the relation between two words");
  add_thesaurus(relate);
  relate->add_option("words", options.words, "Two words")->required()->expected(2);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "lexchain: " << e.what() << "\n";
    return kExitBadFlags;
  }

  try {
    if (run->parsed()) return CmdRun(options, in, out);
    if (lookup->parsed()) return CmdLookup(options, out);
    return CmdRelate(options, out);
  } catch (const CliFailure& e) {
    err << "lexchain: " << e.what() << "\n";
    return e.code();
  } catch (const std::ios_base::failure& e) {
    err << "lexchain: " << e.what() << "\n";
    return kExitUnreadable;
  }
}

}  // namespace lexchain
