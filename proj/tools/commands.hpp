#pragma once

#include "json_io.hpp"

#include "folia/error.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace folia::cli {

using io::Json;

enum ExitCode : int {
  kOk = 0,
  kIoError = 1,
  kValidation = 2,
  kIndexDegeneracy = 3,
  kFieldExtension = 4,
  kInternalGuard = 5,
};

struct Options {
  std::uint64_t seed = 0;
  int max_depth = 64;
};

struct CommandResult {
  int exit_code = kOk;
  Json json;
  std::string text;
};

int exit_code_for(ErrorCode code);

/// Runs a command body, turning parse, library and IO errors into an error
/// report with the matching exit code.
CommandResult guarded(const std::function<CommandResult()>& body);

/// Accepts a foliation, a logarithmic form with "ambient_dim", or a corpus
/// entry whose payload defines a foliation.
ProjFoliation foliation_input(const Json& j);

CommandResult cmd_check(const Json& input, const Options& opts);
CommandResult cmd_degree(const Json& input, const Options& opts);
CommandResult cmd_singular(const Json& input, const Options& opts);
CommandResult cmd_bb(const Json& input, const Options& opts);
CommandResult cmd_reduce(const Json& input, const Options& opts);
CommandResult cmd_pullback(const Json& map, const Json& foliation, const Options& opts);
CommandResult cmd_riccati(const Json& input, const Options& opts);
CommandResult cmd_catalog(const Json& input, const Options& opts);

struct CorpusEntry {
  std::string name;
  std::string kind;  ///< pencil, degree1, log-arrangement, riccati, catalog, germ
  Json payload;
  Json expectations;
};

Json to_json(const CorpusEntry& e);
CorpusEntry entry_from_json(const Json& j);

/// The bundled corpus, built deterministically.
std::vector<CorpusEntry> build_corpus(const Options& opts);

/// Recomputes an entry and compares with its expectations.
CommandResult check_entry(const CorpusEntry& e, const Options& opts);

/// Writes NN_name.json per entry plus index.json. Returns the file names.
std::vector<std::string> write_corpus(const std::string& dir, const Options& opts);

/// Text rendering of a reduction tree.
std::string render_tree(const ReductionTree& t);

}  // namespace folia::cli
