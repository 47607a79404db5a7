#pragma once

// The laxlin command line as a library: run() parses arguments, executes one
// subcommand and writes a JSON (or text) report. Exit codes: 0 pass,
// 1 fail or not established, 2 input error.

#include <iosfwd>
#include <string>
#include <vector>

namespace laxlin {

/// `args` excludes the program name. Relative input paths resolve against
/// `base_dir` when it is non-empty.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, std::istream& in,
        const std::string& base_dir = "");

/// 0 for "pass", 1 for "fail" and "not-established".
int exit_code(const std::string& status);

/// Writes every bundled schema into `dir`; returns the paths written.
std::vector<std::string> emit_schemas(const std::string& dir);

struct GoldenOutcome {
  std::string name;
  bool ok = false;
  std::string detail;  ///< first differing line, or the error
};

/// Replays every case of `<data_dir>/golden/manifest.json` with inputs
/// relative to `data_dir` and compares stdout and the exit code with the
/// stored golden file. With `update`, rewrites the golden files instead.
std::vector<GoldenOutcome> check_goldens(const std::string& data_dir, bool update);

struct CorpusOutcome {
  std::string file;
  bool ok = false;
  std::string detail;
};

/// Schema-validates and loads every JSON file under `<data_dir>/examples`.
std::vector<CorpusOutcome> validate_corpus(const std::string& data_dir);

}  // namespace laxlin
