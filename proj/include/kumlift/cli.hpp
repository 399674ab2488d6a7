#pragma once

#include <filesystem>
#include <map>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "kumlift/cohomology.hpp"
#include "kumlift/kummer.hpp"

namespace kumlift::cli {

/// Thrown for malformed or inconsistent problem documents.
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Op { check_sp, check_hodge, check_lift, kummer_split, pd_square, restrict };

std::string op_name(Op op);

/// One task with every operand already resolved.
struct Task {
  std::string id;
  Op op;
  std::string map_label;
  std::string hom_label;
  std::string hom2_label;
  long n = 0;
  bool on_cover = false;
};

struct Problem {
  std::map<std::string, ComplexTorus> tori;
  std::map<std::string, TorusHom> homs;
  std::map<std::string, SymplecticMap> symplectic;
  std::map<std::string, BlockIso> mukai;
  std::vector<Task> tasks;
};

/// Parses and validates a problem document. Throws ValidationError.
Problem parse_problem(const std::string& text);

struct RunOptions {
  unsigned parallel = 1;
  bool witness_only = false;
  bool canonical = false;
};

struct RunOutcome {
  int exit_code = 0;
  std::string output;
  std::string diagnostics;
};

/// Exit codes: 0 every task passes, 1 some task fails or has no result,
/// 2 the document is malformed or invalid.
RunOutcome run_text(const std::string& text, const RunOptions& options);
RunOutcome run_file(const std::filesystem::path& path, const RunOptions& options);

struct CorpusFile {
  std::string name;
  std::string content;
};

/// Worked-example documents and their canonical verdicts (<name>.expected.json).
std::vector<CorpusFile> demo_corpus();
/// Writes demo_corpus() into dir. Throws std::runtime_error if unwritable.
std::vector<std::filesystem::path> write_demo(const std::filesystem::path& dir);

}  // namespace kumlift::cli
