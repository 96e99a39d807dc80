#ifndef QH_CLI_HPP
#define QH_CLI_HPP

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qh/hypercenter.hpp"
#include "qh/perm_group.hpp"

namespace qh {

/**
 * Group definition format:
 *
 *     # comment
 *     degree 4
 *     (0 1 2 3)
 *     (0 2)
 *
 * One generator per line in cycle notation, `()` for the identity. Errors
 * carry the line number.
 */
PermGroup parse_group_file(std::string_view text);
PermGroup load_group_file(const std::filesystem::path& path);
std::string format_group_file(const PermGroup& g);

/// `smoke`, `standard` or `extended`. InputError for other names.
std::vector<CorpusEntry> builtin_corpus(std::string_view name);

/**
 * Corpus files hold one entry per line: `<id> <constructor> <args...>`.
 * Constructors: cyclic n, symmetric n, alternating n, dihedral <order>,
 * quaternion, sl2 p, elementary_abelian p rank, a5_wreath_c2,
 * file <path> (relative to the corpus file), product <id> <id>.
 */
std::vector<CorpusEntry> parse_corpus_file(std::string_view text,
                                           const std::filesystem::path& base_dir = {});

struct CliConfig {
  std::string command;
  std::optional<std::string> class_selector;
  std::optional<std::string> corpus;
  std::vector<std::string> group_files;
  std::optional<std::uint64_t> enumeration_bound;
  std::optional<std::uint64_t> lattice_bound;
  std::optional<std::uint64_t> semidirect_bound;
  std::optional<std::string> output;
  bool timings = true;
  bool emit_generators = false;
  unsigned jobs = 1;
};

enum ExitCode : int {
  exit_ok = 0,
  exit_verification_failure = 1,
  exit_input_error = 2,
  exit_resource_bound = 3,
};

/// Executes one command, writing report lines to `out` (or the configured file) and diagnostics to `err`.
int run(const CliConfig& config, std::ostream& out, std::ostream& err);

/// Parses the command line and calls run().
int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace qh

#endif // QH_CLI_HPP
