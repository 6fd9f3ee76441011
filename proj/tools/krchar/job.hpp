#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace krchar::cli {

enum class Command { gch, ext, gamma, tensor, psi, verify };
enum class Format { plain, json, latex };

/// Raw command line, validated lazily by run() against the algebra.
struct JobSpec {
    Command command = Command::gch;
    std::string algebra;
    std::string weight;
    std::string other;
    std::string from;
    std::string to;
    std::optional<int> node;
    std::optional<int> j;
    int ell = 1;
    Format format = Format::plain;
    std::string mode = "fixed-psi";
    std::string suite = "all";
    std::optional<std::filesystem::path> cache_path;
};

enum ExitCode : int { ok = 0, verification_failed = 1, input_error = 2 };

struct ParseOutcome {
    std::optional<JobSpec> job;
    int exit_code = ok;
    std::string message; ///< help text or the parse error
};

ParseOutcome parse_args(const std::vector<std::string>& args);

int run(const JobSpec& job, std::ostream& out, std::ostream& err);

/// parse_args + run.
int main_entry(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace krchar::cli
