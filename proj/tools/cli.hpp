#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace zetagap::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDomain = 2;
inline constexpr int kExitUsage = 64;
inline constexpr int kExitIo = 74;

/// Environment variable capping the sieve allocation, in bytes.
inline constexpr const char* kSieveBudgetEnv = "ZETAGAP_SIEVE_MAX_BYTES";

struct CommandInfo {
  std::string_view name;
  std::vector<std::string_view> operations;  // library operations the command invokes
};

const std::vector<CommandInfo>& commands();

/// Runs one command. args excludes the program name. Reports go to `out`
/// unless --output is given; errors go to `err` as a JSON object.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace zetagap::cli
