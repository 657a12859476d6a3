// synprobe command line: encode, decode, probe, eval and synth subcommands.

#ifndef SYNPROBE_CLI_H_
#define SYNPROBE_CLI_H_

#include <iosfwd>

namespace synprobe {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitData = 2;

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace synprobe

#endif  // SYNPROBE_CLI_H_
