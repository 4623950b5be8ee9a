// runner.hpp: command-line entry point: run, validate, list-experiments

#pragma once

namespace tlagauge {

// Exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitSchema = 2;
inline constexpr int kExitNumerical = 3;
inline constexpr int kExitIo = 4;

int run_cli(int argc, char** argv);

} // namespace tlagauge
