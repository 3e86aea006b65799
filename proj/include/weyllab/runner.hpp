#pragma once

namespace weyllab {

/// CLI entry: weyllab <verify|fields|observables|waveform|separation>
///            --config <path> [--out <dir>] [--order 2|4] [--step h]
/// Exit codes: 0 success/pass, 1 verification failure, 2 configuration or
/// usage error.
int run(int argc, const char* const* argv);

} // namespace weyllab
