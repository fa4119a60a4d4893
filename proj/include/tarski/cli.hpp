#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tarski/io.hpp"

namespace tarski::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInput = 2;
inline constexpr int kExitBound = 3;

struct Options {
  std::string command;  // "eq solve", "paradox chain", ...
  std::optional<std::size_t> bound_depth;
  std::optional<std::size_t> bound_length;
  std::optional<std::size_t> bound_pieces;
  bool strict_partition = false;
  std::optional<std::uint64_t> seed;
  bool timings = false;
};

struct Outcome {
  int exit_code = kExitOk;
  io::Json report;
};

/// Every supported command, in help order.
const std::vector<std::string>& commands();

/// Runs one command on the raw text of an input document.
Outcome run(const Options& options, std::string_view input);

std::string sha256_hex(std::string_view data);

/// Process entry point: parses argv, reads --input (or stdin), writes the
/// report to --output (or stdout) and returns the exit code.
int main(int argc, char** argv);

}  // namespace tarski::cli
