#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "serialize.hpp"

namespace gsp4h::cli {

inline constexpr int kSchemaVersion = 1;

enum class Format { json, text, dot };
Format parse_format(const std::string& s);

enum class Status { ok = 0, invalid = 2, degenerate = 3 };
const char* to_string(Status s);
int exit_code(Status s);
Status worst(Status x, Status y);
Status status_of(ErrorKind k);

struct Options {
  Format format = Format::json;
  bool symbolic = false;
  std::optional<std::uint64_t> seed;
  long count = 100;
  // Positional arguments after the command (socle kind and w).
  std::vector<std::string> args;
};

struct Outcome {
  Status status = Status::ok;
  json report;
};

const std::vector<std::string>& commands();

Outcome dispatch(const std::string& command, const json& doc, const Options& opt);

// Each item is {"command": ..., "input": {...}, "symbolic"?: bool}.
std::vector<Outcome> batch(const json& items, const Options& opt);

// Batch document of count recover items at random valid (a, b).
json sweep(std::uint64_t seed, long count);

std::string render(const Outcome& o, Format f);

// Full command-line entry point; returns the process exit code.
int run(const std::vector<std::string>& argv, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace gsp4h::cli
