#pragma once

#include <optional>
#include <string>
#include <vector>

#include "satake/verify.hpp"

namespace satake {

enum class OutputMode { Human, Json, Dot };

struct RunConfig {
  std::string command;  // dual-group, strata, qanalog, tensor, hecke, convolve-ic, satake, verify
  std::string action;   // hecke: mult
  std::string group = "GL2";  // preset name or root-datum file
  OutputMode output = OutputMode::Human;
  std::optional<std::int64_t> bound;
  std::vector<std::int64_t> q;

  bool extended = false;                  // dual-group
  std::string facet = "hyperspecial";     // strata
  std::string stratifying = "hyperspecial";
  std::string mu, lambda;                 // "(1,0)" or "(1,0);n"
  bool oracle = false;                    // hecke mult
  std::vector<std::string> ic;            // convolve-ic
  bool trace = false;
  std::string suite = "satake";           // verify
  unsigned threads = 1;
  HeckeProduct product;                   // verify: override for fault injection
};

struct RunResult {
  std::string output;  // stdout; on failure a machine-readable error
  int exit_code = 0;
};

RunResult run_command(const RunConfig& cfg);

/// "(1,0)" -> ((1,0), 0); "(1,0);-1" -> ((1,0), -1).
std::pair<Coweight, std::int64_t> parse_twisted_coweight(const std::string& text);

/// "2,3,5" -> {2, 3, 5}.
std::vector<std::int64_t> parse_int_list(const std::string& text);

}  // namespace satake
