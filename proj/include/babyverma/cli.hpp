#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "babyverma/rcrit.hpp"

namespace bv::cli {

enum ExitCode { kPass = 0, kFalsified = 1, kConfig = 2, kResource = 3 };

struct RunConfig {
  std::string command;
  std::string type;
  int p = 0;
  int e = 1;
  int max_rank = 4;
  std::string I;       // 1-based simple indices, comma separated
  std::string lambda;  // field elements, comma separated
  std::string chi_h;   // field elements, comma separated
  std::string chi_f;   // token:value pairs, e.g. "10:1"
  bool oracle = false;
  std::uint64_t size_bound = 20000;
  std::uint64_t seed = 0x5eed;
  int jobs = 1;
  std::string out;
  // verify
  std::string checks = "all";
  std::string types;
  std::string primes;
  int ranks = 4;
  // export
  std::string what = "roots";
  std::string label;
};

std::vector<int> parse_I(const RootSystem& sys, std::string_view text);
Weight parse_lambda(const Field& F, int rank, std::string_view text);
Character parse_chi(const Field& F, const RootSystem& sys, std::string_view chi_h, std::string_view chi_f);
// Validates every hypothesis of the configuration.
InductionContext make_context(const RunConfig& cfg);

std::string csv_header();
std::string csv_row(const RunConfig& cfg, const InductionContext& ctx, const Evaluation& ev);

// Names accepted by `verify --check`.
const std::vector<std::string>& check_names();

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace bv::cli
