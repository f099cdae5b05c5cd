#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "qlcm/progression.hpp"
#include "qlcm/report.hpp"
#include "qlcm/verifier.hpp"

namespace qlcm::cli {

// Exit codes of the qlcm tool.
inline constexpr int kExitOk = 0;
inline constexpr int kExitCounterexample = 1;
inline constexpr int kExitUsage = 2;

// "a..b" (inclusive) or a single integer.
IntRange parse_range(std::string_view text);

Format parse_format(std::string_view text);

// Per-n rows for one progression. Columns are
//   n,u_n,lcm_bits,k_n,ell_n,C_ell_log2,t2_bound_log2,t3_bound_log2,t2_holds,t3_holds,slack_log2
// for q >= 2; at q = 1 the four t2/t3 columns become hf_bound_log2,hf_holds
// and k_n, ell_n, C_ell_log2 are empty. `full_values` appends the decimal
// lcm; `diagnostics` appends the two growth ratios.
Table build_table(const Progression& p, std::int64_t n_max, bool full_values = false, bool diagnostics = false);

// One row per (example, n) for 1 <= n <= n_max: example,n,lcm_bits,bound_log2,holds,slack_log2.
Table build_examples_table(std::int64_t n_max, bool full_values = false);

// Entry point shared by the executable and the tests. Returns the exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qlcm::cli
