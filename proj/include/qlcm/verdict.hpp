#pragma once

#include <string>
#include <utility>

namespace qlcm {

// Outcome of a mechanical check. `detail` names the first counterexample
// when the check fails, and is empty otherwise.
struct Verdict {
  bool holds = true;
  std::string detail;

  static Verdict pass() { return {}; }
  static Verdict fail(std::string why) { return {false, std::move(why)}; }

  explicit operator bool() const noexcept { return holds; }
};

}  // namespace qlcm
