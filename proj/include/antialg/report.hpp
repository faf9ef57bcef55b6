#pragma once

#include <algorithm>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace antialg {

enum class Verdict { pass, fail, skipped_out_of_window };

inline std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::pass: return "pass";
    case Verdict::fail: return "fail";
    case Verdict::skipped_out_of_window: return "skipped-out-of-window";
  }
  return "?";
}

/// A single named verification result, the unit the CLI prints as a
/// PASS / FAIL / SKIP line.
struct NamedCheck {
  std::string id;
  Verdict verdict = Verdict::pass;
  std::size_t checked = 0;
  std::size_t skipped = 0;
  std::string witness;  ///< first failing instance, empty on pass
};

using CheckList = std::vector<NamedCheck>;

inline bool all_passed(const CheckList& checks) {
  return std::none_of(checks.begin(), checks.end(), [](const NamedCheck& c) { return c.verdict == Verdict::fail; });
}

inline NamedCheck make_check(std::string id, bool ok, std::size_t checked = 1, std::string witness = {}) {
  return NamedCheck{std::move(id), ok ? Verdict::pass : Verdict::fail, checked, 0, ok ? std::string{} : std::move(witness)};
}

}  // namespace antialg
