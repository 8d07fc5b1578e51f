#ifndef PAIROPS_STABILITY_HPP
#define PAIROPS_STABILITY_HPP

#include <array>
#include <functional>
#include <string>

namespace pairops {

// Truncated answers are only trusted when recomputing at N+2 and N+4 echoes
// the same classified/rendered result.
struct StabilityCertificate {
  std::array<int, 3> truncations{};
  std::array<std::string, 3> rendered;
  bool confirmed = false;

  const std::string& value() const { return rendered[0]; }
  std::string describe() const;
};

StabilityCertificate stability_check(
    int base_truncation, const std::function<std::string(int)>& render_at);

}  // namespace pairops

#endif
