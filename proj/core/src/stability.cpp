#include "pairops/stability.hpp"

namespace pairops {

StabilityCertificate stability_check(
    int base_truncation, const std::function<std::string(int)>& render_at) {
  StabilityCertificate cert;
  for (int k = 0; k < 3; ++k) {
    cert.truncations[static_cast<size_t>(k)] = base_truncation + 2 * k;
    cert.rendered[static_cast<size_t>(k)] = render_at(base_truncation + 2 * k);
  }
  cert.confirmed = cert.rendered[0] == cert.rendered[1] &&
                   cert.rendered[1] == cert.rendered[2];
  return cert;
}

std::string StabilityCertificate::describe() const {
  std::string s = "N=" + std::to_string(truncations[0]) + "," +
                  std::to_string(truncations[1]) + "," +
                  std::to_string(truncations[2]);
  return s + (confirmed ? " agree" : " DISAGREE");
}

}  // namespace pairops
