// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>

namespace covgon {

// Raised when a stated hypothesis of a theorem-shaped computation fails
// (degree thresholds, coprimality, orderings, ...). Carries the name of the
// violated condition so front ends can report it verbatim.
class hypothesis_error : public std::runtime_error {
 public:
  hypothesis_error(std::string hypothesis, std::string detail)
      : std::runtime_error(hypothesis + ": " + detail),
        hypothesis_(std::move(hypothesis)),
        detail_(std::move(detail)) {}

  const std::string& hypothesis() const noexcept { return hypothesis_; }
  const std::string& detail() const noexcept { return detail_; }

 private:
  std::string hypothesis_;
  std::string detail_;
};

}  // namespace covgon
