#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace elliptic {

// Raised by operations that must exhaust NC2(L) when L exceeds the
// enumeration ceiling.
class CapacityError : public std::runtime_error {
 public:
  CapacityError(std::size_t requested, std::size_t ceiling, const std::string& hint = {});

  std::size_t requested() const noexcept { return requested_; }
  std::size_t ceiling() const noexcept { return ceiling_; }

 private:
  std::size_t requested_;
  std::size_t ceiling_;
};

}  // namespace elliptic
