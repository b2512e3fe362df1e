#include "elliptic/errors.hpp"
#include "elliptic/version.hpp"

namespace elliptic {

namespace {

std::string capacity_message(std::size_t requested, std::size_t ceiling, const std::string& hint) {
  std::string msg = "word length " + std::to_string(requested) +
                    " exceeds the enumeration ceiling " + std::to_string(ceiling) +
                    " (set ELLIPTIC_MOMENTS_MAX_L to raise it)";
  if (!hint.empty()) msg += "; " + hint;
  return msg;
}

}  // namespace

CapacityError::CapacityError(std::size_t requested, std::size_t ceiling, const std::string& hint)
    : std::runtime_error(capacity_message(requested, ceiling, hint)),
      requested_(requested),
      ceiling_(ceiling) {}

std::string version() { return ELLIPTIC_VERSION_STRING; }

}  // namespace elliptic
