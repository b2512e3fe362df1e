#pragma once

#include <string>

namespace elliptic {

std::string version();

}  // namespace elliptic
