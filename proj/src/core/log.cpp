#include "nnc/log.hpp"

#include <cstdlib>
#include <iostream>

namespace nnc {

void log_debug(std::string_view message) {
  static const bool enabled = std::getenv("NNC_LOG") != nullptr;
  if (enabled) std::clog << "[nnc] " << message << '\n';
}

}  // namespace nnc
