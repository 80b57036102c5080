#pragma once

#include <string_view>

namespace nnc {

/// Diagnostic line on stderr, emitted only when NNC_LOG is set.
void log_debug(std::string_view message);

}  // namespace nnc
