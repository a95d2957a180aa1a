#pragma once

#include <stdexcept>
#include <string>

namespace bcp {

// Internal invariant check, always on. std::invalid_argument is reserved for bad
// user input (CLI exit 1); BCP_CHECK failures are bugs or broken pipelines (exit 2).
[[noreturn]] inline void check_fail(const char* expr, const std::string& msg) {
  throw std::logic_error(std::string("internal check failed: ") + expr +
                         (msg.empty() ? "" : ": " + msg));
}

}  // namespace bcp

#define BCP_CHECK(cond, msg)                 \
  do {                                       \
    if (!(cond)) ::bcp::check_fail(#cond, msg); \
  } while (0)
