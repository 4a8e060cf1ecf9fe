#pragma once

#include <stdexcept>
#include <string>

namespace gaingraph {

// Thrown when an operation is asked to run above its configured size cap
// (exhaustive enumeration and permanent evaluation are exponential).
class CapExceeded : public std::runtime_error {
 public:
  CapExceeded(const std::string& what, int cap)
      : std::runtime_error(what + " (cap " + std::to_string(cap) + ")"), cap_(cap) {}

  int cap() const { return cap_; }

 private:
  int cap_;
};

}  // namespace gaingraph
