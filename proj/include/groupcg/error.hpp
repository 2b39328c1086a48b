#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace groupcg {

// Domain error carrying a stable name ("AxiomError", "NotHermitian", ...)
// that the CLI surfaces verbatim.
class Error : public std::runtime_error {
 public:
  Error(std::string name, const std::string& message)
      : std::runtime_error(name + ": " + message), name_(std::move(name)) {}

  const std::string& name() const noexcept { return name_; }

 private:
  std::string name_;
};

[[noreturn]] inline void fail(std::string name, const std::string& message) {
  throw Error(std::move(name), message);
}

}  // namespace groupcg
