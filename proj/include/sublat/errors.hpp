#ifndef SUBLAT_ERRORS_HPP
#define SUBLAT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace sublat {

// Caller handed us something outside an operation's stated domain
// (singular matrix where invertible is required, ambient mismatch, ...).
// Distinct from a legitimate negative answer, which is a return value.
class precondition_error : public std::invalid_argument {
public:
  explicit precondition_error(const std::string& what)
      : std::invalid_argument(what) {}
};

// Malformed external input (JSON that does not parse or violates a schema).
class parse_error : public std::invalid_argument {
public:
  explicit parse_error(const std::string& what)
      : std::invalid_argument(what) {}
};

// A structural guarantee the library itself promises was found violated.
// Reaching this is a bug, never a data problem.
class invariant_error : public std::logic_error {
public:
  explicit invariant_error(const std::string& what)
      : std::logic_error(what) {}
};

// Closure iteration exceeded the configured node cap.
class cap_exceeded_error : public std::runtime_error {
public:
  explicit cap_exceeded_error(std::size_t cap)
      : std::runtime_error("lattice closure exceeded node cap " +
                           std::to_string(cap)),
        cap_(cap) {}
  std::size_t cap() const { return cap_; }

private:
  std::size_t cap_;
};

}  // namespace sublat

#endif
