#pragma once

#include <stdexcept>
#include <string>

namespace zastava {

enum class errc {
  division_by_zero,
  repeated_node,   // repeated abscissa / repeated root
  precondition,    // generic violated precondition
  out_of_range,
  unsupported,     // unsupported root-datum tag, etc.
  parse,
  no_solution,     // Bezout completion does not exist
  sampling_exhausted,
  invariant,       // internal invariant broken; indicates a bug
};

inline const char* to_string(errc c) {
  switch (c) {
    case errc::division_by_zero: return "division_by_zero";
    case errc::repeated_node: return "repeated_node";
    case errc::precondition: return "precondition";
    case errc::out_of_range: return "out_of_range";
    case errc::unsupported: return "unsupported";
    case errc::parse: return "parse";
    case errc::no_solution: return "no_solution";
    case errc::sampling_exhausted: return "sampling_exhausted";
    case errc::invariant: return "invariant";
  }
  return "unknown";
}

class error : public std::runtime_error {
 public:
  error(errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

}  // namespace zastava
