#pragma once

#include <stdexcept>
#include <string>

namespace exdisc {

enum class Errc {
  empty_set,
  out_of_range,
  delta_out_of_range,
  malformed_interval,
  not_a_step,
  negative_values,
  hypothesis_violated,
  invalid_exponent,
  tolerance_invalid,
  irrational_boundary,
  parse_error,
  io_error,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}
  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void raise(Errc code, const std::string& what) { throw Error(code, what); }

}  // namespace exdisc
