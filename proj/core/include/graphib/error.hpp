#pragma once

#include <stdexcept>
#include <string>

namespace graphib {

// Stable machine-readable error codes. The CLI prints these verbatim in
// diagnostics ("error[E_DIMENSION]: ..."), so renaming one is a breaking
// change for downstream log parsers.
enum class Errc {
  invalid_argument,
  dimension_mismatch,
  not_symmetric,
  non_finite,
  parse,
  missing_label,
  io,
  degenerate,
  divergence,
  config,
  checkpoint,
};

const char* errc_name(Errc code);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  Errc code() const { return code_; }
  const char* code_name() const { return errc_name(code_); }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& message) {
  throw Error(code, message);
}

inline void require(bool condition, Errc code, const std::string& message) {
  if (!condition) fail(code, message);
}

inline const char* errc_name(Errc code) {
  switch (code) {
    case Errc::invalid_argument: return "E_INVALID_ARGUMENT";
    case Errc::dimension_mismatch: return "E_DIMENSION";
    case Errc::not_symmetric: return "E_NOT_SYMMETRIC";
    case Errc::non_finite: return "E_NON_FINITE";
    case Errc::parse: return "E_PARSE";
    case Errc::missing_label: return "E_MISSING_LABEL";
    case Errc::io: return "E_IO";
    case Errc::degenerate: return "E_DEGENERATE";
    case Errc::divergence: return "E_DIVERGENCE";
    case Errc::config: return "E_CONFIG";
    case Errc::checkpoint: return "E_CHECKPOINT";
  }
  return "E_UNKNOWN";
}

}  // namespace graphib
