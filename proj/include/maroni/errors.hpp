#ifndef MARONI_ERRORS_HPP
#define MARONI_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace maroni {

// Error taxonomy, mirrored by the CLI exit codes:
//   spec_error        -> exit 2 (request outside the verified range / bad parameters)
//   consistency_error -> exit 3 (an internal mathematical cross-check failed)
enum class errc {
  invalid_spec,
  invalid_stratum,
  range_violation,
  bad_chart,
  char_too_small,
  not_divisible,
  inconsistent,
  matching_failure,
};

inline const char* errc_name(errc c) {
  switch (c) {
    case errc::invalid_spec: return "InvalidSpec";
    case errc::invalid_stratum: return "InvalidStratum";
    case errc::range_violation: return "RangeViolation";
    case errc::bad_chart: return "BadChart";
    case errc::char_too_small: return "CharTooSmall";
    case errc::not_divisible: return "NotDivisible";
    case errc::inconsistent: return "Inconsistent";
    case errc::matching_failure: return "MatchingFailure";
  }
  return "Unknown";
}

class spec_error : public std::runtime_error {
 public:
  spec_error(errc code, const std::string& msg)
      : std::runtime_error(std::string(errc_name(code)) + ": " + msg), code_(code) {}
  errc code() const { return code_; }

 private:
  errc code_;
};

class consistency_error : public std::runtime_error {
 public:
  consistency_error(errc code, const std::string& msg)
      : std::runtime_error(std::string(errc_name(code)) + ": " + msg), code_(code) {}
  errc code() const { return code_; }

 private:
  errc code_;
};

}  // namespace maroni

#endif
