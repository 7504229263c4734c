#ifndef TFG_ERROR_HPP
#define TFG_ERROR_HPP

#include <stdexcept>
#include <string>

namespace tfg {

enum class Errc {
  NotPrimitive,
  NotInLanguage,
  TooShort,
  RadiusTooSmall,
  NotAPartition,
  NotBijective,
  OverlapViolation,
  TowerTooShort,
  InvalidSeed,
  UnsupportedOffset,
  SearchCeilingExceeded,
  SeedOrbitNotSeparated,
  AperiodicityUnchecked,
  DaggerRequired,
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

}  // namespace tfg

#endif
