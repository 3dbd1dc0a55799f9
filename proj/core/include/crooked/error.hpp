#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace crooked {

enum class ErrorCode {
  NotSpacelike,
  NotLorentzOrthogonal,
  DegeneratePair,
  CrossingPair,
  NotUltraparallel,
  NotDisjoint,
  BadRegionParams,
  CrossingDirectors,
  ZeroDerivative,
  InvalidParams,
};

std::string_view to_string(ErrorCode code);

/// Thrown by every precondition failure in the library. The code is stable and
/// is what the command-line tool maps onto exit statuses.
class GeometryError : public std::runtime_error {
 public:
  GeometryError(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace crooked
