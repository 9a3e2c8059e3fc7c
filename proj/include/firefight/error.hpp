#pragma once

#include <stdexcept>
#include <string>

namespace firefight {

enum class Errc {
  OutOfRange,
  NonSymmetric,
  SelfLoop,
  Duplicate,
  Disconnected,
  EulerViolation,
  BadOuterFace,
  NotTriangulation,
  TooSmall,
  CannotTriangulate,
  Parse,
  BadSize,
  UnknownName,
  BadParam,
  EdgeInTree,
  NotACycle,
  SidesNotTwo,
  NoBalancedCycle,
  IllegalProtection,
  OverBudget,
  VertexMismatch,
  MonotonicityViolation,
  Inapplicable,
  ScheduleFailed,
  BadDegree,
  TooLarge,
  Io,
};

const char* errc_name(Errc code);

/// Every failure raised by the library carries one of the codes above plus a
/// message naming the offending vertices, edges, faces or lines.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code), detail_(what) {}

  Errc code() const noexcept { return code_; }
  /// The message without the leading code name.
  const std::string& detail() const noexcept { return detail_; }

 private:
  Errc code_;
  std::string detail_;
};

}  // namespace firefight
