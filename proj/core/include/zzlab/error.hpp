#pragma once

#include <stdexcept>
#include <string>

namespace zzlab {

enum class Errc {
  DuplicateDart,
  MissingDart,
  FixedDart,
  PortOutOfRange,
  VertexOutOfRange,
  SizeTooSmall,
  UnknownVariant,
  DegreeMismatch,
  DisconnectedFactor,
  NotAnEdge,
  NegativeResidual,
  OddDegree,
  DegreeNot4,
  CorrespondenceViolated,
  NotPartitionPreserving,
  SizeLimitExceeded,
  NotSymmetric,
  MultiplicityMismatch,
  OrderingMismatch,
  SpectrumMismatch,
  FormatError,
  UsageError,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& detail)
      : std::runtime_error(std::string(errc_name(code)) + ": " + detail),
        code_(code),
        detail_(detail) {}

  Errc code() const { return code_; }
  const std::string& detail() const { return detail_; }

 private:
  Errc code_;
  std::string detail_;
};

[[noreturn]] inline void fail(Errc code, const std::string& detail) {
  throw Error(code, detail);
}

}  // namespace zzlab
