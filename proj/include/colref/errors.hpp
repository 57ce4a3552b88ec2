#pragma once

#include <stdexcept>
#include <string>

namespace colref {

// Error categories, mapped onto CLI exit codes:
//   input/format problems -> 1, domain refusals -> 2, broken invariants -> 3.
enum class Errc {
  InvalidEdge,
  OutOfRange,
  FormatError,
  InvalidPartition,
  EmptyGraph,
  CodeError,
  InvalidMember,
  NotRealizable,
  NotEncodable,
  NotApplicable,
  StructureError,
  Internal,
};

class Error : public std::runtime_error {
public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  Errc code() const { return code_; }

private:
  Errc code_;
};

inline const char* errc_name(Errc c) {
  switch (c) {
    case Errc::InvalidEdge: return "InvalidEdge";
    case Errc::OutOfRange: return "OutOfRange";
    case Errc::FormatError: return "FormatError";
    case Errc::InvalidPartition: return "InvalidPartition";
    case Errc::EmptyGraph: return "EmptyGraph";
    case Errc::CodeError: return "CodeError";
    case Errc::InvalidMember: return "InvalidMember";
    case Errc::NotRealizable: return "NotRealizable";
    case Errc::NotEncodable: return "NotEncodable";
    case Errc::NotApplicable: return "NotApplicable";
    case Errc::StructureError: return "StructureError";
    case Errc::Internal: return "Internal";
  }
  return "Unknown";
}

[[noreturn]] inline void fail(Errc code, const std::string& msg) {
  throw Error(code, std::string(errc_name(code)) + ": " + msg);
}

} // namespace colref
