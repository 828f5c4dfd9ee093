#pragma once

#include <stdexcept>
#include <string>

namespace facialthue {

// Error classes of the library contracts. The CLI maps these onto exit
// codes; tests match on the code rather than the message text.
enum class Errc {
  NotConnected,
  HasLoop,
  HasParallelEdge,
  EulerViolation,
  UnknownFamily,
  ParamOutOfRange,
  SyntaxError,
  SemanticError,
  InvalidDescriptor,
  NotFacial,
  OddLength,
  EdgeNotOnPath,
  UncolouredEdge,
  EmptyInput,
  ListSizeMismatch,
  CorruptRecord,
  InconsistentLog,
  OverflowingRecord,
  NTooLarge,
  KTooSmall,
};

const char* errc_name(Errc code);

class Error : public std::runtime_error {
public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const { return code_; }

private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

}  // namespace facialthue
