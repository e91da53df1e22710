#ifndef IVPARETO_ERROR_HPP
#define IVPARETO_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace ivpareto {

enum class ErrorCode {
  InvalidBounds,
  NotAContraction,
  SchemaError,
  DimensionError,
  UnknownId,
  DuplicateId,
  InconsistentRelation,
  WrongVariant,
  NotEliminated,
  SamePair,
  ContradictoryInformation,
  StaleSequence,
  EmptyLog,
  IoError,
  ReplayError,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Domain error raised by every engine operation. `field` names the offending
/// input element when there is one (an id, a JSON path, a file name).
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message, std::string field = {})
      : std::runtime_error(std::string(to_string(code)) + ": " + message),
        code_(code),
        field_(std::move(field)) {}

  [[nodiscard]] ErrorCode code() const noexcept { return code_; }
  [[nodiscard]] const std::string& field() const noexcept { return field_; }

 private:
  ErrorCode code_;
  std::string field_;
};

}  // namespace ivpareto

#endif  // IVPARETO_ERROR_HPP
