#ifndef HEKISE_ERROR_HPP_
#define HEKISE_ERROR_HPP_

#include <stdexcept>
#include <string>
#include <string_view>

namespace hekise {

// Every domain failure carries one of these kinds; the CLI prints the kind
// name so scripts can match on it.
enum class ErrorKind {
  SelfLoop,
  TwoCycle,
  DuplicateLabel,
  UnknownEndpoint,
  DuplicateArrow,
  InvalidLabel,
  EqualVertices,
  CycleTooShort,
  InvalidArgument,
  ParseError,
  UnknownLetter,
  EmptyWord,
  BudgetExceeded,
  StaleSite,
  NotNormalForm,
  GraphMismatch,
  NotACycle,
  IncompleteCensus,
  StateBudgetExceeded,
};

std::string_view error_kind_name(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
 public:
  // `detail` is the parenthesised payload, e.g. Error(SelfLoop, "a") prints
  // as "SelfLoop(a)".
  Error(ErrorKind kind, std::string const& detail);

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace hekise

#endif  // HEKISE_ERROR_HPP_
