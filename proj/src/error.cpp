#include "hekise/error.hpp"

namespace hekise {

std::string_view error_kind_name(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::SelfLoop: return "SelfLoop";
    case ErrorKind::TwoCycle: return "TwoCycle";
    case ErrorKind::DuplicateLabel: return "DuplicateLabel";
    case ErrorKind::UnknownEndpoint: return "UnknownEndpoint";
    case ErrorKind::DuplicateArrow: return "DuplicateArrow";
    case ErrorKind::InvalidLabel: return "InvalidLabel";
    case ErrorKind::EqualVertices: return "EqualVertices";
    case ErrorKind::CycleTooShort: return "CycleTooShort";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::UnknownLetter: return "UnknownLetter";
    case ErrorKind::EmptyWord: return "EmptyWord";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
    case ErrorKind::StaleSite: return "StaleSite";
    case ErrorKind::NotNormalForm: return "NotNormalForm";
    case ErrorKind::GraphMismatch: return "GraphMismatch";
    case ErrorKind::NotACycle: return "NotACycle";
    case ErrorKind::IncompleteCensus: return "IncompleteCensus";
    case ErrorKind::StateBudgetExceeded: return "StateBudgetExceeded";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, std::string const& detail)
    : std::runtime_error(std::string(error_kind_name(kind)) + "(" + detail + ")"),
      kind_(kind) {}

}  // namespace hekise
