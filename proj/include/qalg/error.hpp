#pragma once

#include <stdexcept>
#include <string>

namespace qalg {

struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct NotDivisible : Error {
  explicit NotDivisible(const std::string& w) : Error(w) {}
};

struct NegativeValuation : Error {
  explicit NegativeValuation(const std::string& w) : Error(w) {}
};

struct NotUnit : Error {
  explicit NotUnit(const std::string& w) : Error(w) {}
};

struct NotUnitAtOne : Error {
  explicit NotUnitAtOne(const std::string& w) : Error(w) {}
};

struct NotQCommuting : Error {
  explicit NotQCommuting(const std::string& w) : Error(w) {}
};

struct NotCentral : Error {
  explicit NotCentral(const std::string& w) : Error(w) {}
};

struct NotInVee : Error {
  explicit NotInVee(const std::string& w) : Error(w) {}
};

struct ValuationTooLow : Error {
  explicit ValuationTooLow(const std::string& w) : Error(w) {}
};

struct IndexError : Error {
  explicit IndexError(const std::string& w) : Error(w) {}
};

struct SyntaxError : Error {
  size_t position;
  SyntaxError(const std::string& w, size_t pos)
      : Error(w + " at position " + std::to_string(pos)), position(pos) {}
};

struct UnknownGenerator : Error {
  explicit UnknownGenerator(const std::string& w) : Error(w) {}
};

struct StepBudgetExceeded : Error {
  explicit StepBudgetExceeded(const std::string& w) : Error(w) {}
};

}  // namespace qalg
