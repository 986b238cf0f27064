#pragma once

#include <stdexcept>
#include <string>

namespace gmsf {

struct DivisionByZero : std::runtime_error {
  explicit DivisionByZero(const std::string& m = "division by zero") : std::runtime_error(m) {}
};

struct EvaluationPole : std::runtime_error {
  explicit EvaluationPole(const std::string& m = "evaluation hits a pole") : std::runtime_error(m) {}
};

struct ArgumentPole : std::runtime_error {
  explicit ArgumentPole(const std::string& m = "argument produces a vanishing denominator")
      : std::runtime_error(m) {}
};

struct InvalidBox : std::invalid_argument {
  explicit InvalidBox(const std::string& m = "box is not addable/removable as required")
      : std::invalid_argument(m) {}
};

struct NotContained : std::invalid_argument {
  explicit NotContained(const std::string& m = "partition containment violated")
      : std::invalid_argument(m) {}
};

struct RankMismatch : std::invalid_argument {
  explicit RankMismatch(const std::string& m = "alphabet ranks differ") : std::invalid_argument(m) {}
};

struct TailUndefined : std::runtime_error {
  explicit TailUndefined(const std::string& m = "virtual alphabet tail undefined for required k")
      : std::runtime_error(m) {}
};

struct ResonanceError : std::runtime_error {
  explicit ResonanceError(const std::string& m = "resonant weight specialization")
      : std::runtime_error(m) {}
};

struct BasisMissing : std::runtime_error {
  explicit BasisMissing(const std::string& m = "required basis not built") : std::runtime_error(m) {}
};

struct BudgetExceeded : std::runtime_error {
  explicit BudgetExceeded(const std::string& m =
                              "polynomial term budget exceeded; retry in randomized mode")
      : std::runtime_error(m) {}
};

}  // namespace gmsf
