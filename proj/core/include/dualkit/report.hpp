#pragma once

/**
 * @file report.hpp
 * @brief Outcome of one exact identity check.
 */

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dualkit/rational.hpp"

namespace dualkit {

enum class Verdict { Holds, Fails, Skipped };

std::string to_string(Verdict v);

/// Named coordinates of an evaluation point, e.g. {{"x", 1/2}, {"y", 0}}.
using Point = std::vector<std::pair<std::string, Rational>>;

struct Residual {
  Point point;
  Rational value;  ///< LHS - RHS
};

struct IdentityReport {
  std::string id;
  /// Parameters in insertion order, rendered as strings.
  std::vector<std::pair<std::string, std::string>> params;
  std::vector<Residual> residuals;
  Verdict verdict = Verdict::Holds;
  std::optional<Residual> first_failure;
  std::vector<std::string> notes;

  /// "printed" unless the display only holds under an alternative reading.
  std::string reading = "printed";
  /// Set when an alternative reading was needed: the verdict and witness of
  /// the display exactly as printed.
  std::optional<Verdict> printed_verdict;
  std::optional<Residual> printed_failure;
  bool reinterpreted = false;

  /// False when the sample grid is too small for zero-on-grid to imply
  /// zero identically.
  bool deterministic = true;

  IdentityReport() = default;
  explicit IdentityReport(std::string id_) : id(std::move(id_)) {}

  void param(std::string name, std::string value) { params.emplace_back(std::move(name), std::move(value)); }

  /// Records a residual; the first nonzero one flips the verdict to Fails.
  void add(Point point, Rational value);

  void skip(std::string why);

  bool holds() const { return verdict != Verdict::Fails; }
  Verdict verdict_as_printed() const { return printed_verdict.value_or(verdict); }
};

/// True when no report Fails.
bool all_hold(const std::vector<IdentityReport>& reports);

}  // namespace dualkit
