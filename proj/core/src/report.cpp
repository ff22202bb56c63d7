#include "dualkit/report.hpp"

#include <algorithm>

namespace dualkit {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Holds: return "HOLDS";
    case Verdict::Fails: return "FAILS";
    case Verdict::Skipped: return "SKIPPED";
  }
  return "?";
}

void IdentityReport::add(Point point, Rational value) {
  if (!value.is_zero() && verdict != Verdict::Fails) {
    verdict = Verdict::Fails;
    first_failure = Residual{point, value};
  }
  residuals.push_back({std::move(point), std::move(value)});
}

void IdentityReport::skip(std::string why) {
  verdict = Verdict::Skipped;
  notes.push_back(std::move(why));
}

bool all_hold(const std::vector<IdentityReport>& reports) {
  return std::all_of(reports.begin(), reports.end(), [](const IdentityReport& r) { return r.holds(); });
}

}  // namespace dualkit
