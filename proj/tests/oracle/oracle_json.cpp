#include <nlohmann/json.hpp>

#include "oracle.hpp"
#include "oracle_json.hpp"

nlohmann::json oracle_json(long max_kl) {
  nlohmann::json displays = nlohmann::json::object();
  for (const auto& v : oracle::verdicts(max_kl)) {
    nlohmann::json resolved = nullptr;
    for (std::size_t i = 0; i < v.readings.size(); ++i) {
      if (v.holds[i]) {
        resolved = v.readings[i];
        break;
      }
    }
    displays[v.id] = {{"readings", v.readings},
                      {"holds", v.holds},
                      {"printed", v.holds.front() ? "HOLDS" : "FAILS"},
                      {"resolved_reading", resolved},
                      {"reading_by_kl", v.first_holding}};
  }
  nlohmann::json conventions = nlohmann::json::object();
  const long top = 2 * max_kl + 3;
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    conventions["thm21.random-" + std::to_string(seed)] =
        oracle::thm21_conventions(oracle::random_sequence(top, seed), oracle::Q(1, 3), max_kl);
  }
  auto tb = oracle::conjugate_bernoulli(top);
  for (std::size_t m = 1; m < tb.size(); m += 2) tb[m] = -tb[m];
  conventions["cor23.signed-conj-bernoulli"] = oracle::thm21_conventions(tb, 0, max_kl);
  const auto e = oracle::euler_numbers(top);
  std::vector<oracle::Q> shifted;
  for (long n = 0; n <= top; ++n) {
    shifted.push_back(oracle::euler_poly(e, n, oracle::Q(1, 2)) - oracle::Q(1) / oracle::power(oracle::Q(2), n));
  }
  conventions["cor24.euler-half-shifted"] = oracle::thm21_conventions(shifted, oracle::Q(1, 2), max_kl);
  conventions["cor22.bernoulli"] = oracle::thm21_conventions(oracle::bernoulli(top), 0, max_kl);
  return {{"max_kl", max_kl}, {"displays", displays}, {"conventions", conventions}};
}
