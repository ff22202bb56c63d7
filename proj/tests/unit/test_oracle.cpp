#include "doctest.h"

#include "../common/golden.hpp"
#include "dualkit/combinatorics.hpp"
#include "dualkit/duality.hpp"
#include "dualkit/identity_lab.hpp"
#include "dualkit/sequences.hpp"
#include "oracle.hpp"
#include "oracle_json.hpp"

using dualkit::Rational;

namespace {

const std::string kGolden = std::string(DUALKIT_GOLDEN_DIR) + "/identity_verdicts.json";

Rational from(const oracle::Q& q) { return Rational(q); }

}  // namespace

TEST_CASE("oracle numbers agree with the library") {
  const long n = 24;
  const auto b = oracle::bernoulli(n);
  const auto e = oracle::euler_numbers(n);
  const auto tb = oracle::conjugate_bernoulli(n);
  const auto lb = dualkit::bernoulli_numbers(n);
  const auto le = dualkit::euler_numbers(n);
  const auto ltb = dualkit::conjugate_bernoulli_numbers(n);
  for (long m = 0; m <= n; ++m) {
    const auto um = static_cast<std::size_t>(m);
    CHECK(from(b[um]) == lb[um]);
    CHECK(from(e[um]) == le[um]);
    CHECK(from(tb[um]) == ltb[um]);
    const oracle::Q x(-5, 7);
    CHECK(from(oracle::bernoulli_poly(b, m, x)) == dualkit::bernoulli_poly(um)(Rational(-5, 7)));
    CHECK(from(oracle::euler_poly(e, m, x)) == dualkit::euler_poly(um)(Rational(-5, 7)));
  }
}

TEST_CASE("oracle duals and integrals agree with the library") {
  const auto a = dualkit::random_sequence(12, 77);
  const auto oa = oracle::random_sequence(12, 77);
  for (std::size_t m = 0; m < oa.size(); ++m) CHECK(from(oa[m]) == a[m]);
  for (int rel = 1; rel <= 4; ++rel) {
    const auto od = oracle::dual(oa, rel);
    const auto ld = dualkit::dual_transform(a, dualkit::kAllRelations[rel - 1]);
    for (std::size_t m = 0; m < od.size(); ++m) CHECK(from(od[m]) == ld[m]);
  }
  for (long k = 0; k <= 4; ++k) {
    for (long l = 0; l <= 4; ++l) {
      CHECK(from(oracle::incomplete_beta(oracle::Q(1, 2), k + 1, l + 1)) ==
            dualkit::incomplete_beta(Rational(1, 2), k + 1, l + 1));
    }
  }
}

TEST_CASE("oracle reproduces the golden file") {
  const auto gold = golden::load(kGolden);
  const long max_kl = gold.at("max_kl");
  CHECK(oracle_json(max_kl) == gold);
}

TEST_CASE("harness matches the golden verdicts") {
  const auto gold = golden::load(kGolden);
  const auto bad = golden::compare(gold, gold.at("max_kl"));
  for (const auto& line : bad) MESSAGE(line);
  CHECK(bad.empty());
}

TEST_CASE("harness convention sweeps match the golden file") {
  const auto gold = golden::load(kGolden);
  const long max_kl = gold.at("max_kl");
  dualkit::ConventionBounds bounds;
  bounds.max_k = max_kl;
  bounds.max_l = max_kl;
  auto names = [](const std::vector<dualkit::DualRelation>& rels) {
    std::vector<int> out;
    for (auto r : rels) out.push_back(static_cast<int>(r) + 1);
    return out;
  };
  const auto& conv = gold.at("conventions");
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    bounds.seeds = {seed};
    const auto got = dualkit::detect_convention(dualkit::ConventionFamily::Thm21, bounds);
    CHECK(nlohmann::json(names(got.all_displays)) == conv.at("thm21.random-" + std::to_string(seed)));
  }
  CHECK(nlohmann::json(names(dualkit::detect_convention(dualkit::ConventionFamily::Cor23, bounds).all_displays)) ==
        conv.at("cor23.signed-conj-bernoulli"));
  CHECK(nlohmann::json(names(dualkit::detect_convention(dualkit::ConventionFamily::Cor24, bounds).all_displays)) ==
        conv.at("cor24.euler-half-shifted"));
  const auto b = dualkit::bernoulli_numbers(static_cast<std::size_t>(2 * max_kl + 3));
  CHECK(nlohmann::json(names(dualkit::detect_convention(b, 0, bounds).all_displays)) == conv.at("cor22.bernoulli"));
}
