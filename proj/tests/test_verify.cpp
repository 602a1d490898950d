#include "doctest.h"

#include "norlund/verify.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

using namespace norlund;

namespace {

VerificationReport single(const std::string& id, int ell, double x,
                          VerifyOptions opts = {}) {
  opts.ell = ell;
  opts.xs = {x};
  auto reps = run_verifier(id, opts);
  REQUIRE(reps.size() == 1);
  return reps.front();
}

bool has_note(const VerificationReport& r, const std::string& needle) {
  return r.notes.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("registry lists sixteen checks in sorted order with descriptions") {
  const auto& ids = verifier_ids();
  CHECK(ids.size() == 16);
  CHECK(std::is_sorted(ids.begin(), ids.end()));
  for (const auto& id : ids) CHECK(!verifier_description(id).empty());
  CHECK_THROWS_AS(verifier_description("no-such-check"), std::invalid_argument);
  CHECK_THROWS_AS(run_verifier("no-such-check"), std::invalid_argument);
  CHECK_THROWS_AS(run_suite({"umbral-inversion", "no-such-check"}),
                  std::invalid_argument);
}

TEST_CASE("full default suite passes and is sorted") {
  auto reps = run_suite({});
  CHECK(reps.size() == 29);
  CHECK(std::is_sorted(reps.begin(), reps.end(),
                       [](const VerificationReport& a, const VerificationReport& b) {
                         return a.identity_id < b.identity_id;
                       }));
  for (const auto& r : reps) {
    INFO(r.identity_id, " ", r.notes);
    CHECK(r.passed);
    CHECK(std::isfinite(r.residual));
    CHECK(r.residual <= r.tolerance);
  }
}

TEST_CASE("subset suite selects and orders the requested checks") {
  auto reps = run_suite({"umbral-inversion", "density-normalization"});
  REQUIRE(reps.size() == 2);
  CHECK(reps[0].identity_id == "density-normalization");
  CHECK(reps[1].identity_id == "umbral-inversion");
  CHECK(reps[0].passed);
  CHECK(reps[1].passed);
}

TEST_CASE("exact checks report zero residual at zero tolerance") {
  for (const char* id : {"umbral-inversion", "log-derivative-chebyshev-lemma"}) {
    auto reps = run_verifier(id);
    REQUIRE(reps.size() == 1);
    CHECK(reps[0].passed);
    CHECK(reps[0].residual == 0.0);
    CHECK(reps[0].tolerance == 0.0);
    CHECK(reps[0].lhs.is_text);
    CHECK(reps[0].rhs.is_text);
  }
}

TEST_CASE("first-kind kernel integrals reproduce frozen values") {
  auto r13 = single("chebyshev-kernel-integral-first", 1, 3.0);
  CHECK(r13.passed);
  CHECK(std::abs(r13.lhs.number - 0.0195052882349747) < 1e-9);
  auto r25 = single("chebyshev-kernel-integral-first", 2, 5.0);
  CHECK(r25.passed);
  CHECK(std::abs(r25.lhs.number - (-0.0175234416489272)) < 1e-9);
}

TEST_CASE("second-kind kernel integrals reproduce frozen values and reject the half-shifted digamma") {
  auto r13 = single("chebyshev-kernel-integral-second", 1, 3.0);
  CHECK(r13.passed);
  CHECK(std::abs(r13.lhs.number - 0.0480076212157935) < 1e-9);
  CHECK(has_note(r13, "half-shifted variant is rejected"));
  auto r25 = single("chebyshev-kernel-integral-second", 2, 5.0);
  CHECK(r25.passed);
  CHECK(std::abs(r25.lhs.number - (-0.0304048899034745)) < 1e-9);
}

TEST_CASE("weighted zeta sums reproduce frozen values") {
  auto e13 = single("hurwitz-sum-first", 1, 3.0);
  CHECK(e13.passed);
  CHECK(std::abs(e13.lhs.number - 0.061277670225148) < 1e-8);
  CHECK(has_note(e13, "cross-check against the multi-dimensional zeta route passed"));
  auto e24 = single("hurwitz-sum-first", 2, 4.0);
  CHECK(e24.passed);
  CHECK(std::abs(e24.lhs.number - 0.0584676936241111) < 1e-8);
  auto o13 = single("hurwitz-sum-second", 1, 3.0);
  CHECK(o13.passed);
  CHECK(std::abs(o13.lhs.number - 0.100546926751906) < 1e-8);
  CHECK(has_note(o13, "half-shifted variant is rejected"));
}

TEST_CASE("difference-equation check accepts exactly one variant") {
  auto reps = run_verifier("density-difference-equation");
  REQUIRE(reps.size() == 1);
  CHECK(reps[0].passed);
  CHECK(has_note(reps[0], "x-variable statement holds"));
  CHECK(has_note(reps[0], "b-variable intermediate display fails"));

  // loosening the tolerance until the wrong variant also fits must flip the
  // verdict: an equation satisfied by both candidates distinguishes nothing
  VerifyOptions loose;
  loose.tolerance_overrides["density-difference-equation"] = 1.0;
  auto ambiguous = run_verifier("density-difference-equation", loose);
  REQUIRE(ambiguous.size() == 1);
  CHECK(!ambiguous[0].passed);
}

TEST_CASE("generating-function slopes sit in the expected order band") {
  auto reps = run_verifier("modified-norlund-genfun");
  REQUIRE(reps.size() == 3);
  CHECK(std::abs(reps[0].lhs.number - 7.1211888952341136) < 1e-6);
  CHECK(reps[0].rhs.number == 7.0);
  CHECK(std::abs(reps[1].lhs.number - 6.7917457496161502) < 1e-6);
  CHECK(reps[1].rhs.number == 7.0);
  CHECK(std::abs(reps[2].lhs.number - 4.9799115649991768) < 1e-6);
  CHECK(reps[2].rhs.number == 5.0);
  for (const auto& r : reps) {
    CHECK(r.passed);
    CHECK(r.tolerance == 0.5);
  }
  CHECK(has_note(reps[0], "explicit digamma form matched at z = 0.1"));
  CHECK(has_note(reps[1], "explicit digamma form matched at z = 0.1"));

  VerifyOptions o;
  o.ell = 2;
  auto only2 = run_verifier("modified-norlund-genfun", o);
  REQUIRE(only2.size() == 1);
  CHECK(only2[0].parameters[0].i == 2);
  o.ell = 4;
  CHECK_THROWS_AS(run_verifier("modified-norlund-genfun", o), std::invalid_argument);
}

TEST_CASE("log-moment check honors ell selection and rejects bad domains") {
  VerifyOptions o;
  o.ell = 2;
  auto reps = run_verifier("log-moment-closed-form", o);
  REQUIRE(reps.size() == 1);
  CHECK(reps[0].passed);
  CHECK(reps[0].parameters[0].name == "ell");
  CHECK(reps[0].parameters[0].i == 2);
  CHECK(has_note(reps[0], "frozen spot value at x = 3 reproduced"));
  CHECK(has_note(reps[0], "reflected point checked"));

  o.ell = 9;
  CHECK_THROWS_AS(run_verifier("log-moment-closed-form", o), std::invalid_argument);
  o.ell = 2;
  o.xs = {1.0};  // x = ell/2 exactly: the log moment degenerates there
  CHECK_THROWS_AS(run_verifier("log-moment-closed-form", o), std::domain_error);
  o.xs = {0.3};
  CHECK_THROWS_AS(run_verifier("log-moment-closed-form", o), std::domain_error);
}

TEST_CASE("kernel integral checks reject out-of-domain evaluation points") {
  VerifyOptions o;
  o.ell = 1;
  o.xs = {0.5};
  CHECK_THROWS_AS(run_verifier("chebyshev-kernel-integral-first", o),
                  std::domain_error);
  o.xs = {1.2};
  CHECK_THROWS_AS(run_verifier("chebyshev-kernel-integral-second", o),
                  std::domain_error);
  o.ell = 3;
  o.xs = {};
  CHECK_THROWS_AS(run_verifier("chebyshev-kernel-integral-first", o),
                  std::invalid_argument);
  CHECK_THROWS_AS(run_verifier("hurwitz-sum-second", o), std::invalid_argument);
}

TEST_CASE("tolerance scale and overrides reach the reports") {
  VerifyOptions strict;
  strict.tolerance_scale = 1e-6;
  auto reps = run_verifier("density-normalization", strict);
  REQUIRE(reps.size() == 1);
  CHECK(reps[0].tolerance == doctest::Approx(1e-15).epsilon(1e-3));
  CHECK(!reps[0].passed);  // quadrature error estimates exceed half the budget

  VerifyOptions override_only;
  override_only.tolerance_overrides["density-normalization"] = 1e-3;
  auto relaxed = run_verifier("density-normalization", override_only);
  CHECK(relaxed[0].tolerance == 1e-3);
  CHECK(relaxed[0].passed);
}

TEST_CASE("digamma integral check folds the order-one moment cross-pin") {
  auto reps = run_verifier("digamma-log-integrals");
  REQUIRE(reps.size() == 1);
  CHECK(reps[0].passed);
  CHECK(has_note(reps[0], "reproduces the same psi values"));
  VerifyOptions o;
  o.xs = {0.4};  // inversion integral needs x > 1/2
  CHECK_THROWS_AS(run_verifier("digamma-log-integrals", o), std::domain_error);
}

TEST_CASE("difference lemma runs one report per order") {
  auto reps = run_verifier("digamma-difference-lemma");
  CHECK(reps.size() == 5);
  for (const auto& r : reps) {
    CHECK(r.passed);
    CHECK(r.tolerance == 1e-10);
  }
  VerifyOptions o;
  o.ell = 3;
  auto only3 = run_verifier("digamma-difference-lemma", o);
  REQUIRE(only3.size() == 1);
  CHECK(only3[0].parameters[0].i == 3);
  o.xs = {-1.0};
  CHECK_THROWS_AS(run_verifier("digamma-difference-lemma", o), std::domain_error);
}

TEST_CASE("transform checks carry quadrature error estimates within budget") {
  for (const char* id :
       {"characteristic-function-relation", "cosine-cosh-integrals"}) {
    auto reps = run_verifier(id);
    REQUIRE(reps.size() == 1);
    CHECK(reps[0].passed);
    CHECK(!reps[0].quadrature_errors.empty());
    for (double e : reps[0].quadrature_errors) CHECK(e <= reps[0].tolerance / 2);
  }
}

TEST_CASE("coth-log check folds special value, split form, and vanishing limit") {
  auto reps = run_verifier("coth-log-integral");
  REQUIRE(reps.size() == 1);
  CHECK(reps[0].passed);
  CHECK(has_note(reps[0], "a = 1/pi special value reproduced"));
  CHECK(has_note(reps[0], "split-form pieces match their closed forms at a = 1"));
  CHECK(has_note(reps[0], "both sides vanish at a = 0.001"));
}

TEST_CASE("cross-validation check compares every applicable route") {
  VerifyOptions o;
  o.ell = 3;
  o.xs = {0.5, 1.5};
  auto reps = run_verifier("density-cross-validation", o);
  REQUIRE(reps.size() == 1);
  CHECK(reps[0].passed);
  CHECK(has_note(reps[0], "convolution"));
  o.ell = 0;
  CHECK_THROWS_AS(run_verifier("density-cross-validation", o),
                  std::invalid_argument);
}
