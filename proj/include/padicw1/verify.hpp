#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "padicw1/characters.hpp"
#include "padicw1/linvariant.hpp"
#include "padicw1/report.hpp"

namespace padicw1 {

/// One (phi, p) point and the knobs of the verification suites.
struct VerifyConfig {
  DirichletCharacter phi = DirichletCharacter::kronecker(-4);
  long p = 5;
  int prec = 30;
  /// Digits withheld from the strictest thresholds.
  int guard = 5;
  int mx = 8;
  long nmax = 1000;
  long up_range = 200;
  long lmax = 200;
  long embedding = 1;
  /// Truncations at which the structure models are built.
  std::vector<int> structure_mx{3, 4, 5, 6, 7, 8};
  std::optional<PUnitData> unit;
  std::optional<PUnitData> unit_inv;

  /// Embedding cap: prec plus the guard.
  int cap() const { return prec + guard; }
  /// L-value thresholds: prec - guard.
  int strict() const { return prec - guard; }
  /// Everything built on top of L-invariants: prec - 2 guard.
  int loose() const { return prec - 2 * guard; }
};

/// Every suite returns a JSON object with a "pass" flag and a list of
/// "claims"; a failing claim never throws.
struct SuiteResult {
  Json report;
  bool pass = true;
  /// Headline values, compared across precisions by the stability check.
  std::vector<std::pair<std::string, Padic>> values;
  /// Integer invariants (dimensions, orders) compared the same way.
  std::vector<std::pair<std::string, long>> invariants;
};

SuiteResult verify_gross(const VerifyConfig& c);
SuiteResult verify_ferrero_greenberg(const VerifyConfig& c);
SuiteResult verify_interpolation(const VerifyConfig& c);
SuiteResult verify_relation(const VerifyConfig& c);
SuiteResult verify_overconvergent(const VerifyConfig& c);
SuiteResult verify_structure(const VerifyConfig& c);

/// All of the above; "stability" additionally reruns at prec + 10 and
/// compares the headline values on their shared digits.
SuiteResult verify_all(const VerifyConfig& c, bool stability);

}  // namespace padicw1
