#pragma once

// Parameter sweeps over the identity catalog and their serialized reports.

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "eulersym/egf.hpp"
#include "eulersym/identities.hpp"

namespace eulersym {

enum class ReportFormat { kJson, kCsv };

struct SweepConfig {
  /// Family names ("T1", "C10", "INTRO", ...) or the single entry "all".
  std::vector<std::string> families;
  std::vector<unsigned> w_set{1, 3, 5, 7};
  unsigned n_max = 10;
  std::vector<Rational> y_samples;
  /// Truncation order for series cross-checks; n_max may not exceed it.
  unsigned order = kDefaultOrder;
  /// Admits even w for the two families stated for any positive w.
  bool include_even_w = false;
  /// Also compare each theorem case against the matching series coefficient.
  bool series_oracle = false;
  std::optional<std::string> output_path;
  ReportFormat format = ReportFormat::kJson;
  /// Worker threads for case evaluation; records keep sweep order.
  unsigned jobs = 1;
};

/// The six y samples used when none are given: 0, 1, -1, 1/2, -1/3, 2/7.
std::vector<Rational> default_y_samples();

struct SweepSummary {
  unsigned families_run = 0;
  std::size_t cases_run = 0;
  std::size_t failures = 0;
  /// Human-readable remarks, e.g. "T2: 0 admissible".
  std::vector<std::string> notes;
};

struct SweepResult {
  SweepSummary summary;
  std::vector<VerificationReport> records;
};

/// Resolves config.families against the catalog. Throws std::invalid_argument
/// for unknown names.
std::vector<const IdentityFamily*> resolve_families(const SweepConfig& config,
                                                    std::span<const IdentityFamily> catalog);

/// w tuples the family admits from w_set, lexicographic in sorted w_set.
std::vector<std::vector<unsigned>> admissible_w_tuples(const IdentityFamily& family,
                                                       const SweepConfig& config);

/// Runs every admissible (family, n, w, y) in lexicographic order. Throws
/// std::invalid_argument on an invalid config before computing anything.
SweepResult run_sweep(const SweepConfig& config,
                      std::span<const IdentityFamily> catalog = family_catalog());

/// Coefficient n of the quotient series a theorem family expands, or empty
/// for families without one.
std::optional<Rational> series_coefficient(FamilyId id, unsigned n, std::span<const unsigned> w,
                                           std::span<const Rational> y);

/// JSON: [{"family":..,"n":..,"w":[..],"y":[".."],"values":[".."],"equal":..}, ...]
/// CSV: header line then one row per record, list cells pipe-separated.
/// Output depends only on the records and their order.
std::string emit_report(std::span<const VerificationReport> records, ReportFormat format);

/// A record passes when all variants agree and, if present, the series value
/// matches them.
bool record_passes(const VerificationReport& record);

/// 0 when no failures, 1 otherwise.
int exit_code(const SweepSummary& summary);

}  // namespace eulersym
