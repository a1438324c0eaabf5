#include "eulersym/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <stdexcept>
#include <string>
#include <thread>

namespace eulersym {

namespace {

struct Case {
  const IdentityFamily* family;
  unsigned n;
  std::vector<unsigned> w;
  std::vector<Rational> y;
};

void cartesian(std::span<const unsigned> values, unsigned arity, std::vector<unsigned>& prefix,
               std::vector<std::vector<unsigned>>& out) {
  if (prefix.size() == arity) {
    out.push_back(prefix);
    return;
  }
  for (unsigned v : values) {
    prefix.push_back(v);
    cartesian(values, arity, prefix, out);
    prefix.pop_back();
  }
}

std::vector<std::vector<Rational>> y_tuples(const std::vector<Rational>& samples, unsigned arity) {
  std::vector<unsigned> indices(samples.size());
  for (unsigned i = 0; i < indices.size(); ++i) indices[i] = i;
  std::vector<std::vector<unsigned>> picks;
  std::vector<unsigned> prefix;
  cartesian(indices, arity, prefix, picks);
  std::vector<std::vector<Rational>> out;
  out.reserve(picks.size());
  for (const auto& pick : picks) {
    std::vector<Rational> tuple;
    for (unsigned i : pick) tuple.push_back(samples[i]);
    out.push_back(std::move(tuple));
  }
  return out;
}

void validate(const SweepConfig& config) {
  for (unsigned w : config.w_set) {
    if (w == 0) throw std::invalid_argument("w values must be positive integers");
  }
  if (config.n_max > config.order) {
    throw std::invalid_argument("n_max " + std::to_string(config.n_max) +
                                " exceeds truncation order " + std::to_string(config.order));
  }
  if (config.jobs == 0) throw std::invalid_argument("jobs must be at least 1");
}

VerificationReport evaluate(const Case& c, const EvalTables& tables, bool with_series) {
  VerificationReport r = verify_case(*c.family, tables, c.n, c.w, c.y);
  if (with_series) r.series_value = series_coefficient(c.family->id, c.n, c.w, c.y);
  return r;
}

}  // namespace

std::vector<Rational> default_y_samples() {
  return {Rational(0), Rational(1), Rational(-1), Rational::parse("1/2"), Rational::parse("-1/3"),
          Rational::parse("2/7")};
}

std::vector<const IdentityFamily*> resolve_families(const SweepConfig& config,
                                                    std::span<const IdentityFamily> catalog) {
  const bool all = std::any_of(config.families.begin(), config.families.end(),
                               [](const std::string& f) { return f == "all" || f == "ALL"; });
  std::vector<FamilyId> wanted;
  if (!all) {
    for (const auto& name : config.families) wanted.push_back(parse_family_id(name));
  }
  std::vector<const IdentityFamily*> out;
  for (const auto& fam : catalog) {
    if (all || std::find(wanted.begin(), wanted.end(), fam.id) != wanted.end()) {
      out.push_back(&fam);
    }
  }
  return out;
}

std::vector<std::vector<unsigned>> admissible_w_tuples(const IdentityFamily& family,
                                                       const SweepConfig& config) {
  std::vector<unsigned> values;
  for (unsigned w : config.w_set) {
    if (w == 0) continue;
    const bool even = w % 2 == 0;
    if (even && (family.parity == Parity::kOddOnly || !config.include_even_w)) continue;
    values.push_back(w);
  }
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  std::vector<std::vector<unsigned>> out;
  std::vector<unsigned> prefix;
  cartesian(values, family.w_arity, prefix, out);
  return out;
}

SweepResult run_sweep(const SweepConfig& config, std::span<const IdentityFamily> catalog) {
  validate(config);
  const auto families = resolve_families(config, catalog);

  std::vector<Case> cases;
  SweepResult result;
  unsigned max_w = 1;
  for (const IdentityFamily* fam : families) {
    const auto w_tuples = admissible_w_tuples(*fam, config);
    const auto ys = y_tuples(config.y_samples, fam->y_arity);
    const std::size_t before = cases.size();
    for (unsigned n = 0; n <= config.n_max; ++n) {
      for (const auto& w : w_tuples) {
        for (const auto& y : ys) cases.push_back({fam, n, w, y});
      }
    }
    for (const auto& w : w_tuples) {
      for (unsigned v : w) max_w = std::max(max_w, v);
    }
    ++result.summary.families_run;
    if (cases.size() == before) {
      result.summary.notes.push_back(std::string(to_string(fam->id)) + ": 0 admissible");
    }
  }

  // +1 leaves room for T_k(w), which perturbed evaluators in tests reach for.
  const EvalTables tables(std::max(config.n_max, 1u), max_w + 1);
  result.records.resize(cases.size());

  const unsigned workers =
      std::max(1u, std::min<unsigned>(config.jobs, static_cast<unsigned>(cases.size())));
  if (workers <= 1) {
    for (std::size_t i = 0; i < cases.size(); ++i) {
      result.records[i] = evaluate(cases[i], tables, config.series_oracle);
    }
  } else {
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < workers; ++t) {
      pool.emplace_back([&] {
        for (std::size_t i = next++; i < cases.size(); i = next++) {
          try {
            result.records[i] = evaluate(cases[i], tables, config.series_oracle);
          } catch (...) {
            const std::lock_guard lock(error_mutex);
            if (!error) error = std::current_exception();
          }
        }
      });
    }
    for (auto& th : pool) th.join();
    if (error) std::rethrow_exception(error);
  }

  result.summary.cases_run = result.records.size();
  result.summary.failures = static_cast<std::size_t>(
      std::count_if(result.records.begin(), result.records.end(),
                    [](const VerificationReport& r) { return !record_passes(r); }));
  return result;
}

std::optional<Rational> series_coefficient(FamilyId id, unsigned n, std::span<const unsigned> w,
                                           std::span<const Rational> y) {
  if (w.size() != 3) return std::nullopt;
  const std::array<unsigned, 3> w3{w[0], w[1], w[2]};
  switch (id) {
    case FamilyId::T1: return lambda_series(LambdaFamily::k23, 0, w3, y, n).coeff(n);
    case FamilyId::T2:
    case FamilyId::T5: return lambda_series(LambdaFamily::k23, 1, w3, y, n).coeff(n);
    case FamilyId::T8:
    case FamilyId::T11:
    case FamilyId::T14: return lambda_series(LambdaFamily::k23, 2, w3, y, n).coeff(n);
    case FamilyId::T16: return lambda_series(LambdaFamily::k12_0, 0, w3, y, n).coeff(n);
    case FamilyId::T17: return lambda_series(LambdaFamily::k12_1, 1, w3, y, n).coeff(n);
    default: return std::nullopt;
  }
}

bool record_passes(const VerificationReport& record) {
  if (!record.all_equal) return false;
  if (record.series_value && !record.variant_values.empty() &&
      *record.series_value != record.variant_values.front()) {
    return false;
  }
  return true;
}

int exit_code(const SweepSummary& summary) { return summary.failures == 0 ? 0 : 1; }

}  // namespace eulersym
