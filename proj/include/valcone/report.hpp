#pragma once

#include <optional>
#include <string>
#include <vector>

#include "valcone/contact.hpp"
#include "valcone/criteria.hpp"

namespace valcone {

// Aggregated invariants of a configuration: contact data, proximity
// matrix, divisor family and canonical pairings D_i . K_X.
struct AnalyzeReport {
  Configuration config;
  ContactInvariants invariants;
  std::vector<std::vector<Int>> proximity;
  DFamily family;
  std::vector<Rat> canonical_pairings;  // i = 1..m
  bool operator==(const AnalyzeReport&) const = default;
};

AnalyzeReport analyze(const Configuration& config);

// Full verdict set. Theorems 2 and 3 presuppose nonpositivity; when it
// fails, the dependent verdicts are reported as not applicable.
struct DecideReport {
  Configuration config;
  NonPositiveVerdict nonpositive;
  bool applicable = false;
  std::optional<NegativeVerdict> negative;
  std::optional<CoxVerdict> cox;  // also: characteristic cone closed
  std::optional<AnticanonicalVerdict> anticanonical;
  bool operator==(const DecideReport&) const = default;
};

DecideReport decide(const Configuration& config, unsigned characteristic = 0);

// One entry of an Example-3 family sweep; skipped pairs carry the violated
// precondition instead of a report.
struct SweepEntry {
  long a = 0;
  long r = 0;
  std::optional<FamilyReport> report;
  std::string skip_reason;
  bool operator==(const SweepEntry&) const = default;
};

std::vector<SweepEntry> sweep(const std::vector<std::pair<long, long>>& pairs);

// Structured (JSON) serialization; emit then parse is the identity.
std::string emit_json(const AnalyzeReport& report);
std::string emit_json(const DecideReport& report);
std::string emit_json(const FamilyReport& report);
std::string emit_json(const std::vector<SweepEntry>& entries);

AnalyzeReport parse_analyze_report(const std::string& text);
DecideReport parse_decide_report(const std::string& text);
FamilyReport parse_family_report(const std::string& text);
std::vector<SweepEntry> parse_sweep_report(const std::string& text);

}  // namespace valcone
