#include "valcone/report.hpp"

#include <json.hpp>

#include "valcone/parse.hpp"

namespace valcone {

using nlohmann::json;

namespace {

json int_vec(const std::vector<Int>& v) {
  json out = json::array();
  for (const Int& z : v) out.push_back(to_string(z));
  return out;
}

json rat_vec(const std::vector<Rat>& v) {
  json out = json::array();
  for (const Rat& q : v) out.push_back(to_string(q));
  return out;
}

std::vector<Int> int_vec(const json& j) {
  std::vector<Int> out;
  for (const json& e : j) out.push_back(Int(e.get<std::string>()));
  return out;
}

std::vector<Rat> rat_vec(const json& j) {
  std::vector<Rat> out;
  for (const json& e : j) out.push_back(parse_rational(e.get<std::string>()));
  return out;
}

json config_json(const Configuration& c) { return json::parse(emit_configuration(c)); }

Configuration config_from(const json& j) { return parse_configuration(j.dump()); }

json divisor_json(const DivisorClass& d) { return rat_vec(d.coeffs); }

json family_json(const DFamily& f) {
  json divisors = json::array();
  for (const DivisorClass& d : f.divisors) divisors.push_back(divisor_json(d));
  return json{{"d", int_vec(f.d)}, {"divisors", divisors}, {"self_int", int_vec(f.self_int)}};
}

DFamily family_from(const json& j) {
  DFamily f;
  f.d = int_vec(j.at("d"));
  for (const json& e : j.at("divisors")) f.divisors.push_back({rat_vec(e)});
  f.self_int = int_vec(j.at("self_int"));
  return f;
}

json invariants_json(const ContactInvariants& inv) {
  return json{{"beta_bar", int_vec(inv.beta_bar)},
              {"puiseux", rat_vec(inv.puiseux)},
              {"e", int_vec(inv.e)},
              {"N", int_vec(inv.N)},
              {"mult", int_vec(inv.mult)}};
}

ContactInvariants invariants_from(const json& j) {
  ContactInvariants inv;
  inv.beta_bar = int_vec(j.at("beta_bar"));
  inv.puiseux = rat_vec(j.at("puiseux"));
  inv.e = int_vec(j.at("e"));
  inv.N = int_vec(j.at("N"));
  inv.mult = int_vec(j.at("mult"));
  return inv;
}

json nonpositive_json(const NonPositiveVerdict& v) {
  return json{{"decision", v.decision},
              {"d_m", to_string(v.d_m)},
              {"beta_last", to_string(v.beta_last)},
              {"D_m_sq", to_string(v.D_m_sq)}};
}

NonPositiveVerdict nonpositive_from(const json& j) {
  NonPositiveVerdict v;
  v.decision = j.at("decision").get<bool>();
  v.d_m = Int(j.at("d_m").get<std::string>());
  v.beta_last = Int(j.at("beta_last").get<std::string>());
  v.D_m_sq = Int(j.at("D_m_sq").get<std::string>());
  return v;
}

const char* basis_name(IitakaClass::Basis b) {
  switch (b) {
    case IitakaClass::Basis::Big: return "big";
    case IitakaClass::Basis::AmRealizable: return "am-realizable";
    case IitakaClass::Basis::AmObstructed: return "am-obstructed";
  }
  return "big";
}

IitakaClass::Basis basis_from(const std::string& s) {
  if (s == "am-realizable") return IitakaClass::Basis::AmRealizable;
  if (s == "am-obstructed") return IitakaClass::Basis::AmObstructed;
  return IitakaClass::Basis::Big;
}

json kappa_json(const IitakaClass& k) {
  json out{{"kappa", k.kappa},
           {"basis_of_decision", basis_name(k.basis)},
           {"self_int", to_string(k.self_int)}};
  if (k.delta) out["delta"] = int_vec(k.delta->delta);
  return out;
}

IitakaClass kappa_from(const json& j) {
  IitakaClass k;
  k.kappa = j.at("kappa").get<int>();
  k.basis = basis_from(j.at("basis_of_decision").get<std::string>());
  k.self_int = Int(j.at("self_int").get<std::string>());
  if (j.contains("delta")) k.delta = DeltaSequence{int_vec(j.at("delta"))};
  return k;
}

json negative_json(const NegativeVerdict& v) {
  json out{{"decision", v.decision}, {"nonpositive", nonpositive_json(v.nonpositive)}};
  if (v.boundary_kappa) out["boundary_kappa"] = kappa_json(*v.boundary_kappa);
  return out;
}

NegativeVerdict negative_from(const json& j) {
  NegativeVerdict v;
  v.decision = j.at("decision").get<bool>();
  v.nonpositive = nonpositive_from(j.at("nonpositive"));
  if (j.contains("boundary_kappa")) v.boundary_kappa = kappa_from(j.at("boundary_kappa"));
  return v;
}

json cox_json(const CoxVerdict& v) {
  json entries = json::array();
  for (const CoxEntry& e : v.entries) {
    json entry{{"index", e.index}, {"self_int", to_string(e.self_int)}, {"ok", e.ok}};
    if (e.kappa) entry["kappa"] = kappa_json(*e.kappa);
    entries.push_back(entry);
  }
  return json{{"decision", v.decision}, {"entries", entries}};
}

CoxVerdict cox_from(const json& j) {
  CoxVerdict v;
  v.decision = j.at("decision").get<bool>();
  for (const json& entry : j.at("entries")) {
    CoxEntry e;
    e.index = entry.at("index").get<int>();
    e.self_int = Int(entry.at("self_int").get<std::string>());
    e.ok = entry.at("ok").get<bool>();
    if (entry.contains("kappa")) e.kappa = kappa_from(entry.at("kappa"));
    v.entries.push_back(e);
  }
  return v;
}

json anticanonical_json(const AnticanonicalVerdict& v) {
  json out{{"decision", v.decision}, {"witness_pairing", to_string(v.witness_pairing)}};
  if (v.witness_index) out["witness_index"] = *v.witness_index;
  return out;
}

AnticanonicalVerdict anticanonical_from(const json& j) {
  AnticanonicalVerdict v;
  v.decision = j.at("decision").get<bool>();
  v.witness_pairing = parse_rational(j.at("witness_pairing").get<std::string>());
  if (j.contains("witness_index")) v.witness_index = j.at("witness_index").get<int>();
  return v;
}

json family_report_json(const FamilyReport& r) {
  return json{{"a", r.a},
              {"r", r.r},
              {"config", config_json(r.config)},
              {"nonpositive", nonpositive_json(r.nonpositive)},
              {"negative", negative_json(r.negative)},
              {"cox", cox_json(r.cox)},
              {"anticanonical", anticanonical_json(r.anticanonical)},
              {"delta", int_vec(r.delta.delta)},
              {"delta_obstructed", r.delta_obstructed}};
}

FamilyReport family_report_from(const json& j) {
  FamilyReport r;
  r.a = j.at("a").get<long>();
  r.r = j.at("r").get<long>();
  r.config = config_from(j.at("config"));
  r.nonpositive = nonpositive_from(j.at("nonpositive"));
  r.negative = negative_from(j.at("negative"));
  r.cox = cox_from(j.at("cox"));
  r.anticanonical = anticanonical_from(j.at("anticanonical"));
  r.delta = DeltaSequence{int_vec(j.at("delta"))};
  r.delta_obstructed = j.at("delta_obstructed").get<bool>();
  return r;
}

}  // namespace

AnalyzeReport analyze(const Configuration& config) {
  AnalyzeReport rep;
  rep.config = validate(config);
  rep.invariants = contact_invariants(config);
  rep.proximity = proximity_matrix(config);
  rep.family = d_family(config);
  const DivisorClass K = canonical_class(config.m());
  for (int i = 1; i <= config.m(); ++i)
    rep.canonical_pairings.push_back(intersect(rep.family.divisors[i], K));
  return rep;
}

DecideReport decide(const Configuration& config, unsigned characteristic) {
  DecideReport rep;
  rep.config = validate(config);
  rep.nonpositive = decide_nonpositive(config);
  rep.applicable = rep.nonpositive.decision;
  if (rep.applicable) {
    rep.negative = decide_negative(config, characteristic);
    rep.cox = decide_cox(config, characteristic);
    rep.anticanonical = anticanonical_negative_infinity(config);
  }
  return rep;
}

std::vector<SweepEntry> sweep(const std::vector<std::pair<long, long>>& pairs) {
  std::vector<SweepEntry> out;
  for (const auto& [a, r] : pairs) {
    SweepEntry entry;
    entry.a = a;
    entry.r = r;
    try {
      entry.report = am_family(a, r);
    } catch (const Error& e) {
      entry.skip_reason = e.what();
    }
    out.push_back(std::move(entry));
  }
  return out;
}

std::string emit_json(const AnalyzeReport& report) {
  json proximity = json::array();
  for (const auto& row : report.proximity) proximity.push_back(int_vec(row));
  const json doc{{"config", config_json(report.config)},
                 {"invariants", invariants_json(report.invariants)},
                 {"proximity", proximity},
                 {"d_family", family_json(report.family)},
                 {"canonical_pairings", rat_vec(report.canonical_pairings)}};
  return doc.dump(2);
}

AnalyzeReport parse_analyze_report(const std::string& text) {
  const json doc = json::parse(text);
  AnalyzeReport rep;
  rep.config = config_from(doc.at("config"));
  rep.invariants = invariants_from(doc.at("invariants"));
  for (const json& row : doc.at("proximity")) rep.proximity.push_back(int_vec(row));
  rep.family = family_from(doc.at("d_family"));
  rep.canonical_pairings = rat_vec(doc.at("canonical_pairings"));
  return rep;
}

std::string emit_json(const DecideReport& report) {
  json verdicts{{"nonpositive", report.nonpositive.decision}};
  auto verdict_or_na = [&](const char* key, bool have, bool value) {
    if (have)
      verdicts[key] = value;
    else
      verdicts[key] = "not-applicable";
  };
  verdict_or_na("negative", report.negative.has_value(),
                report.negative && report.negative->decision);
  verdict_or_na("characteristic_cone_closed", report.cox.has_value(),
                report.cox && report.cox->decision);
  verdict_or_na("cox_finitely_generated", report.cox.has_value(),
                report.cox && report.cox->decision);
  verdict_or_na("anticanonical_minus_infinity", report.anticanonical.has_value(),
                report.anticanonical && report.anticanonical->decision);
  json certificates{{"nonpositive", nonpositive_json(report.nonpositive)}};
  if (report.negative) certificates["negative"] = negative_json(*report.negative);
  if (report.cox) certificates["cox"] = cox_json(*report.cox);
  if (report.anticanonical)
    certificates["anticanonical"] = anticanonical_json(*report.anticanonical);
  const json doc{{"config", config_json(report.config)},
                 {"applicable", report.applicable},
                 {"verdicts", verdicts},
                 {"certificates", certificates}};
  return doc.dump(2);
}

DecideReport parse_decide_report(const std::string& text) {
  const json doc = json::parse(text);
  DecideReport rep;
  rep.config = config_from(doc.at("config"));
  rep.applicable = doc.at("applicable").get<bool>();
  const json& certs = doc.at("certificates");
  rep.nonpositive = nonpositive_from(certs.at("nonpositive"));
  if (certs.contains("negative")) rep.negative = negative_from(certs.at("negative"));
  if (certs.contains("cox")) rep.cox = cox_from(certs.at("cox"));
  if (certs.contains("anticanonical"))
    rep.anticanonical = anticanonical_from(certs.at("anticanonical"));
  return rep;
}

std::string emit_json(const FamilyReport& report) { return family_report_json(report).dump(2); }

FamilyReport parse_family_report(const std::string& text) {
  return family_report_from(json::parse(text));
}

std::string emit_json(const std::vector<SweepEntry>& entries) {
  json arr = json::array();
  for (const SweepEntry& e : entries) {
    json entry{{"a", e.a}, {"r", e.r}};
    if (e.report)
      entry["report"] = family_report_json(*e.report);
    else
      entry["skipped"] = e.skip_reason;
    arr.push_back(entry);
  }
  return arr.dump(2);
}

std::vector<SweepEntry> parse_sweep_report(const std::string& text) {
  std::vector<SweepEntry> out;
  for (const json& entry : json::parse(text)) {
    SweepEntry e;
    e.a = entry.at("a").get<long>();
    e.r = entry.at("r").get<long>();
    if (entry.contains("report"))
      e.report = family_report_from(entry.at("report"));
    else
      e.skip_reason = entry.at("skipped").get<std::string>();
    out.push_back(std::move(e));
  }
  return out;
}

}  // namespace valcone
