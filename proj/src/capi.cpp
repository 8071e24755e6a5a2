#include "valcone/valcone.h"

#include <json.hpp>

#include <cstdlib>
#include <cstring>
#include <string>

#include "valcone/dot.hpp"
#include "valcone/germ.hpp"
#include "valcone/parse.hpp"
#include "valcone/report.hpp"

using namespace valcone;

struct vc_config {
  Configuration config;
};

namespace {

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void set_err(char** err, const std::string& message) {
  if (err) *err = dup_string(message);
}

int status_of(const Error& e) {
  switch (e.code()) {
    case ErrorCode::Unsupported:
    case ErrorCode::FieldTooSmall:
      return VC_ERR_UNSUPPORTED;
    default:
      return VC_ERR_INPUT;
  }
}

template <class Fn>
int run(char** out, char** err, Fn&& fn) {
  try {
    const std::string result = fn();
    if (out) *out = dup_string(result);
    return VC_OK;
  } catch (const Error& e) {
    set_err(err, e.what());
    return status_of(e);
  } catch (const std::exception& e) {
    set_err(err, e.what());
    return VC_ERR_INPUT;
  }
}

Field make_field(unsigned long p) { return p == 0 ? Field::rationals() : Field::prime(p); }

}  // namespace

extern "C" {

const char* vc_version(void) { return "valcone 1.0.0"; }

vc_config* vc_config_parse(const char* json, char** err) {
  try {
    return new vc_config{parse_configuration(json ? json : "")};
  } catch (const Error& e) {
    set_err(err, e.what());
    return nullptr;
  } catch (const std::exception& e) {
    set_err(err, e.what());
    return nullptr;
  }
}

void vc_config_free(vc_config* config) { delete config; }

int vc_analyze(const vc_config* config, char** out_json, char** err) {
  return run(out_json, err, [&] { return emit_json(analyze(config->config)); });
}

int vc_decide(const vc_config* config, unsigned characteristic, char** out_json, char** err) {
  return run(out_json, err, [&] { return emit_json(decide(config->config, characteristic)); });
}

int vc_export_dot(const vc_config* config, char** out, char** err) {
  return run(out, err, [&] { return export_dot(config->config); });
}

int vc_family(long a, long r, char** out_json, char** err) {
  return run(out_json, err, [&] { return emit_json(am_family(a, r)); });
}

int vc_sweep(const long* a, const long* r, int count, char** out_json, char** err) {
  return run(out_json, err, [&] {
    std::vector<std::pair<long, long>> pairs;
    for (int i = 0; i < count; ++i) pairs.push_back({a[i], r[i]});
    return emit_json(sweep(pairs));
  });
}

int vc_eval(const vc_config* config, const char* poly, unsigned long field_prime,
            uint64_t seed, char** out_json, char** err) {
  return run(out_json, err, [&] {
    const Field field = make_field(field_prime);
    const GermPoly f = parse_polynomial(poly ? poly : "", 'x', 'y', field);
    const RealizedConfiguration real = realize(config->config, field, seed);
    const nlohmann::json doc{{"poly", emit_polynomial(f, 'x', 'y')},
                             {"value", to_string(poly_valuation(real, f))},
                             {"seed", seed}};
    return doc.dump(2);
  });
}

int vc_witness(const vc_config* config, int positive_mode, long budget,
               unsigned long field_prime, uint64_t seed, char** out_json, char** err) {
  return run(out_json, err, [&] {
    const Field field = make_field(field_prime);
    const RealizedConfiguration real = realize(config->config, field, seed);
    const WitnessResult res = witness_search(
        real, positive_mode ? WitnessMode::Positive : WitnessMode::Zero, Int(budget));
    nlohmann::json doc{{"mode", positive_mode ? "positive" : "zero"},
                       {"found", res.f.has_value()},
                       {"budget", to_string(res.budget)},
                       {"seed", seed}};
    if (res.f) {
      doc["f"] = emit_polynomial(*res.f, 'x', 'y');
      doc["value"] = to_string(res.value);
    }
    return doc.dump(2);
  });
}

void vc_string_free(char* s) { std::free(s); }

}  // extern "C"
