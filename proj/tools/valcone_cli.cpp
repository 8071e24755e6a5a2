// Command-line front end. Talks to the core exclusively through the C API
// in valcone/valcone.h; json.hpp is used only to render text summaries.
#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>

#include "valcone/valcone.h"

namespace {

using nlohmann::json;

constexpr int kExitInput = 2;

struct Options {
  std::string field = "rationals";
  std::uint64_t seed = 0;
  long budget = 0;
  std::string format = "structured";
  std::string out;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw CLI::ValidationError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

unsigned long parse_field(const std::string& field) {
  if (field == "rationals") return 0;
  if (field.rfind("prime:", 0) == 0) {
    try {
      return std::stoul(field.substr(6));
    } catch (const std::exception&) {
    }
  }
  throw CLI::ValidationError("--field expects 'rationals' or 'prime:p'");
}

void write_output(const Options& opt, const std::string& text) {
  if (opt.out.empty()) {
    std::cout << text;
    if (text.empty() || text.back() != '\n') std::cout << '\n';
    return;
  }
  std::ofstream out(opt.out, std::ios::binary);
  if (!out) throw CLI::ValidationError("cannot write " + opt.out);
  out << text;
}

using ConfigPtr = std::unique_ptr<vc_config, decltype(&vc_config_free)>;

ConfigPtr load_config(const std::string& path, int& status) {
  char* err = nullptr;
  vc_config* c = vc_config_parse(read_file(path).c_str(), &err);
  if (!c) {
    std::cerr << "error: " << (err ? err : "invalid configuration") << '\n';
    vc_string_free(err);
    status = kExitInput;
  }
  return ConfigPtr(c, vc_config_free);
}

std::string take(char* s) {
  std::string out = s ? s : "";
  vc_string_free(s);
  return out;
}

int report_error(int status, char* err) {
  std::cerr << "error: " << take(err) << '\n';
  return status;
}

std::string join(const json& arr) {
  std::string out;
  for (const json& e : arr) {
    if (!out.empty()) out += " ";
    out += e.is_string() ? e.get<std::string>() : e.dump();
  }
  return out;
}

std::string analyze_text(const std::string& payload) {
  const json doc = json::parse(payload);
  const json& inv = doc["invariants"];
  const json& fam = doc["d_family"];
  std::string out;
  out += "beta_bar: " + join(inv["beta_bar"]) + "\n";
  out += "puiseux:  " + join(inv["puiseux"]) + "\n";
  out += "e:        " + join(inv["e"]) + "\n";
  out += "N:        " + join(inv["N"]) + "\n";
  out += "mult:     " + join(inv["mult"]) + "\n";
  out += "d:        " + join(fam["d"]) + "\n";
  out += "self_int: " + join(fam["self_int"]) + "\n";
  out += "D_i.K_X:  " + join(doc["canonical_pairings"]) + "\n";
  return out;
}

std::string verdict_str(const json& v) {
  if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
  return v.get<std::string>();
}

std::string decide_text(const std::string& payload) {
  const json doc = json::parse(payload);
  const json& v = doc["verdicts"];
  std::string out;
  for (const char* key : {"nonpositive", "negative", "characteristic_cone_closed",
                          "cox_finitely_generated", "anticanonical_minus_infinity"})
    out += std::string(key) + ": " + verdict_str(v[key]) + "\n";
  return out;
}

std::string family_text(const json& rep) {
  std::string out = "(a=" + std::to_string(rep["a"].get<long>()) +
                    ", r=" + std::to_string(rep["r"].get<long>()) + ")";
  out += " d_m=" + rep["nonpositive"]["d_m"].get<std::string>();
  out += " D_m^2=" + rep["nonpositive"]["D_m_sq"].get<std::string>();
  out += " delta=" + join(rep["delta"]);
  out += rep["delta_obstructed"].get<bool>() ? " (obstructed)" : "";
  return out + "\n";
}

std::string sweep_text(const std::string& payload) {
  std::string out;
  for (const json& entry : json::parse(payload)) {
    if (entry.contains("report")) {
      out += family_text(entry["report"]);
    } else {
      out += "(a=" + std::to_string(entry["a"].get<long>()) +
             ", r=" + std::to_string(entry["r"].get<long>()) +
             ") skipped: " + entry["skipped"].get<std::string>() + "\n";
    }
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{std::string(vc_version()) +
               " - exact invariants and cone criteria of plane divisorial valuations"};
  app.require_subcommand(1);
  Options opt;

  std::string config_path, poly;
  long fam_a = 0, fam_r = 0;
  long a_min = 0, a_max = -1, r_span = 8;

  auto add_common = [&](CLI::App* sub, bool with_field) {
    sub->add_option("--format", opt.format, "text or structured")
        ->check(CLI::IsMember({"text", "structured"}));
    sub->add_option("--out", opt.out, "output path (default stdout)");
    if (with_field) {
      sub->add_option("--field", opt.field, "rationals or prime:p");
      sub->add_option("--seed", opt.seed, "realization seed");
    }
  };

  CLI::App* validate = app.add_subcommand("validate", "check a configuration file");
  validate->add_option("file", config_path)->required();

  CLI::App* analyze = app.add_subcommand("analyze", "invariants and divisor family");
  analyze->add_option("file", config_path)->required();
  add_common(analyze, false);

  CLI::App* decide = app.add_subcommand("decide", "run the theorem deciders");
  decide->add_option("file", config_path)->required();
  decide->add_option("--field", opt.field, "rationals or prime:p");
  add_common(decide, false);

  CLI::App* eval = app.add_subcommand("eval", "evaluate nu on a polynomial in x, y");
  eval->add_option("file", config_path)->required();
  eval->add_option("--poly", poly, "polynomial, e.g. \"x - y^2\"")->required();
  eval->add_option("--budget", opt.budget, "unused; reserved");
  add_common(eval, true);

  CLI::App* family = app.add_subcommand("family", "one Example-3 style family report");
  family->add_option("--a", fam_a)->required();
  family->add_option("--r", fam_r)->required();
  add_common(family, false);

  CLI::App* sweep = app.add_subcommand("sweep", "family reports for a <= a_max, r in [a, a+span]");
  sweep->add_option("--a-min", a_min)->required();
  sweep->add_option("--a-max", a_max)->required();
  sweep->add_option("--r-span", r_span, "r ranges over [a, a+span]");
  add_common(sweep, false);

  CLI::App* dot = app.add_subcommand("export-dot", "dual graph in DOT format");
  dot->add_option("file", config_path)->required();
  dot->add_option("--out", opt.out, "output path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitInput;
  }

  try {
    char* out = nullptr;
    char* err = nullptr;

    if (validate->parsed()) {
      int status = 0;
      ConfigPtr c = load_config(config_path, status);
      if (!c) return status;
      std::cout << "ok\n";
      return 0;
    }

    if (analyze->parsed() || decide->parsed() || dot->parsed() || eval->parsed()) {
      int status = 0;
      ConfigPtr c = load_config(config_path, status);
      if (!c) return status;

      if (analyze->parsed()) {
        if (int rc = vc_analyze(c.get(), &out, &err)) return report_error(rc, err);
        const std::string payload = take(out);
        write_output(opt, opt.format == "text" ? analyze_text(payload) : payload);
        return 0;
      }
      if (decide->parsed()) {
        const unsigned long p = parse_field(opt.field);
        if (int rc = vc_decide(c.get(), static_cast<unsigned>(p), &out, &err))
          return report_error(rc, err);
        const std::string payload = take(out);
        write_output(opt, opt.format == "text" ? decide_text(payload) : payload);
        return 0;
      }
      if (dot->parsed()) {
        if (int rc = vc_export_dot(c.get(), &out, &err)) return report_error(rc, err);
        write_output(opt, take(out));
        return 0;
      }
      // eval
      if (int rc = vc_eval(c.get(), poly.c_str(), parse_field(opt.field), opt.seed, &out, &err))
        return report_error(rc, err);
      const std::string payload = take(out);
      if (opt.format == "text") {
        const json doc = json::parse(payload);
        write_output(opt, "nu(" + doc["poly"].get<std::string>() +
                              ") = " + doc["value"].get<std::string>() + "\n");
      } else {
        write_output(opt, payload);
      }
      return 0;
    }

    if (family->parsed()) {
      if (int rc = vc_family(fam_a, fam_r, &out, &err)) return report_error(rc, err);
      const std::string payload = take(out);
      write_output(opt, opt.format == "text" ? family_text(json::parse(payload)) : payload);
      return 0;
    }

    // sweep
    std::vector<long> as, rs;
    for (long a = a_min; a <= a_max; ++a)
      for (long r = a; r <= a + r_span; ++r) {
        as.push_back(a);
        rs.push_back(r);
      }
    if (int rc = vc_sweep(as.data(), rs.data(), static_cast<int>(as.size()), &out, &err))
      return report_error(rc, err);
    const std::string payload = take(out);
    write_output(opt, opt.format == "text" ? sweep_text(payload) : payload);
    return 0;
  } catch (const CLI::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  }
}
