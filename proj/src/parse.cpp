#include "valcone/parse.hpp"

#include <json.hpp>

#include <algorithm>
#include <cctype>

namespace valcone {

using nlohmann::json;

Configuration parse_configuration(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
  if (!doc.is_object() || !doc.contains("m") || !doc.contains("s") || !doc.contains("points"))
    throw Error(ErrorCode::ParseError, "expected an object with fields m, s, points");
  if (!doc["m"].is_number_integer() || !doc["s"].is_number_integer() ||
      !doc["points"].is_array())
    throw Error(ErrorCode::ParseError, "m and s must be integers, points an array");
  const long m = doc["m"].get<long>();
  Configuration config;
  config.s = doc["s"].get<int>();
  config.points.push_back(Point::origin());
  for (const json& entry : doc["points"]) {
    if (entry.is_string() && entry.get<std::string>() == "F") {
      config.points.push_back(Point::free_point());
    } else if (entry.is_object() && entry.contains("S") && entry["S"].is_number_integer()) {
      config.points.push_back(Point::satellite(entry["S"].get<int>()));
    } else {
      throw Error(ErrorCode::ParseError, "points entries must be \"F\" or {\"S\": j}");
    }
  }
  if (m != config.m())
    throw Error(ErrorCode::ParseError,
                "m = " + std::to_string(m) + " does not match " +
                    std::to_string(config.m() - 1) + " points entries plus the origin");
  validate(config);
  return config;
}

std::string emit_configuration(const Configuration& config) {
  json doc;
  doc["m"] = config.m();
  doc["s"] = config.s;
  json points = json::array();
  for (int i = 2; i <= config.m(); ++i) {
    const Point& p = config.point(i);
    if (p.is_satellite())
      points.push_back(json{{"S", p.target}});
    else
      points.push_back("F");
  }
  doc["points"] = points;
  return doc.dump();
}

namespace {

struct Lexer {
  const std::string& text;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }
  bool eof() {
    skip_ws();
    return pos >= text.size();
  }
  char peek() {
    skip_ws();
    return text[pos];
  }
  bool accept(char c) {
    if (!eof() && peek() == c) {
      ++pos;
      return true;
    }
    return false;
  }
  std::string number() {
    skip_ws();
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == start) throw Error(ErrorCode::ParseError, "expected a number at offset " +
                                                             std::to_string(pos));
    return text.substr(start, pos - start);
  }
};

}  // namespace

GermPoly parse_polynomial(const std::string& text, char var0, char var1, const Field& k) {
  Lexer lex{text};
  GermPoly out;
  bool first = true;
  while (!lex.eof()) {
    Rat sign(1);
    if (lex.accept('+')) {
    } else if (lex.accept('-')) {
      sign = -1;
    } else if (!first) {
      throw Error(ErrorCode::ParseError,
                  "expected + or - between terms at offset " + std::to_string(lex.pos));
    }
    first = false;
    if (lex.eof()) throw Error(ErrorCode::ParseError, "dangling sign");

    Rat coeff(1);
    bool saw_factor = false;
    if (std::isdigit(static_cast<unsigned char>(lex.peek()))) {
      const std::string num = lex.number();
      std::string den = "1";
      if (lex.accept('/')) den = lex.number();
      coeff = parse_rational(num + "/" + den);
      saw_factor = true;
    }
    int e0 = 0, e1 = 0;
    while (!lex.eof()) {
      if (lex.accept('*')) continue;
      const char c = lex.peek();
      int* exp = nullptr;
      if (c == var0) exp = &e0;
      if (c == var1) exp = &e1;
      if (!exp) break;
      ++lex.pos;
      int e = 1;
      if (lex.accept('^')) e = std::stoi(lex.number());
      *exp += e;
      saw_factor = true;
    }
    if (!saw_factor)
      throw Error(ErrorCode::ParseError,
                  "expected a coefficient or variable at offset " + std::to_string(lex.pos));
    const Rat c = k.reduce(sign * coeff);
    if (c == 0) continue;
    Rat& dst = out.terms[{e0, e1}];
    dst = k.add(dst, c);
    if (dst == 0) out.terms.erase({e0, e1});
  }
  return out;
}

std::string emit_polynomial(const GermPoly& f, char var0, char var1) {
  if (f.is_zero()) return "0";
  // Highest total degree first, then lexicographic in the first variable.
  std::vector<std::pair<std::pair<int, int>, Rat>> terms(f.terms.begin(), f.terms.end());
  std::sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) {
    const int da = a.first.first + a.first.second, db = b.first.first + b.first.second;
    if (da != db) return da > db;
    return a.first.first > b.first.first;
  });
  std::string out;
  for (const auto& [key, c] : terms) {
    const Rat a = c > 0 ? c : Rat(-c);
    out += out.empty() ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + ");
    std::string factors;
    auto add_var = [&](char v, int e) {
      if (e == 0) return;
      if (!factors.empty()) factors += "*";
      factors += v;
      if (e > 1) factors += "^" + std::to_string(e);
    };
    add_var(var0, key.first);
    add_var(var1, key.second);
    if (factors.empty()) {
      out += to_string(a);
    } else {
      if (a != 1) out += to_string(a) + "*";
      out += factors;
    }
  }
  return out;
}

}  // namespace valcone
