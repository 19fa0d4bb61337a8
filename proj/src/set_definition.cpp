#include <algorithm>
#include <charconv>
#include <cstdio>
#include <map>
#include <sstream>
#include <string>

#include "riesz/errors.hpp"
#include "riesz/sets.hpp"

namespace riesz {

namespace {

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return std::string(s.substr(first, last - first + 1));
}

std::string unquote(std::string v) {
  if (v.size() >= 2 && (v.front() == '"' || v.front() == '\'') && v.back() == v.front()) {
    return v.substr(1, v.size() - 2);
  }
  return v;
}

std::string where(std::size_t line) { return "line " + std::to_string(line) + ": "; }

double parse_number(const std::string& token, std::size_t line) {
  const std::string t = trim(token);
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), value);
  if (t.empty() || ec != std::errc() || ptr != t.data() + t.size()) {
    throw ParseError(where(line) + "expected a number, got '" + t + "'");
  }
  return value;
}

std::vector<double> parse_list(std::string value, std::size_t line) {
  value = trim(value);
  if (!value.empty() && value.front() == '[') {
    if (value.back() != ']') throw ParseError(where(line) + "unterminated '['");
    value = value.substr(1, value.size() - 2);
  }
  std::vector<double> out;
  std::stringstream ss(value);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(parse_number(item, line));
  if (out.empty()) throw ParseError(where(line) + "expected a comma-separated list of numbers");
  return out;
}

struct Entry {
  std::string value;
  std::size_t line;
};

std::string format_number(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string format_list(const std::vector<double>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ", ";
    out += format_number(v[i]);
  }
  return out;
}

}  // namespace

CompactSetModel parse_set_definition(std::string_view text) {
  std::map<std::string, Entry> keys;
  std::vector<Entry> balls;
  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t line = 0;
  while (std::getline(in, raw)) {
    ++line;
    if (const auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    const std::string content = trim(raw);
    if (content.empty()) continue;
    const auto eq = content.find('=');
    if (eq == std::string::npos) throw ParseError(where(line) + "expected 'key = value'");
    const std::string key = trim(std::string_view(content).substr(0, eq));
    const std::string value = unquote(trim(std::string_view(content).substr(eq + 1)));
    if (key == "ball") {
      balls.push_back({value, line});
      continue;
    }
    static const char* const known[] = {"shape", "dim", "center", "radius", "lower", "upper", "holder_A", "holder_s", "holder"};
    if (std::find(std::begin(known), std::end(known), key) == std::end(known)) {
      throw ParseError(where(line) + "unknown key '" + key + "'");
    }
    if (!keys.emplace(key, Entry{value, line}).second) throw ParseError(where(line) + "duplicate key '" + key + "'");
  }

  auto require = [&](const std::string& key) -> const Entry& {
    const auto it = keys.find(key);
    if (it == keys.end()) throw ParseError("missing required key '" + key + "'");
    return it->second;
  };

  const std::string shape = require("shape").value;
  Shape parsed;
  try {
    if (shape == "sphere" || shape == "ball") {
      const auto& c = require("center");
      const auto& r = require("radius");
      Point center = parse_list(c.value, c.line);
      const double radius = parse_number(r.value, r.line);
      if (shape == "sphere") parsed = SphereSurface{center, radius};
      else parsed = Ball{center, radius};
    } else if (shape == "box") {
      const auto& lo = require("lower");
      const auto& hi = require("upper");
      parsed = Box{parse_list(lo.value, lo.line), parse_list(hi.value, hi.line)};
    } else if (shape == "union") {
      if (balls.empty()) throw ParseError("union needs at least one 'ball = c1, ..., cd, radius' line");
      BallUnion u;
      for (const auto& b : balls) {
        auto values = parse_list(b.value, b.line);
        if (values.size() < 2) throw ParseError(where(b.line) + "ball needs a center and a radius");
        const double radius = values.back();
        values.pop_back();
        u.balls.push_back(Ball{values, radius});
      }
      parsed = u;
    } else {
      throw ParseError(where(require("shape").line) + "unknown shape '" + shape + "' (sphere, ball, box, union)");
    }
    if (shape != "union" && !balls.empty()) throw ParseError(where(balls.front().line) + "'ball' is only valid for shape = union");

    std::optional<HolderData> holder;
    const bool has_a = keys.count("holder_A") > 0, has_s = keys.count("holder_s") > 0;
    const bool disabled = keys.count("holder") > 0;
    if (disabled && keys.at("holder").value != "none") {
      throw ParseError(where(keys.at("holder").line) + "'holder' accepts only 'none'");
    }
    if (has_a != has_s) throw ParseError("holder_A and holder_s must be given together");
    if (disabled && has_a) throw ParseError("'holder = none' conflicts with holder_A/holder_s");

    std::optional<CompactSetModel> set;
    if (has_a) {
      holder = HolderData{parse_number(keys.at("holder_A").value, keys.at("holder_A").line),
                          parse_number(keys.at("holder_s").value, keys.at("holder_s").line)};
      set.emplace(parsed, holder);
    } else if (disabled) {
      set.emplace(parsed, std::nullopt);
    } else {
      set.emplace(parsed);
    }
    if (const auto it = keys.find("dim"); it != keys.end()) {
      const double d = parse_number(it->second.value, it->second.line);
      if (d != static_cast<double>(set->dim())) {
        throw ParseError(where(it->second.line) + "dim does not match the coordinates given");
      }
    }
    return *set;
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("invalid set definition: ") + e.what());
  }
}

std::string format_set_definition(const CompactSetModel& set) {
  std::ostringstream out;
  out << "shape = " << set.shape_name() << "\n";
  out << "dim = " << set.dim() << "\n";
  if (const auto* b = std::get_if<Ball>(&set.shape())) {
    out << "center = " << format_list(b->center) << "\nradius = " << format_number(b->radius) << "\n";
  } else if (const auto* s = std::get_if<SphereSurface>(&set.shape())) {
    out << "center = " << format_list(s->center) << "\nradius = " << format_number(s->radius) << "\n";
  } else if (const auto* x = std::get_if<Box>(&set.shape())) {
    out << "lower = " << format_list(x->lower) << "\nupper = " << format_list(x->upper) << "\n";
  } else if (const auto* u = std::get_if<BallUnion>(&set.shape())) {
    for (const auto& ball : u->balls) {
      auto values = ball.center;
      values.push_back(ball.radius);
      out << "ball = " << format_list(values) << "\n";
    }
  }
  if (set.holder()) {
    out << "holder_A = " << format_number(set.holder()->A) << "\nholder_s = " << format_number(set.holder()->s) << "\n";
  } else {
    out << "holder = none\n";
  }
  return out.str();
}

}  // namespace riesz
