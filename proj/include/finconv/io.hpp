#pragma once

// JSON interchange.
//
// Convergence:  {"points": ["a","b"], "lim": {"a": ["a"], "a,b": ["a","b"]}}
//          or:  {"points": ["a","b"], "vicinity": {"a": ["a"], "b": ["a","b"]}}
// Missing "lim" keys mean an empty limit. Subset keys list labels in carrier
// order, joined by ','.
// Map:          {"map": {"a": "p", "b": "q"}}
// Family:       {"family": [["a"], ["a","b"]]} or a bare array of arrays.

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "maps.hpp"

namespace finconv::io {

using json = nlohmann::ordered_json;

/// Bad input located in a file.
class input_error : public invalid_input {
 public:
  input_error(const std::string& path, std::size_t line, std::size_t column, const std::string& msg)
      : invalid_input(path + ":" + std::to_string(line) + ":" + std::to_string(column) + ": " + msg),
        line_(line),
        column_(column) {}
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_, column_;
};

struct Document {
  std::string path;
  std::string text;
  json value;

  /// 1-based line and column of a byte offset.
  std::pair<std::size_t, std::size_t> position(std::size_t offset) const {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    return {line, col};
  }

  /// Location of the first quoted occurrence of `key` after `after`, else of `after`.
  std::pair<std::size_t, std::size_t> locate(const std::string& key, const std::string& after = "") const {
    std::size_t from = 0;
    if (!after.empty()) {
      const auto a = text.find("\"" + after + "\"");
      if (a != std::string::npos) from = a;
    }
    const auto k = text.find("\"" + key + "\"", from);
    return position(k != std::string::npos ? k : from);
  }

  [[noreturn]] void fail(const std::string& msg, const std::string& key = "", const std::string& after = "") const {
    const auto [l, c] = key.empty() && after.empty() ? std::pair<std::size_t, std::size_t>{1, 1} : locate(key, after);
    throw input_error(path, l, c, msg);
  }
};

inline Document parse(std::string text, std::string path = "<input>") {
  Document d{std::move(path), std::move(text), {}};
  try {
    d.value = json::parse(d.text);
  } catch (const json::parse_error& e) {
    const auto [l, c] = d.position(e.byte > 0 ? e.byte - 1 : 0);
    std::string msg = e.what();
    if (const auto p = msg.find("syntax error"); p != std::string::npos) msg = msg.substr(p);
    throw input_error(d.path, l, c, "malformed JSON: " + msg);
  }
  return d;
}

inline Document load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw invalid_input("cannot open '" + path + "'");
  std::ostringstream s;
  s << in.rdbuf();
  return parse(s.str(), path);
}

inline std::string subset_key(const Carrier& c, mask_t a) {
  std::string s;
  for_each_point(a, [&](unsigned x) {
    if (!s.empty()) s += ',';
    s += c.label(x);
  });
  return s;
}

inline json subset_json(const Carrier& c, mask_t a) {
  json out = json::array();
  for_each_point(a, [&](unsigned x) { out.push_back(c.label(x)); });
  return out;
}

namespace detail {

inline unsigned point_of(const Document& d, const Carrier& c, const std::string& label, const std::string& near) {
  const auto x = c.find(label);
  if (!x) d.fail("unknown point '" + label + "'", label, near);
  return *x;
}

inline mask_t subset_of_json(const Document& d, const Carrier& c, const json& v, const std::string& near) {
  if (!v.is_array()) d.fail("expected an array of point labels", near);
  mask_t m = 0;
  for (const auto& e : v) {
    if (!e.is_string()) d.fail("point labels must be strings", near);
    m |= point_mask(point_of(d, c, e.get<std::string>(), near));
  }
  return m;
}

inline mask_t subset_of_key(const Document& d, const Carrier& c, const std::string& key) {
  mask_t m = 0;
  std::stringstream s(key);
  for (std::string part; std::getline(s, part, ',');) m |= point_mask(point_of(d, c, part, key));
  if (m == 0) d.fail("empty subset key", key);
  return m;
}

}  // namespace detail

inline std::shared_ptr<const Carrier> carrier_from_json(const Document& d, const json& v) {
  if (!v.is_object() || !v.contains("points")) d.fail("missing \"points\"");
  const auto& pts = v["points"];
  if (!pts.is_array()) d.fail("\"points\" must be an array", "points");
  std::vector<std::string> labels;
  for (const auto& p : pts) {
    if (!p.is_string()) d.fail("point labels must be strings", "points");
    labels.push_back(p.get<std::string>());
  }
  try {
    return std::make_shared<const Carrier>(std::move(labels));
  } catch (const size_cap_exceeded& e) {
    const auto [l, c] = d.locate("points");
    throw input_error(d.path, l, c, e.what());
  } catch (const invalid_input& e) {
    const auto [l, c] = d.locate("points");
    throw input_error(d.path, l, c, e.what());
  }
}

/// Reads a convergence; axiom violations are reported against the entry
/// that causes them.
inline Convergence convergence_from_json(const Document& d, const json& v) {
  auto carrier = carrier_from_json(d, v);
  const bool by_lim = v.contains("lim"), by_vic = v.contains("vicinity");
  if (by_lim == by_vic) d.fail("expected exactly one of \"lim\" or \"vicinity\"");
  const std::string section = by_lim ? "lim" : "vicinity";
  const auto& body = v[section];
  if (!body.is_object()) d.fail("\"" + section + "\" must be an object", section);
  std::vector<mask_t> table(std::size_t{carrier->full()} + 1, 0);
  if (by_lim) {
    for (const auto& [key, val] : body.items()) table[detail::subset_of_key(d, *carrier, key)] = detail::subset_of_json(d, *carrier, val, key);
  } else {
    std::vector<mask_t> vic(carrier->size(), 0);
    std::vector<bool> seen(carrier->size(), false);
    for (const auto& [key, val] : body.items()) {
      const unsigned x = detail::point_of(d, *carrier, key, section);
      vic[x] = detail::subset_of_json(d, *carrier, val, key);
      seen[x] = true;
    }
    for (unsigned x = 0; x < carrier->size(); ++x)
      if (!seen[x]) d.fail("missing vicinity for point '" + carrier->label(x) + "'", section);
    for (mask_t a = 1; a <= carrier->full(); ++a)
      for (unsigned x = 0; x < carrier->size(); ++x)
        if (subset_of(a, vic[x])) table[a] |= point_mask(x);
  }
  try {
    return {carrier, std::move(table)};
  } catch (const axiom_violation& e) {
    const auto& first = e.violations().front();
    std::string msg = first.axiom + " axiom violated at point " + carrier->label(first.point);
    std::string key;
    if (first.axiom == "centered") {
      key = carrier->label(first.point);
    } else {
      key = subset_key(*carrier, first.superset);
      msg += ": it is a limit of {" + key + "} but not of {" + subset_key(*carrier, first.subset) + "}";
    }
    if (e.violations().size() > 1) msg += " (" + std::to_string(e.violations().size()) + " violations)";
    if (by_vic) key = carrier->label(first.point);
    const auto [l, c] = d.locate(key, section);
    throw input_error(d.path, l, c, msg);
  }
}

inline Convergence convergence_from_json(const Document& d) { return convergence_from_json(d, d.value); }

inline Convergence load_convergence(const std::string& path) { return convergence_from_json(load(path)); }

inline json to_json(const Convergence& c) {
  json out;
  out["points"] = c.carrier().labels();
  json lim = json::object();
  for (mask_t a = 1; a <= c.full(); ++a)
    if (c.lim(a)) lim[subset_key(c.carrier(), a)] = subset_json(c.carrier(), c.lim(a));
  out["lim"] = std::move(lim);
  return out;
}

inline CarrierMap map_from_json(const Document& d, const json& v, const Carrier& source, const Carrier& target) {
  if (!v.is_object() || !v.contains("map") || !v["map"].is_object()) d.fail("expected {\"map\": {...}}");
  std::vector<unsigned> images(source.size(), 0);
  std::vector<bool> seen(source.size(), false);
  for (const auto& [key, val] : v["map"].items()) {
    const unsigned x = detail::point_of(d, source, key, "map");
    if (!val.is_string()) d.fail("map images must be point labels", key, "map");
    images[x] = detail::point_of(d, target, val.get<std::string>(), key);
    seen[x] = true;
  }
  for (unsigned x = 0; x < source.size(); ++x)
    if (!seen[x]) d.fail("no image for point '" + source.label(x) + "'", "map");
  return {target.size(), std::move(images)};
}

inline CarrierMap map_from_json(const Document& d, const Carrier& source, const Carrier& target) {
  return map_from_json(d, d.value, source, target);
}

inline json to_json(const CarrierMap& f, const Carrier& source, const Carrier& target) {
  json m = json::object();
  for (unsigned x = 0; x < f.source_width(); ++x) m[source.label(x)] = target.label(f(x));
  return json{{"map", std::move(m)}};
}

inline SetFamily family_from_json(const Document& d, const Carrier& c) {
  const json* v = &d.value;
  if (v->is_object()) {
    if (!v->contains("family")) d.fail("expected {\"family\": [...]}");
    v = &(*v)["family"];
  }
  if (!v->is_array()) d.fail("a family is an array of point-label arrays", "family");
  std::vector<mask_t> members;
  for (const auto& m : *v) members.push_back(detail::subset_of_json(d, c, m, "family"));
  return {c.size(), std::move(members)};
}

inline json to_json(const Carrier& c, const SetFamily& f) {
  json out = json::array();
  for (mask_t m : f.members()) out.push_back(subset_json(c, m));
  return out;
}

inline json to_json(const ClassificationReport& r) {
  json out = json::object();
  for (const auto& [name, field] : report_fields()) out[name] = r.*field;
  return out;
}

inline json to_json(const MapContext& ctx, const std::vector<MapWitness>& ws) {
  json out = json::array();
  for (const auto& w : ws) {
    const Carrier& side = w.side == "source" ? ctx.source.carrier() : ctx.target.carrier();
    json j{{"flag", w.flag}, {"side", w.side}, {"set", subset_json(side, w.set)}};
    if (w.target_point) j["target_point"] = ctx.target.carrier().label(*w.target_point);
    if (w.source_point) j["source_point"] = ctx.source.carrier().label(*w.source_point);
    out.push_back(std::move(j));
  }
  return out;
}

/// A stored search witness: predicate name, map, source and target.
inline json witness_to_json(const std::string& predicate, const MapContext& ctx) {
  json out;
  out["predicate"] = predicate;
  out["source"] = to_json(ctx.source);
  out["target"] = to_json(ctx.target);
  out["map"] = to_json(ctx.map, ctx.source.carrier(), ctx.target.carrier())["map"];
  return out;
}

inline std::pair<std::string, MapContext> witness_from_json(const Document& d) {
  const auto& v = d.value;
  if (!v.is_object() || !v.contains("predicate") || !v.contains("source") || !v.contains("target"))
    d.fail("expected a witness with \"predicate\", \"source\", \"target\" and \"map\"");
  auto xi = convergence_from_json(d, v["source"]);
  auto tau = convergence_from_json(d, v["target"]);
  auto f = map_from_json(d, v, xi.carrier(), tau.carrier());
  return {v["predicate"].get<std::string>(), MapContext(std::move(f), std::move(xi), std::move(tau))};
}

}  // namespace finconv::io
