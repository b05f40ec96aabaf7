// Copyright 2026 The Multiunit Pricing Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "multiunit/instance_io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <variant>

#include <json.hpp>

namespace multiunit {
namespace {

using nlohmann::json;

std::string fmt(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

[[noreturn]] void fail(const std::string& where, const std::string& msg) {
  throw std::invalid_argument(where + ": " + msg);
}

void check_keys(const json& obj, std::initializer_list<const char*> allowed,
                const std::string& where) {
  if (!obj.is_object()) fail(where, "expected an object");
  for (const auto& item : obj.items()) {
    bool known = false;
    for (const char* k : allowed)
      if (item.key() == k) {
        known = true;
        break;
      }
    if (!known) fail(where, "unknown key '" + item.key() + "'");
  }
}

const json& need(const json& obj, const char* key, const std::string& where) {
  const auto it = obj.find(key);
  if (it == obj.end()) fail(where, std::string("missing key '") + key + "'");
  return *it;
}

double need_number(const json& obj, const char* key,
                   const std::string& where) {
  const json& j = need(obj, key, where);
  if (!j.is_number()) fail(where + "." + key, "expected a number");
  return j.get<double>();
}

std::vector<double> need_number_array(const json& obj, const char* key,
                                      const std::string& where) {
  const json& j = need(obj, key, where);
  if (!j.is_array()) fail(where + "." + key, "expected an array");
  std::vector<double> out;
  out.reserve(j.size());
  for (size_t i = 0; i < j.size(); ++i) {
    if (!j[i].is_number())
      fail(where + "." + key + "[" + std::to_string(i) + "]",
           "expected a number");
    out.push_back(j[i].get<double>());
  }
  return out;
}

Marginal parse_marginal(const json& j, double v_bar, const std::string& where) {
  if (!j.is_object()) fail(where, "expected a marginal object");
  const json& kj = need(j, "kind", where);
  if (!kj.is_string()) fail(where + ".kind", "expected a string");
  const std::string kind = kj.get<std::string>();
  if (kind == "uniform") {
    check_keys(j, {"kind", "lo", "hi"}, where);
    return Marginal::uniform(need_number(j, "lo", where),
                             need_number(j, "hi", where), v_bar);
  }
  if (kind == "constant_elasticity") {
    check_keys(j, {"kind", "scale", "elasticity"}, where);
    return Marginal::constant_elasticity(need_number(j, "scale", where),
                                         need_number(j, "elasticity", where),
                                         v_bar);
  }
  if (kind == "truncated_normal") {
    check_keys(j, {"kind", "mean", "stddev"}, where);
    return Marginal::truncated_normal(need_number(j, "mean", where),
                                      need_number(j, "stddev", where), v_bar);
  }
  if (kind == "exponential") {
    check_keys(j, {"kind", "rate"}, where);
    return Marginal::exponential_truncated(need_number(j, "rate", where),
                                           v_bar);
  }
  if (kind == "piecewise_linear") {
    check_keys(j, {"kind", "values", "cum"}, where);
    Marginal m = Marginal::piecewise_linear_cdf(
        need_number_array(j, "values", where),
        need_number_array(j, "cum", where));
    if (m.v_bar() != v_bar)
      fail(where, "piecewise support must end exactly at v_bar");
    return m;
  }
  if (kind == "mixture") {
    check_keys(j, {"kind", "weights", "components"}, where);
    const json& comps = need(j, "components", where);
    if (!comps.is_array()) fail(where + ".components", "expected an array");
    std::vector<Marginal> components;
    components.reserve(comps.size());
    for (size_t i = 0; i < comps.size(); ++i)
      components.push_back(
          parse_marginal(comps[i], v_bar,
                         where + ".components[" + std::to_string(i) + "]"));
    return Marginal::mixture(std::move(components),
                             need_number_array(j, "weights", where));
  }
  fail(where + ".kind", "unknown marginal kind '" + kind + "'");
}

void serialize_marginal(const Marginal& m, std::string& out) {
  struct Writer {
    std::string& out;
    void operator()(const UniformParams& p) const {
      out += "{\"kind\": \"uniform\", \"lo\": " + fmt(p.lo) +
             ", \"hi\": " + fmt(p.hi) + "}";
    }
    void operator()(const ConstantElasticityParams& p) const {
      out += "{\"kind\": \"constant_elasticity\", \"scale\": " + fmt(p.scale) +
             ", \"elasticity\": " + fmt(p.elasticity) + "}";
    }
    void operator()(const TruncatedNormalParams& p) const {
      out += "{\"kind\": \"truncated_normal\", \"mean\": " + fmt(p.mean) +
             ", \"stddev\": " + fmt(p.stddev) + "}";
    }
    void operator()(const ExponentialTruncatedParams& p) const {
      out += "{\"kind\": \"exponential\", \"rate\": " + fmt(p.rate) + "}";
    }
    void operator()(const PiecewiseLinearCdfParams& p) const {
      out += "{\"kind\": \"piecewise_linear\", \"values\": [";
      for (size_t i = 0; i < p.values.size(); ++i) {
        if (i) out += ", ";
        out += fmt(p.values[i]);
      }
      out += "], \"cum\": [";
      for (size_t i = 0; i < p.cum.size(); ++i) {
        if (i) out += ", ";
        out += fmt(p.cum[i]);
      }
      out += "]}";
    }
    void operator()(const MixtureParams& p) const {
      out += "{\"kind\": \"mixture\", \"weights\": [";
      for (size_t i = 0; i < p.weights.size(); ++i) {
        if (i) out += ", ";
        out += fmt(p.weights[i]);
      }
      out += "], \"components\": [";
      for (size_t i = 0; i < p.components.size(); ++i) {
        if (i) out += ", ";
        serialize_marginal(p.components[i], out);
      }
      out += "]}";
    }
  };
  std::visit(Writer{out}, m.params());
}

void serialize_continuous(const ProblemInstance& inst, std::string& out) {
  out += "  \"demands\": [";
  for (int i = 1; i <= inst.k(); ++i) {
    if (i > 1) out += ", ";
    out += std::to_string(inst.demand(i));
  }
  out += "],\n  \"weights\": [";
  for (int i = 1; i <= inst.k(); ++i) {
    if (i > 1) out += ", ";
    out += fmt(inst.weight(i));
  }
  out += "],\n  \"v_bar\": " + fmt(inst.v_bar()) + ",\n  \"marginals\": [\n";
  for (int i = 1; i <= inst.k(); ++i) {
    out += "    ";
    serialize_marginal(inst.marginal(i), out);
    out += i < inst.k() ? ",\n" : "\n";
  }
  out += "  ]";
}

void serialize_discrete(const DiscreteInstance& inst, std::string& out) {
  out += "  \"discrete\": {\n    \"types\": [";
  for (int t = 0; t < inst.n(); ++t) {
    if (t) out += ", ";
    const DiscreteType& ty = inst.types()[static_cast<size_t>(t)];
    out += "[" + fmt(ty.v) + ", " + std::to_string(ty.d) + "]";
  }
  out += "],\n    \"probs\": [";
  for (int t = 0; t < inst.n(); ++t) {
    if (t) out += ", ";
    out += fmt(inst.probs()[static_cast<size_t>(t)]);
  }
  out += "]\n  }";
}

}  // namespace

InstanceFile parse_instance_text(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    // Convert the parser's byte offset into line:col.
    size_t line = 1, col = 1;
    const size_t stop = e.byte > 0 ? e.byte - 1 : 0;
    for (size_t i = 0; i < stop && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw std::invalid_argument(std::to_string(line) + ":" +
                                std::to_string(col) + ": " + e.what());
  }

  check_keys(doc, {"demands", "weights", "v_bar", "marginals", "discrete"},
             "instance");
  InstanceFile out;

  const bool has_continuous = doc.contains("demands") ||
                              doc.contains("weights") ||
                              doc.contains("v_bar") || doc.contains("marginals");
  if (has_continuous) {
    const json& dj = need(doc, "demands", "instance");
    if (!dj.is_array()) fail("instance.demands", "expected an array");
    std::vector<int> demands;
    for (size_t i = 0; i < dj.size(); ++i) {
      if (!dj[i].is_number_integer())
        fail("instance.demands[" + std::to_string(i) + "]",
             "expected an integer");
      demands.push_back(dj[i].get<int>());
    }
    std::vector<double> weights = need_number_array(doc, "weights", "instance");
    const double v_bar = need_number(doc, "v_bar", "instance");
    const json& mj = need(doc, "marginals", "instance");
    if (!mj.is_array()) fail("instance.marginals", "expected an array");
    std::vector<Marginal> marginals;
    marginals.reserve(mj.size());
    for (size_t i = 0; i < mj.size(); ++i)
      marginals.push_back(parse_marginal(
          mj[i], v_bar, "instance.marginals[" + std::to_string(i) + "]"));
    out.continuous.emplace(std::move(demands), std::move(weights),
                           std::move(marginals));
  }

  if (doc.contains("discrete")) {
    const json& sub = doc["discrete"];
    check_keys(sub, {"types", "probs"}, "instance.discrete");
    const json& tj = need(sub, "types", "instance.discrete");
    if (!tj.is_array()) fail("instance.discrete.types", "expected an array");
    std::vector<DiscreteType> types;
    for (size_t i = 0; i < tj.size(); ++i) {
      const std::string where =
          "instance.discrete.types[" + std::to_string(i) + "]";
      const json& e = tj[i];
      if (!e.is_array() || e.size() != 2)
        fail(where, "expected a [value, demand] pair");
      if (!e[0].is_number()) fail(where, "value must be a number");
      if (!e[1].is_number_integer()) fail(where, "demand must be an integer");
      types.push_back({e[0].get<double>(), e[1].get<int>()});
    }
    out.discrete.emplace(std::move(types),
                         need_number_array(sub, "probs", "instance.discrete"));
  }

  if (!out.continuous && !out.discrete)
    fail("instance", "file defines neither marginals nor a discrete block");
  return out;
}

InstanceFile load_instance_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument(path + ": cannot open");
  std::ostringstream ss;
  ss << in.rdbuf();
  try {
    return parse_instance_text(ss.str());
  } catch (const std::invalid_argument& e) {
    throw std::invalid_argument(path + ":" + e.what());
  }
}

std::string serialize(const ProblemInstance& inst) {
  std::string out = "{\n";
  serialize_continuous(inst, out);
  out += "\n}\n";
  return out;
}

std::string serialize(const DiscreteInstance& inst) {
  std::string out = "{\n";
  serialize_discrete(inst, out);
  out += "\n}\n";
  return out;
}

std::string canonical_text(const InstanceFile& file) {
  if (!file.continuous && !file.discrete)
    throw std::invalid_argument("canonical_text: empty instance file");
  std::string out = "{\n";
  if (file.continuous) serialize_continuous(*file.continuous, out);
  if (file.continuous && file.discrete) out += ",\n";
  if (file.discrete) serialize_discrete(*file.discrete, out);
  out += "\n}\n";
  return out;
}

uint64_t digest64(const std::string& text) {
  uint64_t h = 14695981039346656037ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

}  // namespace multiunit
