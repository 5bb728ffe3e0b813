// src/config.cpp

// Copyright 2026  amalgam-lab authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// THIS CODE IS PROVIDED *AS IS* BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY
// KIND, EITHER EXPRESS OR IMPLIED, INCLUDING WITHOUT LIMITATION ANY IMPLIED
// WARRANTIES OR CONDITIONS OF TITLE, FITNESS FOR A PARTICULAR PURPOSE,
// MERCHANTABLITY OR NON-INFRINGEMENT.
// See the Apache 2 License for the specific language governing permissions and
// limitations under the License.

#include "amalgam/config.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>
#include <stdexcept>

namespace amalgam {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

double to_number(const std::string& s, const std::string& what) {
  if (s == "inf") return std::numeric_limits<double>::infinity();
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(s, &used);
  } catch (const std::exception&) {
    throw std::invalid_argument("bad numeric value for " + what + ": '" + s + "'");
  }
  if (used != s.size())
    throw std::invalid_argument("bad numeric value for " + what + ": '" + s + "'");
  return v;
}

// "k=1,sigma=2" -> ordered key/value list, keys checked against `allowed`.
std::vector<std::pair<std::string, double>> parse_args(const std::string& body,
                                                       std::span<const std::string> allowed,
                                                       const std::string& what) {
  std::vector<std::pair<std::string, double>> out;
  if (trim(body).empty()) return out;
  for (const std::string& item : split(body, ',')) {
    const auto kv = split(item, '=');
    if (kv.size() != 2) throw std::invalid_argument("expected key=value in " + what + ": '" + item + "'");
    const std::string key = trim(kv[0]);
    if (std::find(allowed.begin(), allowed.end(), key) == allowed.end())
      throw std::invalid_argument("unknown key '" + key + "' in " + what);
    out.emplace_back(key, to_number(trim(kv[1]), what + "." + key));
  }
  return out;
}

double arg_or(const std::vector<std::pair<std::string, double>>& args, const std::string& key,
              double fallback) {
  for (const auto& [k, v] : args)
    if (k == key) return v;
  return fallback;
}

}  // namespace

ExperimentConfig ExperimentConfig::parse(const std::string& text) {
  ExperimentConfig cfg;
  std::istringstream is(text);
  std::string line;
  while (std::getline(is, line)) {
    const std::string t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    const auto eq = t.find('=');
    if (eq == std::string::npos)
      throw std::invalid_argument("config line is not key = value: '" + t + "'");
    cfg.set(trim(t.substr(0, eq)), trim(t.substr(eq + 1)));
  }
  return cfg;
}

const std::vector<std::string>& ExperimentConfig::known_keys() {
  static const std::vector<std::string> keys = {
      "sigma", "pmax", "L",     "delta", "weight", "weight2", "f",     "chi",  "phi",
      "E",     "a",    "s",     "L_pts", "p",      "q",       "theta", "h",    "eps",
      "K",     "seed", "jobs",  "trials", "out",   "rho",     "C",     "tau",  "outer",
  };
  return keys;
}

bool ExperimentConfig::has(const std::string& key) const {
  for (const auto& [k, v] : entries_)
    if (k == key) return true;
  return false;
}

const std::string& ExperimentConfig::raw(const std::string& key) const {
  for (const auto& [k, v] : entries_)
    if (k == key) return v;
  throw std::invalid_argument("config key not present: " + key);
}

double ExperimentConfig::number(const std::string& key) const { return to_number(raw(key), key); }

long long ExperimentConfig::integer(const std::string& key) const {
  const double v = number(key);
  const long long n = std::llround(v);
  if (static_cast<double>(n) != v) throw std::invalid_argument("config key " + key + " must be an integer");
  return n;
}

void ExperimentConfig::set(const std::string& key, std::string value) {
  const auto& keys = known_keys();
  if (std::find(keys.begin(), keys.end(), key) == keys.end())
    throw std::invalid_argument("unknown config key: " + key);
  for (auto& [k, v] : entries_) {
    if (k == key) {
      v = std::move(value);
      return;
    }
  }
  entries_.emplace_back(key, std::move(value));
}

std::string ExperimentConfig::to_string() const {
  std::string out;
  for (const auto& [k, v] : entries_) {
    out += k;
    out += " = ";
    out += v;
    out += '\n';
  }
  return out;
}

Weight parse_weight(const std::string& literal) {
  const std::string lit = trim(literal);
  if (lit == "const") return Weight::constant();
  const auto colon = lit.find(':');
  const std::string head = colon == std::string::npos ? lit : lit.substr(0, colon);
  const std::string body = colon == std::string::npos ? "" : lit.substr(colon + 1);
  if (head == "poly") {
    if (body.empty()) throw std::invalid_argument("poly weight needs an exponent: poly:<s>");
    return Weight::polynomial(to_number(body, "weight.poly"));
  }
  if (head == "subexp") {
    static const std::vector<std::string> allowed = {"k", "sigma"};
    const auto args = parse_args(body, allowed, "weight.subexp");
    return Weight::sub_exponential(arg_or(args, "k", 1.0), arg_or(args, "sigma", 1.0));
  }
  if (head == "assoc") {
    static const std::vector<std::string> allowed = {"s", "tau", "sigma"};
    const auto args = parse_args(body, allowed, "weight.assoc");
    const double sigma = arg_or(args, "sigma", 1.0);
    return Weight::assoc_exp(arg_or(args, "s", 1.0), arg_or(args, "tau", 0.5),
                             GevreySequence::gevrey(sigma));
  }
  throw std::invalid_argument("unknown weight literal: '" + lit + "'");
}

SampledField parse_field(const std::string& literal, const Grid& grid) {
  const std::string lit = trim(literal);
  const auto colon = lit.find(':');
  const std::string head = colon == std::string::npos ? lit : lit.substr(0, colon);
  const std::string body = colon == std::string::npos ? "" : lit.substr(colon + 1);
  if (head == "gauss") {
    static const std::vector<std::string> allowed = {"x0", "xi0", "a"};
    const auto args = parse_args(body, allowed, "field.gauss");
    return gaussian(grid, arg_or(args, "x0", 0.0), arg_or(args, "xi0", 0.0), arg_or(args, "a", 1.0));
  }
  if (head == "hatgauss") {
    static const std::vector<std::string> allowed = {"a", "s"};
    const auto args = parse_args(body, allowed, "field.hatgauss");
    return hat_gauss_window(grid, arg_or(args, "a", 1.0), arg_or(args, "s", 1.0));
  }
  if (head == "sum") {
    std::string inner = trim(body);
    if (inner.size() < 2 || inner.front() != '[' || inner.back() != ']')
      throw std::invalid_argument("sum field literal needs brackets: sum:[...]");
    inner = inner.substr(1, inner.size() - 2);
    SampledField acc = SampledField::zero(grid);
    bool any = false;
    for (const std::string& piece : split(inner, ';')) {
      std::string item = trim(piece);
      if (item.empty()) continue;
      double coeff = 1.0;
      const auto star = item.find('*');
      const auto colon2 = item.find(':');
      if (star != std::string::npos && (colon2 == std::string::npos || star < colon2)) {
        coeff = to_number(trim(item.substr(0, star)), "field.sum.coeff");
        item = trim(item.substr(star + 1));
      }
      acc = add(acc, scale(parse_field(item, grid), cplx{coeff, 0.0}));
      any = true;
    }
    if (!any) throw std::invalid_argument("sum field literal is empty");
    return acc;
  }
  throw std::invalid_argument("unknown field literal: '" + lit + "'");
}

LocalSpaceSpec parse_local_space(const std::string& literal) {
  const std::string lit = trim(literal);
  const auto colon = lit.find(':');
  const std::string head = colon == std::string::npos ? lit : lit.substr(0, colon);
  const std::string body = colon == std::string::npos ? "" : lit.substr(colon + 1);

  // The weight sub-literal may itself contain ':' and ',', so it is carved
  // out by the "weight=" marker rather than split blindly.
  auto take_weight = [&](const std::string& s, std::string& rest) {
    const auto pos = s.find("weight=");
    if (pos == std::string::npos) {
      rest = s;
      return Weight::constant();
    }
    rest = trim(s.substr(0, pos));
    if (!rest.empty() && rest.back() == ',') rest.pop_back();
    return parse_weight(s.substr(pos + 7));
  };

  std::string rest;
  const Weight w = take_weight(body, rest);
  if (head == "lp") {
    static const std::vector<std::string> allowed = {"p"};
    const auto args = parse_args(rest, allowed, "E.lp");
    return LocalSpaceSpec::weighted_lp(arg_or(args, "p", 2.0), w);
  }
  if (head == "c0") {
    if (!trim(rest).empty()) throw std::invalid_argument("unexpected arguments in E.c0");
    return LocalSpaceSpec::weighted_c0(w);
  }
  if (head == "fl1") {
    if (!trim(rest).empty()) throw std::invalid_argument("unexpected arguments in E.fl1");
    return LocalSpaceSpec::fourier_l1(w);
  }
  if (head == "flq") {
    static const std::vector<std::string> allowed = {"q"};
    const auto args = parse_args(rest, allowed, "E.flq");
    return LocalSpaceSpec::fourier_lq(arg_or(args, "q", 1.0), w);
  }
  throw std::invalid_argument("unknown local space literal: '" + lit + "'");
}

}  // namespace amalgam
