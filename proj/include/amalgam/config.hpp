// include/amalgam/config.hpp

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

#ifndef AMALGAM_CONFIG_HPP
#define AMALGAM_CONFIG_HPP

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "amalgam/field.hpp"
#include "amalgam/local_space.hpp"
#include "amalgam/weights.hpp"

namespace amalgam {

// Line-oriented `key = value` experiment file.  Keys are restricted to the
// known vocabulary; parse(to_string()) round-trips losslessly.
class ExperimentConfig {
 public:
  static ExperimentConfig parse(const std::string& text);
  static const std::vector<std::string>& known_keys();

  bool has(const std::string& key) const;
  const std::string& raw(const std::string& key) const;
  double number(const std::string& key) const;
  long long integer(const std::string& key) const;

  void set(const std::string& key, std::string value);
  std::string to_string() const;

  const std::vector<std::pair<std::string, std::string>>& entries() const { return entries_; }

 private:
  std::vector<std::pair<std::string, std::string>> entries_;  // insertion order
};

// Literal grammars shared by config files and CLI flags.
//   weight = const | poly:2 | subexp:k=1,sigma=1 | assoc:s=1,tau=0.5
Weight parse_weight(const std::string& literal);
//   f = gauss:x0=0,xi0=0,a=1 | hatgauss:a=1,s=1 | sum:[lit; 0.5*lit; ...]
SampledField parse_field(const std::string& literal, const Grid& grid);
//   E = lp:p=2,weight=const | c0:weight=poly:1 | fl1:weight=const
LocalSpaceSpec parse_local_space(const std::string& literal);

}  // namespace amalgam

#endif  // AMALGAM_CONFIG_HPP
