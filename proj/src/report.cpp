// src/report.cpp

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

#include "amalgam/report.hpp"

#include <cstdio>
#include <sstream>

namespace amalgam {

ReportRow ReportRow::info(std::string experiment, std::string operation, std::string params,
                          double value) {
  ReportRow row;
  row.experiment = std::move(experiment);
  row.operation = std::move(operation);
  row.params = std::move(params);
  row.value = value;
  row.pass = true;
  return row;
}

ReportRow ReportRow::check(std::string experiment, std::string operation, std::string params,
                           double value, double slack, double tolerance) {
  ReportRow row;
  row.experiment = std::move(experiment);
  row.operation = std::move(operation);
  row.params = std::move(params);
  row.value = value;
  row.slack = slack;
  row.tolerance = tolerance;
  row.pass = slack >= -tolerance;
  return row;
}

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

std::string csv_header() { return "experiment,operation,params,value,slack,tolerance,pass\n"; }

std::string to_csv(const ReportRow& row) {
  std::ostringstream os;
  os << row.experiment << ',' << row.operation << ',';
  if (row.params.find(',') != std::string::npos)
    os << '"' << row.params << '"';
  else
    os << row.params;
  os << ',' << format_double(row.value) << ',';
  if (!std::isnan(row.slack)) os << format_double(row.slack);
  os << ',' << format_double(row.tolerance) << ',' << (row.pass ? "pass" : "fail") << '\n';
  return os.str();
}

std::string to_csv(std::span<const ReportRow> rows) {
  std::string out = csv_header();
  for (const ReportRow& row : rows) out += to_csv(row);
  return out;
}

bool all_pass(std::span<const ReportRow> rows) {
  for (const ReportRow& row : rows)
    if (!row.pass) return false;
  return true;
}

}  // namespace amalgam
