// include/amalgam/report.hpp

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

#ifndef AMALGAM_REPORT_HPP
#define AMALGAM_REPORT_HPP

#include <cmath>
#include <span>
#include <string>
#include <vector>

namespace amalgam {

// One CSV row of a verification or measurement run.  Informational rows
// (plain norm values) carry slack = NaN and always pass; verification rows
// pass iff slack >= -tolerance.
struct ReportRow {
  std::string experiment;
  std::string operation;
  std::string params;  // ';'-separated key=value echo (no commas)
  double value = 0.0;
  double slack = std::numeric_limits<double>::quiet_NaN();
  double tolerance = 0.0;
  bool pass = true;

  static ReportRow info(std::string experiment, std::string operation, std::string params,
                        double value);
  static ReportRow check(std::string experiment, std::string operation, std::string params,
                         double value, double slack, double tolerance);
};

std::string format_double(double v);
std::string csv_header();
std::string to_csv(const ReportRow& row);
std::string to_csv(std::span<const ReportRow> rows);
bool all_pass(std::span<const ReportRow> rows);

}  // namespace amalgam

#endif  // AMALGAM_REPORT_HPP
