// include/amalgam/util.hpp

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

#ifndef AMALGAM_UTIL_HPP
#define AMALGAM_UTIL_HPP

#include <complex>
#include <cstddef>
#include <functional>
#include <span>
#include <vector>

namespace amalgam {

using cplx = std::complex<double>;

// Pairwise (binary-tree) summation.  All norm and lattice reductions go
// through this fixed order so results do not depend on thread count.
double pairwise_sum(std::span<const double> xs);
cplx pairwise_sum(std::span<const cplx> xs);

// Runs fn(i) for i in [0, n).  Each index writes only to its own slot, so
// the result is identical for any job count.  jobs <= 1 runs inline.
void parallel_for(std::size_t n, int jobs, const std::function<void(std::size_t)>& fn);

// Process-wide default for --jobs; set once by the CLI before dispatch.
int default_jobs();
void set_default_jobs(int jobs);

}  // namespace amalgam

#endif  // AMALGAM_UTIL_HPP
