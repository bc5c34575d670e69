// Copyright 2026 The Audlet Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef AUDLET_SRC_SPECTRAL_RUNS_H_
#define AUDLET_SRC_SPECTRAL_RUNS_H_

#include <algorithm>
#include <cstddef>

#include "audlet/filterbank.h"

namespace audlet::internal {

// Splits the support of `filter` into runs of consecutive bins that neither
// wrap around L nor cross a multiple of `period` (period must divide L).
// Calls fn(value_index, bin, run_length) for each run in order, so both
// filter[value_index + i] <-> spectrum[bin + i] and the folded index
// (bin % period) + i are contiguous within a run.
template <typename Fn>
void ForEachRun(const BandFilter& filter, std::size_t length,
                std::size_t period, Fn&& fn) {
  const std::size_t size = filter.values.size();
  std::size_t i = 0;
  while (i < size) {
    const std::size_t bin = (filter.offset + i) % length;
    const std::size_t run =
        std::min(size - i, period - bin % period);
    fn(i, bin, run);
    i += run;
  }
}

}  // namespace audlet::internal

#endif  // AUDLET_SRC_SPECTRAL_RUNS_H_
