// Copyright 2026 The tempdrt Authors.
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

// Closed integer intervals and the temporal relations used in DRS
// conditions.

#ifndef TEMPDRT_INTERVAL_H_
#define TEMPDRT_INTERVAL_H_

#include <string>

namespace tempdrt {

struct Interval {
  int start = 0;
  int end = 0;

  bool operator==(const Interval &) const = default;
  std::string ToString() const;
};

// end(a) < start(b).
bool Precedes(const Interval &a, const Interval &b);

// a ⊆ b.
bool IncludedIn(const Interval &a, const Interval &b);

// a ○ b: non-empty intersection.
bool Overlaps(const Interval &a, const Interval &b);

// a ⊃⊂ b: b starts at the point right after a ends.
bool Abuts(const Interval &a, const Interval &b);

// a ≼ b: b starts after a ends, at most `delta` points later. delta = 1 is
// adjacency.
bool JustBefore(const Interval &a, const Interval &b, int delta);

}  // namespace tempdrt

#endif  // TEMPDRT_INTERVAL_H_
