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

#include "tempdrt/interval.h"

namespace tempdrt {

std::string Interval::ToString() const {
  return "[" + std::to_string(start) + "," + std::to_string(end) + "]";
}

bool Precedes(const Interval &a, const Interval &b) { return a.end < b.start; }

bool IncludedIn(const Interval &a, const Interval &b) {
  return b.start <= a.start && a.end <= b.end;
}

bool Overlaps(const Interval &a, const Interval &b) {
  return a.start <= b.end && b.start <= a.end;
}

bool Abuts(const Interval &a, const Interval &b) {
  return a.end + 1 == b.start;
}

bool JustBefore(const Interval &a, const Interval &b, int delta) {
  return a.end < b.start && b.start <= a.end + delta;
}

}  // namespace tempdrt
