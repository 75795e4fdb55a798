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

// Monospace box drawing of DRSs, close to the notation of the DRT
// literature:
//
//   +---------------------+
//   | n x s               |
//   +---------------------+
//   | John(x)             |
//   | n ⊆ s               |
//   | s: +-----+          |
//   ...
//
// Conditions are drawn one per line in stored order. A duplex condition
// draws its two boxes side by side joined by the quantifier and "==>".

#ifndef TEMPDRT_RENDER_H_
#define TEMPDRT_RENDER_H_

#include <string>
#include <string_view>

#include "tempdrt/drs.h"

namespace tempdrt {

std::string RenderBox(const Drs &drs);

// Display width of UTF-8 text, one column per code point.
size_t DisplayWidth(std::string_view text);

}  // namespace tempdrt

#endif  // TEMPDRT_RENDER_H_
