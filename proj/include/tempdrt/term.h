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

// Parenthesized term syntax for DRSs.
//
//   (drs (u n:now x:individual e:event t:time)
//     (cond
//       (pred John x)
//       (loc t e)
//       (desc e (phone x))))
//
// Every marker is declared once, with its sort, in the universe of the box
// that introduces it; names are unique per document. See docs/term-syntax.md.

#ifndef TEMPDRT_TERM_H_
#define TEMPDRT_TERM_H_

#include <string>
#include <string_view>

#include "tempdrt/drs.h"

namespace tempdrt {

// Multi-line, indented rendering. Marker names come from the hints, suffixed
// where two markers would otherwise share a name.
std::string Serialize(const Drs &drs);

// Inverse of Serialize; also accepts hand-written terms with ';' comments.
// Throws SyntaxError with the byte position of the problem.
Drs Deserialize(std::string_view text);

// Reads and deserializes a file. Throws Error if it cannot be opened.
Drs LoadDrs(const std::string &path);

}  // namespace tempdrt

#endif  // TEMPDRT_TERM_H_
