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

// Built-in acceptance suite over the example discourses and fixtures.
//
// Each item checks one property end to end: construction against a
// hand-written DRS file, truth values on fixture models, random agreement
// with the quantifier oracle, and rendering against golden files.

#ifndef TEMPDRT_SUITE_H_
#define TEMPDRT_SUITE_H_

#include <string>
#include <vector>

namespace tempdrt {

struct SuiteItem {
  std::string id;
  std::string description;
  bool passed = false;
  std::string detail;  // first failure, or a short summary
  double seconds = 0;
};

struct SuiteOptions {
  std::string fixtures_dir;
  // Only items whose id contains this substring run. Empty runs all.
  std::string filter;
};

// $TEMPDRT_FIXTURES if set, otherwise the source tree's fixture directory.
std::string DefaultFixturesDir();

// Ids of all items in run order.
std::vector<std::string> SuiteItemIds();

std::vector<SuiteItem> RunSuite(const SuiteOptions &options);

// One "PASS id (time): detail" or "FAIL ..." line per item plus a total.
std::string FormatSuite(const std::vector<SuiteItem> &items);

inline bool AllPassed(const std::vector<SuiteItem> &items) {
  for (const SuiteItem &item : items) {
    if (!item.passed) return false;
  }
  return true;
}

}  // namespace tempdrt

#endif  // TEMPDRT_SUITE_H_
