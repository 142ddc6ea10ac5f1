// core/include/phonoseg/labels.hpp
//
// Copyright 2026  phonoseg authors
//
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

#ifndef PHONOSEG_LABELS_HPP_
#define PHONOSEG_LABELS_HPP_

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

namespace phonoseg {

// One hand-labeled phone span, sample-indexed as in TIMIT .phn files.
struct LabelEntry {
  int64_t begin_sample = 0;
  int64_t end_sample = 0;
  std::string phone;

  bool operator==(const LabelEntry &) const = default;
};

struct ReferenceLabels {
  std::vector<LabelEntry> entries;

  bool operator==(const ReferenceLabels &) const = default;

  // Interior span edges (every boundary between two labeled phones),
  // deduplicated and sorted; the utterance start and final end are not
  // boundaries.
  std::vector<int64_t> interior_boundaries() const;
};

// Parses "begin end label" lines. Blank lines are skipped. Overlapping or
// reversed spans raise NON_MONOTONIC_SPANS; anything unparsable raises
// MALFORMED_LINE. An empty file yields an empty label list.
ReferenceLabels parse_labels(std::istream &in);
ReferenceLabels load_labels(const std::filesystem::path &path);

void serialize_labels(const ReferenceLabels &labels, std::ostream &out);
void write_labels(const ReferenceLabels &labels,
                  const std::filesystem::path &path);

}  // namespace phonoseg

#endif  // PHONOSEG_LABELS_HPP_
