// core/src/labels.cpp
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

#include "phonoseg/labels.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "phonoseg/error.hpp"

namespace phonoseg {

std::vector<int64_t> ReferenceLabels::interior_boundaries() const {
  std::vector<int64_t> edges;
  for (size_t i = 0; i + 1 < entries.size(); ++i) {
    edges.push_back(entries[i].end_sample);
    if (entries[i + 1].begin_sample != entries[i].end_sample) {
      edges.push_back(entries[i + 1].begin_sample);
    }
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  return edges;
}

ReferenceLabels parse_labels(std::istream &in) {
  ReferenceLabels labels;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.find_first_not_of(" \t\r\n") == std::string::npos) continue;
    std::istringstream ls(line);
    LabelEntry e;
    std::string extra;
    if (!(ls >> e.begin_sample >> e.end_sample >> e.phone) || (ls >> extra)) {
      throw Error(ErrorCode::kMalformedLine,
                  "line " + std::to_string(lineno) + ": '" + line + "'");
    }
    if (e.begin_sample < 0 || e.begin_sample >= e.end_sample) {
      throw Error(ErrorCode::kNonMonotonicSpans,
                  "line " + std::to_string(lineno) + ": span [" +
                      std::to_string(e.begin_sample) + ", " +
                      std::to_string(e.end_sample) + ")");
    }
    if (!labels.entries.empty() &&
        e.begin_sample < labels.entries.back().end_sample) {
      throw Error(ErrorCode::kNonMonotonicSpans,
                  "line " + std::to_string(lineno) + ": span starts before " +
                      "previous span ends");
    }
    labels.entries.push_back(std::move(e));
  }
  return labels;
}

ReferenceLabels load_labels(const std::filesystem::path &path) {
  std::ifstream in(path);
  if (!in) {
    throw Error(ErrorCode::kIoNotFound, "cannot open " + path.string());
  }
  return parse_labels(in);
}

void serialize_labels(const ReferenceLabels &labels, std::ostream &out) {
  for (const LabelEntry &e : labels.entries) {
    out << e.begin_sample << ' ' << e.end_sample << ' ' << e.phone << '\n';
  }
}

void write_labels(const ReferenceLabels &labels,
                  const std::filesystem::path &path) {
  std::ofstream out(path);
  if (!out) {
    throw Error(ErrorCode::kIoWrite, "cannot write " + path.string());
  }
  serialize_labels(labels, out);
  if (!out.good()) {
    throw Error(ErrorCode::kIoWrite, "write failed: " + path.string());
  }
}

}  // namespace phonoseg
