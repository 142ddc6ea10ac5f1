// core/src/error.cpp
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

#include "phonoseg/error.hpp"

namespace phonoseg {

const char *error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kIoNotFound: return "IO_NOT_FOUND";
    case ErrorCode::kIoWrite: return "IO_WRITE";
    case ErrorCode::kUnsupportedFormat: return "UNSUPPORTED_FORMAT";
    case ErrorCode::kCorruptHeader: return "CORRUPT_HEADER";
    case ErrorCode::kNonPcmEncoding: return "NON_PCM_ENCODING";
    case ErrorCode::kDegenerateSignal: return "DEGENERATE_SIGNAL";
    case ErrorCode::kMalformedLine: return "MALFORMED_LINE";
    case ErrorCode::kNonMonotonicSpans: return "NON_MONOTONIC_SPANS";
    case ErrorCode::kSpecInvalidForRate: return "SPEC_INVALID_FOR_RATE";
    case ErrorCode::kInsufficientZeroCrossings: return "INSUFFICIENT_ZERO_CROSSINGS";
    case ErrorCode::kNoExtrema: return "NO_EXTREMA";
    case ErrorCode::kInconsistentSequence: return "INCONSISTENT_SEQUENCE";
    case ErrorCode::kEmptyCorpus: return "EMPTY_CORPUS";
    case ErrorCode::kConfigError: return "CONFIG_ERROR";
    case ErrorCode::kInternal: return "INTERNAL";
  }
  return "INTERNAL";
}

}  // namespace phonoseg
