// core/include/phonoseg/error.hpp
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

#ifndef PHONOSEG_ERROR_HPP_
#define PHONOSEG_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace phonoseg {

// Machine-parsable failure codes. The CLI prints these verbatim on its
// diagnostics stream and maps them to exit classes.
enum class ErrorCode {
  kIoNotFound,
  kIoWrite,
  kUnsupportedFormat,
  kCorruptHeader,
  kNonPcmEncoding,
  kDegenerateSignal,
  kMalformedLine,
  kNonMonotonicSpans,
  kSpecInvalidForRate,
  kInsufficientZeroCrossings,
  kNoExtrema,
  kInconsistentSequence,
  kEmptyCorpus,
  kConfigError,
  kInternal,
};

const char *error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string &message)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace phonoseg

#endif  // PHONOSEG_ERROR_HPP_
