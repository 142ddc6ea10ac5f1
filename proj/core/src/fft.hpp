// core/src/fft.hpp
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

#ifndef PHONOSEG_SRC_FFT_HPP_
#define PHONOSEG_SRC_FFT_HPP_

#include <complex>
#include <cstddef>
#include <vector>

namespace phonoseg::internal {

// In-place iterative radix-2 transform; data.size() must be a power of two.
// inverse=true applies the conjugate transform and the 1/N scale.
void fft(std::vector<std::complex<double>> &data, bool inverse);

inline size_t next_pow2(size_t n) {
  size_t p = 1;
  while (p < n) p <<= 1;
  return p;
}

}  // namespace phonoseg::internal

#endif  // PHONOSEG_SRC_FFT_HPP_
