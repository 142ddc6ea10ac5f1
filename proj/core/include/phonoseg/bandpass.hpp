// core/include/phonoseg/bandpass.hpp
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

#ifndef PHONOSEG_BANDPASS_HPP_
#define PHONOSEG_BANDPASS_HPP_

#include <vector>

#include "phonoseg/audio.hpp"

namespace phonoseg {

// Bell-cosine band edges. The curve rises as a half cosine on [f1/2, f1),
// holds unit gain on [f1, f2/2], falls as a half cosine on (f2/2, f2] and
// is zero elsewhere. Defaults give rise 35-70 Hz, flat 70-250 Hz, fall
// 250-500 Hz.
struct BandpassSpec {
  double f1_hz = 70.0;
  double f2_hz = 500.0;

  bool valid_for_rate(int sample_rate) const;
};

// Frequency-domain gain of the bell-cosine curve, in [0, 1].
double filter_response(double f_hz, const BandpassSpec &spec = {});

struct BpfSignal {
  std::vector<double> samples;
  int sample_rate = 0;
  BandpassSpec spec;
};

// Zero-phase filtering of the whole utterance: zero-pad to a power of two,
// scale each frequency bin by filter_response (conjugate-symmetric, so the
// output stays real), inverse transform, truncate to the original length.
BpfSignal apply_bandpass(const Utterance &u, const BandpassSpec &spec = {});

}  // namespace phonoseg

#endif  // PHONOSEG_BANDPASS_HPP_
