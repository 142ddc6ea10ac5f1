// core/src/bandpass.cpp
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

#include "phonoseg/bandpass.hpp"

#include <cmath>
#include <numbers>

#include "fft.hpp"
#include "phonoseg/error.hpp"

namespace phonoseg {

bool BandpassSpec::valid_for_rate(int sample_rate) const {
  return f1_hz > 0.0 && f1_hz <= f2_hz / 2.0 &&
         f2_hz < static_cast<double>(sample_rate) / 2.0;
}

double filter_response(double f_hz, const BandpassSpec &spec) {
  const double f1 = spec.f1_hz, f2 = spec.f2_hz;
  if (f_hz < f1 / 2.0 || f_hz > f2) return 0.0;
  if (f_hz < f1) {
    return 0.5 - 0.5 * std::cos(std::numbers::pi * (f_hz - f1 / 2.0) / (f1 / 2.0));
  }
  if (f_hz <= f2 / 2.0) return 1.0;
  return 0.5 + 0.5 * std::cos(std::numbers::pi * (f_hz - f2 / 2.0) / (f2 / 2.0));
}

BpfSignal apply_bandpass(const Utterance &u, const BandpassSpec &spec) {
  if (!spec.valid_for_rate(u.sample_rate)) {
    throw Error(ErrorCode::kSpecInvalidForRate,
                "band edges " + std::to_string(spec.f1_hz) + "/" +
                    std::to_string(spec.f2_hz) + " Hz invalid at " +
                    std::to_string(u.sample_rate) + " Hz");
  }

  const size_t n = u.samples.size();
  const size_t nfft = internal::next_pow2(n);
  std::vector<std::complex<double>> buf(nfft);
  for (size_t i = 0; i < n; ++i) buf[i] = u.samples[i];

  internal::fft(buf, false);

  const double bin_hz = static_cast<double>(u.sample_rate) / nfft;
  for (size_t k = 0; k <= nfft / 2; ++k) {
    const double gain = filter_response(k * bin_hz, spec);
    buf[k] *= gain;
    if (k != 0 && k != nfft - k) buf[nfft - k] *= gain;  // mirror bin
  }

  internal::fft(buf, true);

  BpfSignal out;
  out.sample_rate = u.sample_rate;
  out.spec = spec;
  out.samples.resize(n);
  for (size_t i = 0; i < n; ++i) out.samples[i] = buf[i].real();
  return out;
}

}  // namespace phonoseg
