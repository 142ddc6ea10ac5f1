// core/include/phonoseg/audio.hpp
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

#ifndef PHONOSEG_AUDIO_HPP_
#define PHONOSEG_AUDIO_HPP_

#include <cstdint>
#include <filesystem>
#include <vector>

namespace phonoseg {

// Integer PCM as read from disk, 16-bit range, always mono after ingestion.
struct RawAudio {
  std::vector<int32_t> samples;
  int sample_rate = 0;
  int channels = 1;
};

// Demeaned, peak-normalized signal: samples in [-1, 1] with peak magnitude
// exactly 1.
struct Utterance {
  std::vector<double> samples;
  int sample_rate = 0;

  double duration_s() const {
    return static_cast<double>(samples.size()) / sample_rate;
  }
};

// Normalized signal mapped back onto the 16-bit integer scale with the 7
// least significant magnitude bits zeroed; values are multiples of 128.
struct QuantizedSignal {
  static constexpr int32_t kGridStep = 128;  // 2^7 in 16-bit units

  std::vector<int32_t> qsamples;
  int sample_rate = 0;
};

enum class AudioFormat { kWav, kSphere, kAuto };

// Reads a 16-bit PCM mono file, either RIFF WAV or NIST SPHERE (format
// sniffed from the magic when hint is kAuto). Multi-channel and non-16-bit
// input is rejected.
RawAudio load_audio(const std::filesystem::path &path,
                    AudioFormat hint = AudioFormat::kAuto);

// Subtracts the sample mean, then scales so the peak magnitude is exactly 1.
// Throws DEGENERATE_SIGNAL when the demeaned signal is identically zero.
//
// Each output sample is a single rounding of the exact integer ratio
// (M*x[i] - sum) / max_j |M*x[j] - sum|, so the result is bit-identical
// under integer gain scaling and integer DC offsets of the input.
Utterance normalize(const RawAudio &raw);

// Maps samples to the signed 16-bit scale (scale 32767, rounding toward
// zero) and truncates the 7 least significant magnitude bits toward zero.
QuantizedSignal quantize_9bit(const Utterance &u);

}  // namespace phonoseg

#endif  // PHONOSEG_AUDIO_HPP_
