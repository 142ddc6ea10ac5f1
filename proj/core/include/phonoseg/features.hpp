// core/include/phonoseg/features.hpp
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

#ifndef PHONOSEG_FEATURES_HPP_
#define PHONOSEG_FEATURES_HPP_

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "phonoseg/audio.hpp"
#include "phonoseg/bandpass.hpp"

namespace phonoseg {

// Frame geometry. The silence index uses a short frame on the quantized
// signal; the extremum features use a long frame on the bandpass signal.
// Both emit one value per hop, assigned to the hop's mid 5 ms segment.
struct FramePlan {
  int si_frame_ms = 10;
  int feature_frame_ms = 40;
  int hop_ms = 5;
  int min_silence_run = 3;      // successive sub-threshold samples
  double ade_threshold = 0.02;  // below this a frame's amplitude evidence is unreliable

  int64_t samples(int ms, int sample_rate) const {
    return static_cast<int64_t>(ms) * sample_rate / 1000;
  }
};

struct Extremum {
  int64_t index = 0;  // absolute sample index
  double value = 0.0;

  bool operator==(const Extremum &) const = default;
};

// Extrema surviving the two-pass adaptive threshold, restricted to the
// frame's span between its first and last zero crossings.
struct ExtremaSet {
  std::vector<Extremum> maxima;  // values > 0, indices increasing
  std::vector<Extremum> minima;  // values < 0, indices increasing
  int64_t first_zc = 0;
  int64_t last_zc = 0;

  bool operator==(const ExtremaSet &) const = default;
  bool empty() const { return maxima.empty() && minima.empty(); }
};

struct FrameFeatures {
  int64_t hop_index = 0;
  double center_time_s = 0.0;
  double si = 0.0;
  std::optional<double> pfe_ms;
  std::optional<double> ple_ms;
  std::optional<double> ade;
  bool ade_reliable = false;
};

// Fraction of frame samples whose quantized magnitude is at most one 9-bit
// grid step, counting only runs of at least min_run successive such samples.
// Runs are evaluated within the window only.
double silence_index_window(std::span<const int32_t> window, int min_run);
double silence_index(const QuantizedSignal &q, int64_t frame_start,
                     int64_t frame_len, int min_run);

// Two-pass extremum selection on a frame of the bandpass signal. One
// maximum (minimum) is taken per positive (negative) lobe between
// successive zero crossings; pass 1 keeps maxima above half the mean of
// the positive samples, pass 2 keeps those at or above half the mean of
// the pass-1 survivors. Minima are handled symmetrically on negated
// values. Throws INSUFFICIENT_ZERO_CROSSINGS when the frame has fewer than
// two crossings.
ExtremaSet select_extrema_window(std::span<const double> window,
                                 int64_t window_start);
ExtremaSet select_extrema(const BpfSignal &b, int64_t frame_start,
                          int64_t frame_len);

// Signed positions (ms) of the first and the last surviving extremum
// relative to the frame's mid sample; polarity is ignored, left of center
// is negative. Throws NO_EXTREMA on an empty set.
std::pair<double, double> pfe_ple(const ExtremaSet &e, int64_t frame_center,
                                  int sample_rate);

// Mean absolute difference between positionally paired maxima and minima,
// truncated to the shorter list. Throws NO_EXTREMA unless there is at
// least one maximum and one minimum.
double ade(const ExtremaSet &e);

// One record per hop over the whole utterance. Windows centered on each
// hop's mid 5 ms segment are zero-extended past the signal edges.
// Per-frame failures become undefined optional fields.
std::vector<FrameFeatures> extract_features(const Utterance &u,
                                            const BpfSignal &b,
                                            const FramePlan &plan = {});

}  // namespace phonoseg

#endif  // PHONOSEG_FEATURES_HPP_
