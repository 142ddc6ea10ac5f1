// core/src/features.cpp
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

#include "phonoseg/features.hpp"

#include <algorithm>
#include <cmath>

#include "phonoseg/error.hpp"

namespace phonoseg {

namespace {

// Copies [start, start+len) of src into a buffer, zero outside the signal.
template <typename T>
std::vector<T> window_of(const std::vector<T> &src, int64_t start,
                         int64_t len) {
  std::vector<T> w(static_cast<size_t>(len), T{});
  const int64_t n = static_cast<int64_t>(src.size());
  const int64_t lo = std::max<int64_t>(start, 0);
  const int64_t hi = std::min(start + len, n);
  for (int64_t i = lo; i < hi; ++i) w[static_cast<size_t>(i - start)] = src[i];
  return w;
}

int sign_of(double v) { return v > 0.0 ? 1 : (v < 0.0 ? -1 : 0); }

}  // namespace

double silence_index_window(std::span<const int32_t> window, int min_run) {
  if (window.empty()) return 0.0;
  int64_t counted = 0;
  int64_t run = 0;
  for (size_t i = 0; i <= window.size(); ++i) {
    const bool below =
        i < window.size() && std::abs(window[i]) <= QuantizedSignal::kGridStep;
    if (below) {
      ++run;
    } else {
      if (run >= min_run) counted += run;
      run = 0;
    }
  }
  return static_cast<double>(counted) / static_cast<double>(window.size());
}

double silence_index(const QuantizedSignal &q, int64_t frame_start,
                     int64_t frame_len, int min_run) {
  auto w = window_of(q.qsamples, frame_start, frame_len);
  return silence_index_window(w, min_run);
}

ExtremaSet select_extrema_window(std::span<const double> window,
                                 int64_t window_start) {
  const int64_t len = static_cast<int64_t>(window.size());

  // Crossing positions: exact zeros and strict sign flips.
  int64_t first_zc = -1, last_zc = -1;
  int n_crossings = 0;
  for (int64_t i = 0; i < len; ++i) {
    const bool crossing =
        window[i] == 0.0 ||
        (i > 0 && sign_of(window[i - 1]) * sign_of(window[i]) < 0);
    if (crossing) {
      if (first_zc < 0) first_zc = i;
      last_zc = i;
      ++n_crossings;
    }
  }
  if (n_crossings < 2) {
    throw Error(ErrorCode::kInsufficientZeroCrossings,
                "frame has fewer than two zero crossings");
  }

  // Lobe extrema. A lobe is a maximal run of one strict sign; only lobes
  // bounded by a crossing on both sides (i.e. not cut by the window edge)
  // contribute an extremum.
  std::vector<Extremum> peaks, valleys;
  int64_t i = 0;
  while (i < len) {
    const int s = sign_of(window[i]);
    if (s == 0) {
      ++i;
      continue;
    }
    int64_t j = i;
    int64_t best = i;
    while (j < len && sign_of(window[j]) == s) {
      if (s > 0 ? window[j] > window[best] : window[j] < window[best]) best = j;
      ++j;
    }
    if (i > 0 && j < len) {
      (s > 0 ? peaks : valleys)
          .push_back({window_start + best, window[best]});
    }
    i = j;
  }

  // First pass threshold: mean of the same-sign samples between the first
  // and last crossings. Second pass threshold: mean of the survivors.
  auto two_pass = [&](std::vector<Extremum> &candidates, bool positive) {
    double sum = 0.0;
    int64_t count = 0;
    for (int64_t k = first_zc; k <= last_zc; ++k) {
      const double v = positive ? window[k] : -window[k];
      if (v > 0.0) {
        sum += v;
        ++count;
      }
    }
    std::vector<Extremum> out;
    if (count == 0) {
      candidates.clear();
      return;
    }
    const double t1 = sum / static_cast<double>(count);
    std::vector<Extremum> pass1;
    for (const Extremum &e : candidates) {
      const double mag = positive ? e.value : -e.value;
      if (mag > 0.5 * t1) pass1.push_back(e);
    }
    if (pass1.empty()) {
      candidates.clear();
      return;
    }
    double sum2 = 0.0;
    for (const Extremum &e : pass1) sum2 += positive ? e.value : -e.value;
    const double t2 = sum2 / static_cast<double>(pass1.size());
    out.clear();
    for (const Extremum &e : pass1) {
      const double mag = positive ? e.value : -e.value;
      if (mag >= 0.5 * t2) out.push_back(e);
    }
    candidates = std::move(out);
  };

  ExtremaSet result;
  result.maxima = std::move(peaks);
  result.minima = std::move(valleys);
  two_pass(result.maxima, true);
  two_pass(result.minima, false);
  result.first_zc = window_start + first_zc;
  result.last_zc = window_start + last_zc;
  return result;
}

ExtremaSet select_extrema(const BpfSignal &b, int64_t frame_start,
                          int64_t frame_len) {
  auto w = window_of(b.samples, frame_start, frame_len);
  return select_extrema_window(w, frame_start);
}

std::pair<double, double> pfe_ple(const ExtremaSet &e, int64_t frame_center,
                                  int sample_rate) {
  if (e.empty()) {
    throw Error(ErrorCode::kNoExtrema, "no surviving extrema in frame");
  }
  int64_t first = std::numeric_limits<int64_t>::max();
  int64_t last = std::numeric_limits<int64_t>::min();
  for (const auto *list : {&e.maxima, &e.minima}) {
    if (!list->empty()) {
      first = std::min(first, list->front().index);
      last = std::max(last, list->back().index);
    }
  }
  const double to_ms = 1000.0 / sample_rate;
  return {static_cast<double>(first - frame_center) * to_ms,
          static_cast<double>(last - frame_center) * to_ms};
}

double ade(const ExtremaSet &e) {
  const size_t pairs = std::min(e.maxima.size(), e.minima.size());
  if (pairs == 0) {
    throw Error(ErrorCode::kNoExtrema,
                "ADE needs at least one maximum and one minimum");
  }
  double sum = 0.0;
  for (size_t i = 0; i < pairs; ++i) {
    sum += std::abs(e.maxima[i].value - e.minima[i].value);
  }
  return sum / static_cast<double>(pairs);
}

std::vector<FrameFeatures> extract_features(const Utterance &u,
                                            const BpfSignal &b,
                                            const FramePlan &plan) {
  const int rate = u.sample_rate;
  const int64_t n = static_cast<int64_t>(u.samples.size());
  const int64_t hop = plan.samples(plan.hop_ms, rate);
  const int64_t si_len = plan.samples(plan.si_frame_ms, rate);
  const int64_t feat_len = plan.samples(plan.feature_frame_ms, rate);
  const int64_t n_hops = (n + hop - 1) / hop;

  const QuantizedSignal q = quantize_9bit(u);

  std::vector<FrameFeatures> out;
  out.reserve(static_cast<size_t>(n_hops));
  for (int64_t k = 0; k < n_hops; ++k) {
    FrameFeatures f;
    f.hop_index = k;
    const int64_t center = k * hop + hop / 2;
    f.center_time_s = static_cast<double>(center) / rate;

    f.si = silence_index(q, k * hop - (si_len - hop) / 2, si_len,
                         plan.min_silence_run);

    const int64_t feat_start = k * hop - (feat_len - hop) / 2;
    try {
      const ExtremaSet e = select_extrema(b, feat_start, feat_len);
      if (!e.empty()) {
        auto [pfe, ple] = pfe_ple(e, feat_start + feat_len / 2, rate);
        f.pfe_ms = pfe;
        f.ple_ms = ple;
      }
      if (!e.maxima.empty() && !e.minima.empty()) {
        f.ade = ade(e);
        f.ade_reliable = *f.ade >= plan.ade_threshold;
      }
    } catch (const Error &err) {
      if (err.code() != ErrorCode::kInsufficientZeroCrossings) throw;
    }
    out.push_back(std::move(f));
  }
  return out;
}

}  // namespace phonoseg
