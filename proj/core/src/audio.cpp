// core/src/audio.cpp
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

#include "phonoseg/audio.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <fstream>
#include <sstream>
#include <string>

#include "phonoseg/error.hpp"

namespace phonoseg {

namespace {

std::vector<uint8_t> read_file(const std::filesystem::path &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error(ErrorCode::kIoNotFound, "cannot open " + path.string());
  }
  std::vector<uint8_t> bytes((std::istreambuf_iterator<char>(in)),
                             std::istreambuf_iterator<char>());
  return bytes;
}

uint16_t le16(const uint8_t *p) {
  return static_cast<uint16_t>(p[0] | (p[1] << 8));
}

uint32_t le32(const uint8_t *p) {
  return static_cast<uint32_t>(p[0]) | (static_cast<uint32_t>(p[1]) << 8) |
         (static_cast<uint32_t>(p[2]) << 16) |
         (static_cast<uint32_t>(p[3]) << 24);
}

RawAudio parse_wav(const std::vector<uint8_t> &bytes,
                   const std::filesystem::path &path) {
  if (bytes.size() < 12 || std::memcmp(bytes.data(), "RIFF", 4) != 0 ||
      std::memcmp(bytes.data() + 8, "WAVE", 4) != 0) {
    throw Error(ErrorCode::kCorruptHeader,
                "not a RIFF/WAVE file: " + path.string());
  }

  bool have_fmt = false;
  uint16_t format_tag = 0, channels = 0, bits = 0;
  uint32_t sample_rate = 0;
  size_t data_off = 0, data_len = 0;

  size_t pos = 12;
  while (pos + 8 <= bytes.size()) {
    const uint8_t *hdr = bytes.data() + pos;
    uint32_t chunk_len = le32(hdr + 4);
    size_t body = pos + 8;
    if (body + chunk_len > bytes.size()) {
      throw Error(ErrorCode::kCorruptHeader,
                  "truncated chunk in " + path.string());
    }
    if (std::memcmp(hdr, "fmt ", 4) == 0) {
      if (chunk_len < 16) {
        throw Error(ErrorCode::kCorruptHeader,
                    "fmt chunk too short in " + path.string());
      }
      const uint8_t *f = bytes.data() + body;
      format_tag = le16(f);
      channels = le16(f + 2);
      sample_rate = le32(f + 4);
      bits = le16(f + 14);
      // WAVE_FORMAT_EXTENSIBLE carries the real format code in the first
      // two bytes of the SubFormat GUID.
      if (format_tag == 0xFFFE && chunk_len >= 40) {
        format_tag = le16(f + 24);
      }
      have_fmt = true;
    } else if (std::memcmp(hdr, "data", 4) == 0) {
      data_off = body;
      data_len = chunk_len;
    }
    pos = body + chunk_len + (chunk_len & 1);  // chunks are word-aligned
  }

  if (!have_fmt || data_off == 0) {
    throw Error(ErrorCode::kCorruptHeader,
                "missing fmt or data chunk in " + path.string());
  }
  if (format_tag != 1) {
    throw Error(ErrorCode::kNonPcmEncoding,
                "WAV format tag " + std::to_string(format_tag) +
                    " is not linear PCM: " + path.string());
  }
  if (bits != 16) {
    throw Error(ErrorCode::kUnsupportedFormat,
                std::to_string(bits) + "-bit WAV not supported (16-bit only): " +
                    path.string());
  }
  if (channels != 1) {
    throw Error(ErrorCode::kUnsupportedFormat,
                std::to_string(channels) +
                    "-channel WAV rejected (mono only): " + path.string());
  }
  if (sample_rate < 8000) {
    throw Error(ErrorCode::kUnsupportedFormat,
                "sample rate below 8000 Hz: " + path.string());
  }
  if (data_len % 2 != 0) {
    throw Error(ErrorCode::kCorruptHeader,
                "odd data chunk length in " + path.string());
  }

  RawAudio raw;
  raw.sample_rate = static_cast<int>(sample_rate);
  raw.channels = 1;
  raw.samples.resize(data_len / 2);
  const uint8_t *d = bytes.data() + data_off;
  for (size_t i = 0; i < raw.samples.size(); ++i) {
    raw.samples[i] = static_cast<int16_t>(le16(d + 2 * i));
  }
  if (raw.samples.empty()) {
    throw Error(ErrorCode::kCorruptHeader, "empty data chunk: " + path.string());
  }
  return raw;
}

RawAudio parse_sphere(const std::vector<uint8_t> &bytes,
                      const std::filesystem::path &path) {
  if (bytes.size() < 16 || std::memcmp(bytes.data(), "NIST_1A", 7) != 0) {
    throw Error(ErrorCode::kCorruptHeader,
                "not a NIST SPHERE file: " + path.string());
  }

  // Line 2 of the header holds the total header size in bytes.
  std::string head(reinterpret_cast<const char *>(bytes.data()),
                   std::min<size_t>(bytes.size(), 1024));
  std::istringstream hs(head);
  std::string line;
  std::getline(hs, line);  // NIST_1A
  if (!std::getline(hs, line)) {
    throw Error(ErrorCode::kCorruptHeader, "truncated header: " + path.string());
  }
  size_t header_size = 0;
  try {
    header_size = static_cast<size_t>(std::stoul(line));
  } catch (const std::exception &) {
    throw Error(ErrorCode::kCorruptHeader,
                "bad header size line: " + path.string());
  }
  if (header_size < 16 || header_size > bytes.size()) {
    throw Error(ErrorCode::kCorruptHeader,
                "header size out of range: " + path.string());
  }

  long channel_count = 1;
  long sample_count = -1;
  long sample_rate = 0;
  long sample_n_bytes = 2;
  std::string byte_format = "01";  // little-endian default
  std::string coding = "pcm";

  std::string full_head(reinterpret_cast<const char *>(bytes.data()),
                        header_size);
  std::istringstream fields(full_head);
  std::getline(fields, line);
  std::getline(fields, line);
  while (std::getline(fields, line)) {
    if (line.rfind("end_head", 0) == 0) break;
    std::istringstream ls(line);
    std::string name, type, value;
    if (!(ls >> name >> type >> value)) continue;
    if (name == "channel_count") channel_count = std::stol(value);
    else if (name == "sample_count") sample_count = std::stol(value);
    else if (name == "sample_rate") sample_rate = std::stol(value);
    else if (name == "sample_n_bytes") sample_n_bytes = std::stol(value);
    else if (name == "sample_byte_format") byte_format = value;
    else if (name == "sample_coding") coding = value;
  }

  if (coding.rfind("pcm", 0) != 0 || coding.find("shorten") != std::string::npos) {
    throw Error(ErrorCode::kNonPcmEncoding,
                "sample_coding '" + coding + "' is not plain pcm: " +
                    path.string());
  }
  if (sample_n_bytes != 2) {
    throw Error(ErrorCode::kUnsupportedFormat,
                "sample_n_bytes " + std::to_string(sample_n_bytes) +
                    " not supported (16-bit only): " + path.string());
  }
  if (channel_count != 1) {
    throw Error(ErrorCode::kUnsupportedFormat,
                std::to_string(channel_count) +
                    "-channel SPHERE rejected (mono only): " + path.string());
  }
  if (sample_rate < 8000) {
    throw Error(ErrorCode::kUnsupportedFormat,
                "sample rate below 8000 Hz: " + path.string());
  }
  if (sample_count <= 0) {
    throw Error(ErrorCode::kCorruptHeader,
                "missing sample_count: " + path.string());
  }
  if (header_size + 2 * static_cast<size_t>(sample_count) > bytes.size()) {
    throw Error(ErrorCode::kCorruptHeader,
                "file shorter than declared sample_count: " + path.string());
  }

  bool big_endian = (byte_format == "10");
  RawAudio raw;
  raw.sample_rate = static_cast<int>(sample_rate);
  raw.channels = 1;
  raw.samples.resize(static_cast<size_t>(sample_count));
  const uint8_t *d = bytes.data() + header_size;
  for (size_t i = 0; i < raw.samples.size(); ++i) {
    uint16_t v = big_endian
                     ? static_cast<uint16_t>((d[2 * i] << 8) | d[2 * i + 1])
                     : le16(d + 2 * i);
    raw.samples[i] = static_cast<int16_t>(v);
  }
  return raw;
}

}  // namespace

RawAudio load_audio(const std::filesystem::path &path, AudioFormat hint) {
  std::vector<uint8_t> bytes = read_file(path);
  if (hint == AudioFormat::kAuto) {
    if (bytes.size() >= 7 && std::memcmp(bytes.data(), "NIST_1A", 7) == 0) {
      hint = AudioFormat::kSphere;
    } else if (bytes.size() >= 4 && std::memcmp(bytes.data(), "RIFF", 4) == 0) {
      hint = AudioFormat::kWav;
    } else {
      throw Error(ErrorCode::kUnsupportedFormat,
                  "unrecognized audio container: " + path.string());
    }
  }
  return hint == AudioFormat::kWav ? parse_wav(bytes, path)
                                   : parse_sphere(bytes, path);
}

Utterance normalize(const RawAudio &raw) {
  if (raw.samples.empty()) {
    throw Error(ErrorCode::kDegenerateSignal, "empty signal");
  }
  const int64_t m = static_cast<int64_t>(raw.samples.size());
  int64_t sum = 0;
  for (int32_t s : raw.samples) sum += s;

  // Demeaned sample i is (m*x[i] - sum)/m; normalize by the peak of the
  // numerators so every output is a single rounding of an exact ratio.
  int64_t peak = 0;
  for (int32_t s : raw.samples) {
    peak = std::max<int64_t>(peak, std::llabs(m * static_cast<int64_t>(s) - sum));
  }
  if (peak == 0) {
    throw Error(ErrorCode::kDegenerateSignal,
                "signal is constant; demeaning yields all zeros");
  }

  Utterance u;
  u.sample_rate = raw.sample_rate;
  u.samples.resize(raw.samples.size());
  const double denom = static_cast<double>(peak);
  for (size_t i = 0; i < raw.samples.size(); ++i) {
    int64_t num = m * static_cast<int64_t>(raw.samples[i]) - sum;
    u.samples[i] = static_cast<double>(num) / denom;
  }
  return u;
}

QuantizedSignal quantize_9bit(const Utterance &u) {
  QuantizedSignal q;
  q.sample_rate = u.sample_rate;
  q.qsamples.resize(u.samples.size());
  for (size_t i = 0; i < u.samples.size(); ++i) {
    // A guard of 1e-6 keeps grid-aligned inputs (q/32767 stored as double)
    // from truncating one integer low; genuine audio is unaffected.
    double mag = std::abs(u.samples[i]) * 32767.0 + 1e-6;
    int32_t v = static_cast<int32_t>(std::min(mag, 32767.0));
    v = (v >> 7) << 7;
    q.qsamples[i] = u.samples[i] < 0 ? -v : v;
  }
  return q;
}

}  // namespace phonoseg
