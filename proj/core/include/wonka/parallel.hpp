// Copyright 2026 The Wonka Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef WONKA_PARALLEL_HPP_
#define WONKA_PARALLEL_HPP_

#include <cstdint>
#include <exception>
#include <functional>
#include <thread>
#include <vector>

#include "wonka/domain.hpp"

namespace wonka {

// base^exp, saturating at cap + 1 so callers can compare against a budget
// without overflow.
inline std::uint64_t checked_pow(std::uint64_t base, int exp, std::uint64_t cap) {
  std::uint64_t out = 1;
  for (int i = 0; i < exp; ++i) {
    if (base != 0 && out > cap / base) return cap + 1;
    out *= base;
    if (out > cap) return cap + 1;
  }
  return out;
}

// Decodes a sweep index into a profile; coordinate 0 varies fastest. Every
// sweep in the toolkit iterates indices 0..total-1 in order, so results are
// deterministic and chunkable.
inline void decode_profile(std::uint64_t index, int coords, Tick base, BidProfile& out) {
  out.resize(coords);
  for (int j = 0; j < coords; ++j) {
    out[j] = static_cast<Tick>(index % base);
    index /= base;
  }
}

// Runs body(chunk, begin, end) over a contiguous partition of [0, total).
// Chunks are disjoint and ordered; with jobs <= 1 the body runs inline.
// Exceptions from workers are rethrown (first chunk wins).
inline void parallel_for_chunks(std::uint64_t total, int jobs,
                                const std::function<void(int, std::uint64_t, std::uint64_t)>& body) {
  if (jobs <= 1 || total < 2) {
    body(0, 0, total);
    return;
  }
  std::uint64_t chunk_count = std::min<std::uint64_t>(static_cast<std::uint64_t>(jobs), total);
  std::uint64_t per = (total + chunk_count - 1) / chunk_count;
  std::vector<std::thread> workers;
  std::vector<std::exception_ptr> errors(chunk_count);
  for (std::uint64_t c = 0; c < chunk_count; ++c) {
    std::uint64_t begin = c * per;
    std::uint64_t end = std::min(total, begin + per);
    if (begin >= end) break;
    workers.emplace_back([&body, &errors, c, begin, end] {
      try {
        body(static_cast<int>(c), begin, end);
      } catch (...) {
        errors[c] = std::current_exception();
      }
    });
  }
  for (auto& w : workers) w.join();
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

}  // namespace wonka

#endif  // WONKA_PARALLEL_HPP_
