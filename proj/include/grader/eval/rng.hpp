// Copyright 2026 The mooc-grader Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
// https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef GRADER_EVAL_RNG_HPP
#define GRADER_EVAL_RNG_HPP

#include <cstdint>
#include <random>
#include <string_view>

namespace grader {

/// Identifies the resampling generator and draw method. Changing either
/// changes every bootstrap summary, so bump the version with it.
inline constexpr std::string_view kResamplerId = "mt19937_64-rejection/v1";

/// SplitMix64 finalizer; mixes a 64-bit value into a well-spread seed.
std::uint64_t splitmix64(std::uint64_t x);

/// Per-cell seed: splitmix64(master ^ fnv1a64(question_id + '\x1f' + source_key)).
/// Any (question, source) cell can be recomputed alone.
std::uint64_t cell_seed(std::uint64_t master_seed, std::string_view question_id,
                        std::string_view source_key);

/// Uniform index in [0, bound) from a 64-bit engine by rejection sampling.
/// Portable across standard libraries, unlike uniform_int_distribution.
std::uint64_t uniform_index(std::mt19937_64& engine, std::uint64_t bound);

}  // namespace grader

#endif  // GRADER_EVAL_RNG_HPP
