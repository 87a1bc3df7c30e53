/*
 * Copyright 2026 the kge authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */
#ifndef KGE_SKETCHES_HPP
#define KGE_SKETCHES_HPP

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include <kge/countmin.hpp>
#include <kge/misragries.hpp>
#include <kge/term.hpp>

namespace kge {

struct FrequencyEstimate {
    Term term;
    uint64_t estimate = 0;
};

/// Sort order shared by all estimators: estimate descending, then term
/// lexical ascending.
void sortEstimates(std::vector<FrequencyEstimate>& estimates);

struct SketchParams {
    uint32_t hashes = 3;         // n counter arrays
    uint64_t width = 1ULL << 20; // w counters per array
    uint64_t k = 50;             // top-k threshold / summary capacity
    uint64_t seed = 1;
};

/// Merged per-worker sketch state after the counting pass.
struct HybridState {
    CountMinSketch cm;
    MgSummary mg;
    uint64_t occurrences = 0;
};

/// k-th largest value of a counter row; k in [1, |row|].
uint64_t kthLargest(std::span<const uint64_t> row, uint64_t k);

/// Frequent-term threshold: the k-th largest counter of the first merged
/// Count-Min array.
uint64_t cmmgThreshold(const CountMinSketch& merged, uint64_t k);

/// Candidates come from the merged Misra-Gries summary; each gets its
/// Count-Min estimate and is reported iff the estimate is strictly greater
/// than the threshold. Sorted by estimate descending, ties by term.
std::vector<FrequencyEstimate> cmmgTopk(const MgSummary& mergedMg,
                                        const CountMinSketch& mergedCm,
                                        uint64_t k);

/// Counting pass over round-robin partitions: one Count-Min sketch and one
/// Misra-Gries summary per partition, updated independently, then merged.
/// `workers` only controls thread count; the result depends on `partitions`
/// alone.
HybridState hybridCount(std::span<const Triple> triples, const SketchParams& p,
                        int partitions, int workers);

/// Serial reference for the parallel counting pass. Kept for tests and the
/// benchmark; must produce bit-identical state.
HybridState hybridCountSerial(std::span<const Triple> triples,
                              const SketchParams& p, int partitions);

/// Uniform-sampling baseline: each triple is kept independently with
/// probability `rate` (seeded); counts over the kept triples are scaled by
/// 1/rate. Returns every sampled term.
std::vector<FrequencyEstimate> sampleFrequencies(std::span<const Triple> triples,
                                                 double rate, uint64_t seed);

/// Exact counting over a hash table. Serial reference used as the oracle for
/// the sketch path and as the `exact` frequency method.
std::vector<FrequencyEstimate> exactFrequencies(std::span<const Triple> triples);

/// Versioned binary sketch-state file so counting and encoding can run as
/// separate invocations.
void saveSketch(const HybridState& state, const std::string& path);
HybridState loadSketch(const std::string& path);

}  // namespace kge

#endif
