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
#include <kge/sketches.hpp>

#include <algorithm>
#include <cmath>
#include <functional>
#include <random>
#include <unordered_map>

#include <omp.h>

#include <kge/ioutil.hpp>

namespace kge {

namespace {
constexpr char kSketchMagic[4] = {'K', 'G', 'S', 'K'};
constexpr uint32_t kSketchVersion = 1;
}  // namespace

void sortEstimates(std::vector<FrequencyEstimate>& estimates) {
    std::sort(estimates.begin(), estimates.end(),
              [](const FrequencyEstimate& a, const FrequencyEstimate& b) {
                  if (a.estimate != b.estimate)
                      return a.estimate > b.estimate;
                  return a.term < b.term;
              });
}

uint64_t kthLargest(std::span<const uint64_t> row, uint64_t k) {
    if (k == 0 || k > row.size())
        throw std::invalid_argument("k must be in [1, row size]");
    std::vector<uint64_t> copy(row.begin(), row.end());
    std::nth_element(copy.begin(), copy.begin() + (k - 1), copy.end(),
                     std::greater<>());
    return copy[k - 1];
}

uint64_t cmmgThreshold(const CountMinSketch& merged, uint64_t k) {
    if (k > merged.width())
        throw std::invalid_argument("k exceeds counter array width");
    return kthLargest(merged.row(0), k);
}

std::vector<FrequencyEstimate> cmmgTopk(const MgSummary& mergedMg,
                                        const CountMinSketch& mergedCm,
                                        uint64_t k) {
    const uint64_t threshold = cmmgThreshold(mergedCm, k);
    std::vector<FrequencyEstimate> out;
    out.reserve(mergedMg.size());
    for (const auto& [term, storedCount] : mergedMg.entries()) {
        const uint64_t estimate = mergedCm.estimate(term);
        if (estimate > threshold)
            out.push_back({term, estimate});
    }
    sortEstimates(out);
    return out;
}

namespace {

struct PartitionState {
    PartitionState(const SketchParams& p)
        : cm(p.hashes, p.width, p.seed), mg(p.k) {}
    CountMinSketch cm;
    MgSummary mg;
    uint64_t occurrences = 0;
};

HybridState mergePartitions(std::vector<PartitionState>& parts) {
    CountMinSketch cm = std::move(parts[0].cm);
    uint64_t occurrences = parts[0].occurrences;
    for (size_t i = 1; i < parts.size(); ++i) {
        cm.merge(parts[i].cm);
        occurrences += parts[i].occurrences;
    }
    std::vector<MgSummary> summaries;
    summaries.reserve(parts.size());
    for (PartitionState& p : parts)
        summaries.push_back(std::move(p.mg));
    MgSummary mg = MgSummary::merge(summaries);
    return HybridState{std::move(cm), std::move(mg), occurrences};
}

void countPartition(std::span<const Triple> triples, size_t part, size_t step,
                    PartitionState& state) {
    for (size_t i = part; i < triples.size(); i += step) {
        for (const Term* t : termOccurrences(triples[i])) {
            state.cm.update(*t);
            state.mg.update(*t);
            ++state.occurrences;
        }
    }
}

}  // namespace

HybridState hybridCount(std::span<const Triple> triples, const SketchParams& p,
                        int partitions, int workers) {
    if (partitions < 1)
        throw std::invalid_argument("partitions must be >= 1");
    if (workers < 1)
        throw std::invalid_argument("workers must be >= 1");
    std::vector<PartitionState> parts(static_cast<size_t>(partitions),
                                      PartitionState(p));
#pragma omp parallel for num_threads(workers) schedule(dynamic, 1)
    for (int part = 0; part < partitions; ++part)
        countPartition(triples, static_cast<size_t>(part),
                       static_cast<size_t>(partitions), parts[part]);
    return mergePartitions(parts);
}

HybridState hybridCountSerial(std::span<const Triple> triples,
                              const SketchParams& p, int partitions) {
    if (partitions < 1)
        throw std::invalid_argument("partitions must be >= 1");
    std::vector<PartitionState> parts(static_cast<size_t>(partitions),
                                      PartitionState(p));
    for (int part = 0; part < partitions; ++part)
        countPartition(triples, static_cast<size_t>(part),
                       static_cast<size_t>(partitions), parts[part]);
    return mergePartitions(parts);
}

std::vector<FrequencyEstimate> sampleFrequencies(std::span<const Triple> triples,
                                                 double rate, uint64_t seed) {
    if (!(rate > 0.0) || rate > 1.0)
        throw std::invalid_argument("sampling rate must be in (0, 1]");
    std::mt19937_64 rng(seed);
    std::bernoulli_distribution keep(rate);
    std::unordered_map<Term, uint64_t, TermHash> counts;
    for (const Triple& t : triples) {
        if (!keep(rng))
            continue;
        for (const Term* term : termOccurrences(t))
            ++counts[*term];
    }
    std::vector<FrequencyEstimate> out;
    out.reserve(counts.size());
    for (const auto& [term, count] : counts) {
        const auto scaled =
            static_cast<uint64_t>(std::llround(static_cast<double>(count) / rate));
        out.push_back({term, scaled});
    }
    sortEstimates(out);
    return out;
}

std::vector<FrequencyEstimate> exactFrequencies(std::span<const Triple> triples) {
    std::unordered_map<Term, uint64_t, TermHash> counts;
    for (const Triple& t : triples)
        for (const Term* term : termOccurrences(t))
            ++counts[*term];
    std::vector<FrequencyEstimate> out;
    out.reserve(counts.size());
    for (const auto& [term, count] : counts)
        out.push_back({term, count});
    sortEstimates(out);
    return out;
}

void saveSketch(const HybridState& state, const std::string& path) {
    std::string out;
    out.append(kSketchMagic, sizeof(kSketchMagic));
    appendU32(out, kSketchVersion);
    appendU32(out, state.cm.depth());
    appendU64(out, state.cm.width());
    appendU64(out, state.mg.capacity());
    appendU64(out, state.cm.family().masterSeed());
    appendU64(out, state.occurrences);
    for (const uint64_t s : state.cm.family().seeds())
        appendU64(out, s);
    for (const uint64_t c : state.cm.cells())
        appendU64(out, c);

    // Summary entries sorted by term so the file is byte-deterministic.
    std::vector<std::pair<Term, uint64_t>> entries(state.mg.entries().begin(),
                                                   state.mg.entries().end());
    std::sort(entries.begin(), entries.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    appendU64(out, entries.size());
    for (const auto& [term, count] : entries) {
        out.push_back(static_cast<char>(term.kind));
        appendU64(out, term.lexical.size());
        out.append(term.lexical);
        appendU64(out, count);
    }
    writeFileAtomic(path, out);
}

HybridState loadSketch(const std::string& path) {
    const std::string data = readFile(path);
    ByteReader r(data, "sketch file " + path);
    char magic[4];
    for (char& c : magic)
        c = static_cast<char>(r.byte());
    if (std::memcmp(magic, kSketchMagic, 4) != 0)
        r.fail("bad magic");
    const uint32_t version = r.u32();
    if (version != kSketchVersion)
        r.fail("unsupported version " + std::to_string(version));
    const uint32_t depth = r.u32();
    const uint64_t width = r.u64();
    const uint64_t k = r.u64();
    const uint64_t seed = r.u64();
    const uint64_t occurrences = r.u64();

    HybridState state{CountMinSketch(depth, width, seed), MgSummary(k),
                      occurrences};
    for (uint32_t j = 0; j < depth; ++j) {
        const uint64_t expected = state.cm.family().seeds()[j];
        if (r.u64() != expected)
            r.fail("seed table does not match master seed derivation");
    }
    auto cells = state.cm.mutableCells();
    for (uint64_t& c : cells)
        c = r.u64();

    const uint64_t entryCount = r.u64();
    if (entryCount > k)
        r.fail("summary larger than its capacity");
    std::vector<std::pair<Term, uint64_t>> entries;
    entries.reserve(entryCount);
    for (uint64_t i = 0; i < entryCount; ++i) {
        Term t;
        t.kind = static_cast<TermKind>(r.byte());
        const uint64_t len = r.u64();
        t.lexical.assign(r.bytes(len));
        entries.emplace_back(std::move(t), r.u64());
    }
    state.mg = MgSummary::fromEntries(k, entries);
    if (r.remaining() != 0)
        r.fail("trailing bytes");
    return state;
}

}  // namespace kge
