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
#ifndef KGE_MISRAGRIES_HPP
#define KGE_MISRAGRIES_HPP

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include <kge/term.hpp>

namespace kge {

/// Misra-Gries summary with at most k counters. Any term whose frequency
/// exceeds N/(k+1) over a stream of N occurrences is guaranteed to be
/// present; stored counts never exceed the true frequency.
class MgSummary {
public:
    explicit MgSummary(uint64_t capacity) : capacity_(capacity) {
        if (capacity == 0)
            throw std::invalid_argument("misra-gries capacity must be >= 1");
    }

    void update(const Term& t) {
        auto it = entries_.find(t);
        if (it != entries_.end()) {
            ++it->second;
            return;
        }
        if (entries_.size() < capacity_) {
            entries_.emplace(t, 1);
            return;
        }
        // Full and t absent: decrement everything, drop zeros, t is not kept.
        for (auto cur = entries_.begin(); cur != entries_.end();) {
            if (--cur->second == 0)
                cur = entries_.erase(cur);
            else
                ++cur;
        }
    }

    uint64_t capacity() const { return capacity_; }
    size_t size() const { return entries_.size(); }

    std::optional<uint64_t> count(const Term& t) const {
        auto it = entries_.find(t);
        if (it == entries_.end())
            return std::nullopt;
        return it->second;
    }

    const std::unordered_map<Term, uint64_t, TermHash>& entries() const {
        return entries_;
    }

    /// Mergeable-summary merge: counts are summed per term across all
    /// inputs; if more than k terms remain, the (k+1)-th largest count is
    /// subtracted from every entry and only positive entries survive.
    /// The result does not depend on the order of the inputs.
    static MgSummary merge(std::span<const MgSummary> summaries) {
        if (summaries.empty())
            throw std::invalid_argument("misra-gries merge: empty input");
        const uint64_t k = summaries.front().capacity_;
        for (const MgSummary& s : summaries)
            if (s.capacity_ != k)
                throw std::invalid_argument("misra-gries merge: capacity mismatch");

        MgSummary out(k);
        for (const MgSummary& s : summaries)
            for (const auto& [term, count] : s.entries_)
                out.entries_[term] += count;

        if (out.entries_.size() > k) {
            std::vector<uint64_t> counts;
            counts.reserve(out.entries_.size());
            for (const auto& [term, count] : out.entries_)
                counts.push_back(count);
            // (k+1)-th largest
            std::nth_element(counts.begin(), counts.begin() + k, counts.end(),
                             std::greater<>());
            const uint64_t cut = counts[k];
            for (auto it = out.entries_.begin(); it != out.entries_.end();) {
                if (it->second <= cut)
                    it = out.entries_.erase(it);
                else {
                    it->second -= cut;
                    ++it;
                }
            }
        }
        return out;
    }

    static MgSummary merge(const MgSummary& a, const MgSummary& b) {
        const MgSummary both[2] = {a, b};
        return merge(std::span<const MgSummary>(both, 2));
    }

    /// Rebuilds a summary from stored entries (deserialization). Entry count
    /// must not exceed the capacity.
    static MgSummary fromEntries(
        uint64_t capacity, std::span<const std::pair<Term, uint64_t>> entries) {
        MgSummary out(capacity);
        for (const auto& [term, count] : entries) {
            if (out.entries_.size() >= capacity)
                throw std::invalid_argument("summary larger than its capacity");
            if (count == 0)
                throw std::invalid_argument("summary count must be >= 1");
            out.entries_[term] = count;
        }
        return out;
    }

private:
    uint64_t capacity_;
    std::unordered_map<Term, uint64_t, TermHash> entries_;
};

}  // namespace kge

#endif
