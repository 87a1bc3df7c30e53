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
#ifndef KGE_COUNTMIN_HPP
#define KGE_COUNTMIN_HPP

#include <algorithm>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include <kge/hashfamily.hpp>
#include <kge/term.hpp>

namespace kge {

/// Count-Min sketch: n counter arrays of width w, one hash function per
/// array. Estimates never undercount.
class CountMinSketch {
public:
    CountMinSketch(uint32_t depth, uint64_t width, uint64_t seed)
        : family_(depth, seed), width_(width) {
        if (width == 0)
            throw std::invalid_argument("count-min width must be >= 1");
        cells_.assign(static_cast<size_t>(depth) * width, 0);
    }

    void update(const Term& t, uint64_t delta = 1) {
        for (uint32_t j = 0; j < family_.size(); ++j)
            cells_[j * width_ + family_.hash(t, j) % width_] += delta;
    }

    uint64_t estimate(const Term& t) const {
        uint64_t best = UINT64_MAX;
        for (uint32_t j = 0; j < family_.size(); ++j)
            best = std::min(best, cells_[j * width_ + family_.hash(t, j) % width_]);
        return best;
    }

    /// Elementwise sum. Shapes and seeds must match.
    void merge(const CountMinSketch& other) {
        if (width_ != other.width_ || !(family_ == other.family_))
            throw std::invalid_argument("count-min merge: shape or seed mismatch");
        for (size_t i = 0; i < cells_.size(); ++i)
            cells_[i] += other.cells_[i];
    }

    uint32_t depth() const { return family_.size(); }
    uint64_t width() const { return width_; }
    const HashFamily& family() const { return family_; }

    std::span<const uint64_t> row(uint32_t j) const {
        return {cells_.data() + static_cast<size_t>(j) * width_,
                static_cast<size_t>(width_)};
    }

    uint64_t rowTotal(uint32_t j) const {
        uint64_t sum = 0;
        for (const uint64_t c : row(j))
            sum += c;
        return sum;
    }

    std::span<const uint64_t> cells() const { return cells_; }
    std::span<uint64_t> mutableCells() { return cells_; }

private:
    HashFamily family_;
    uint64_t width_;
    std::vector<uint64_t> cells_;
};

}  // namespace kge

#endif
