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
#ifndef KGE_HASHFAMILY_HPP
#define KGE_HASHFAMILY_HPP

#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include <kge/term.hpp>

namespace kge {

inline uint64_t splitmix64(uint64_t& state) {
    uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

inline uint64_t fmix64(uint64_t h) {
    h ^= h >> 33;
    h *= 0xff51afd7ed558ccdULL;
    h ^= h >> 33;
    h *= 0xc4ceb9fe1a85ec53ULL;
    h ^= h >> 33;
    return h;
}

/// Seeded 64-bit hash over raw bytes: FNV-1a with the seed folded into the
/// offset basis, strengthened with an avalanche finalizer.
inline uint64_t seededHash(const void* data, size_t len, uint64_t seed) {
    const auto* p = static_cast<const uint8_t*>(data);
    uint64_t h = 14695981039346656037ULL ^ seed;
    for (size_t i = 0; i < len; ++i) {
        h ^= p[i];
        h *= 1099511628211ULL;
    }
    return fmix64(h);
}

/// A family of n independent seeded hash functions over a term's
/// (kind byte ‖ lexical bytes). The n seeds are derived deterministically
/// from one master seed and are pairwise distinct.
class HashFamily {
public:
    HashFamily(uint32_t n, uint64_t masterSeed) : masterSeed_(masterSeed) {
        if (n == 0)
            throw std::invalid_argument("hash family needs n >= 1");
        uint64_t state = masterSeed;
        seeds_.reserve(n);
        while (seeds_.size() < n) {
            const uint64_t s = splitmix64(state);
            bool dup = false;
            for (const uint64_t prev : seeds_)
                dup = dup || (prev == s);
            if (!dup)
                seeds_.push_back(s);
        }
    }

    uint32_t size() const { return static_cast<uint32_t>(seeds_.size()); }
    uint64_t masterSeed() const { return masterSeed_; }
    std::span<const uint64_t> seeds() const { return seeds_; }

    uint64_t hash(const Term& t, uint32_t j) const {
        const uint64_t seed = seeds_[j];
        uint64_t h = 14695981039346656037ULL ^ seed;
        h ^= static_cast<uint8_t>(t.kind);
        h *= 1099511628211ULL;
        for (const char c : t.lexical) {
            h ^= static_cast<uint8_t>(c);
            h *= 1099511628211ULL;
        }
        return fmix64(h);
    }

    bool operator==(const HashFamily& other) const {
        return seeds_ == other.seeds_;
    }

private:
    uint64_t masterSeed_;
    std::vector<uint64_t> seeds_;
};

}  // namespace kge

#endif
