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
#ifndef KGE_FBE_HPP
#define KGE_FBE_HPP

#include <cstdint>
#include <unordered_map>
#include <vector>

#include <kge/sketches.hpp>
#include <kge/term.hpp>

namespace kge {

/// Frequency-based dictionary: IDs 0,1,2,... assigned from the most to the
/// least frequent term.
struct FrequentDictionary {
    std::vector<std::pair<Term, uint64_t>> entries;  // index == id
    std::unordered_map<Term, uint64_t, TermHash> ids;

    bool contains(const Term& t) const { return ids.find(t) != ids.end(); }
    size_t size() const { return entries.size(); }
    /// First ID available to the infrequent part (0 when empty).
    uint64_t nextId() const { return entries.size(); }
};

/// Takes the top min(k, |estimates|) terms by (estimate desc, term asc) and
/// numbers them from 0. Duplicate input terms raise std::invalid_argument.
FrequentDictionary buildFrequentDictionary(
    std::vector<FrequencyEstimate> estimates, uint64_t k);

}  // namespace kge

#endif
