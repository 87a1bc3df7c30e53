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
#include <kge/fbe.hpp>

#include <stdexcept>
#include <unordered_set>

namespace kge {

FrequentDictionary buildFrequentDictionary(
    std::vector<FrequencyEstimate> estimates, uint64_t k) {
    {
        std::unordered_set<Term, TermHash> seen;
        seen.reserve(estimates.size());
        for (const FrequencyEstimate& e : estimates)
            if (!seen.insert(e.term).second)
                throw std::invalid_argument(
                    "duplicate term in frequency estimates: " + e.term.lexical);
    }
    sortEstimates(estimates);
    const size_t take = std::min<size_t>(k, estimates.size());
    FrequentDictionary dict;
    dict.entries.reserve(take);
    dict.ids.reserve(take);
    for (size_t i = 0; i < take; ++i) {
        const uint64_t id = dict.entries.size();
        dict.ids.emplace(estimates[i].term, id);
        dict.entries.emplace_back(std::move(estimates[i].term), id);
    }
    return dict;
}

}  // namespace kge
