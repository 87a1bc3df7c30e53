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
#ifndef KGE_DICTIONARY_HPP
#define KGE_DICTIONARY_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include <kge/term.hpp>

namespace kge {

using IdTriple = std::array<uint64_t, 3>;

/// Bijective term<->ID mapping with IDs contiguous from 0. The first
/// d1Size entries are the frequent part; the infrequent part follows with
/// no gap and no overlap.
struct Dictionary {
    std::vector<Term> terms;  // index == id
    std::unordered_map<Term, uint64_t, TermHash> ids;
    uint64_t d1Size = 0;

    size_t size() const { return terms.size(); }

    std::optional<uint64_t> idOf(const Term& t) const {
        auto it = ids.find(t);
        if (it == ids.end())
            return std::nullopt;
        return it->second;
    }

    /// Throws std::out_of_range naming the offending ID.
    const Term& termOf(uint64_t id) const;

    void rebuildIndex();  // refills `ids` from `terms`

    /// Canonical text form, sorted by ID: id<TAB>kind<TAB>lexical.
    /// Lexical forms may themselves contain tabs; only the first two tabs
    /// of a line are separators.
    std::string toText() const;
    static Dictionary fromText(std::string_view text);

    /// Binary companion for fast loading (magic KGDC, version, d1 size).
    std::string toBinary() const;
    static Dictionary fromBinary(std::string_view bytes);

    void saveText(const std::string& path) const;
    void saveBinary(const std::string& path) const;
    /// Loads either format, sniffing the binary magic.
    static Dictionary load(const std::string& path);
};

/// Encoded triple file: magic + triple count header, then three varints
/// (subject, predicate, object) per triple, no padding.
std::string encodedTriplesToBytes(std::span<const IdTriple> triples);
std::vector<IdTriple> encodedTriplesFromBytes(std::string_view bytes);
void saveEncodedTriples(const std::string& path, std::span<const IdTriple> t);
std::vector<IdTriple> loadEncodedTriples(const std::string& path);

}  // namespace kge

#endif
