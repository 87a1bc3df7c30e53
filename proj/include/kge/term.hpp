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
#ifndef KGE_TERM_HPP
#define KGE_TERM_HPP

#include <array>
#include <cstdint>
#include <string>
#include <string_view>

namespace kge {

enum class TermKind : uint8_t { IRI = 0, Literal = 1, BlankNode = 2 };

/// One RDF term. The lexical form is kept verbatim, byte for byte:
/// IRIs without the surrounding angle brackets, literals with their quotes
/// and any trailing language tag or datatype, blank nodes without the "_:".
struct Term {
    TermKind kind = TermKind::IRI;
    std::string lexical;

    bool operator==(const Term&) const = default;
};

// Total order used wherever ties are broken "by term": lexical bytes first,
// kind only to disambiguate equal lexical forms.
inline bool operator<(const Term& a, const Term& b) {
    const int c = a.lexical.compare(b.lexical);
    if (c != 0)
        return c < 0;
    return a.kind < b.kind;
}

inline Term makeIri(std::string s) { return Term{TermKind::IRI, std::move(s)}; }
inline Term makeLiteral(std::string s) { return Term{TermKind::Literal, std::move(s)}; }
inline Term makeBlank(std::string s) { return Term{TermKind::BlankNode, std::move(s)}; }

struct Triple {
    Term subject;
    Term predicate;
    Term object;

    bool operator==(const Triple&) const = default;
};

inline bool operator<(const Triple& a, const Triple& b) {
    if (!(a.subject == b.subject))
        return a.subject < b.subject;
    if (!(a.predicate == b.predicate))
        return a.predicate < b.predicate;
    return a.object < b.object;
}

/// The three term occurrences of a triple, in SPO order. Repeated terms count
/// once per position.
inline std::array<const Term*, 3> termOccurrences(const Triple& t) {
    return {&t.subject, &t.predicate, &t.object};
}

// FNV-1a, good enough for hash containers. Sketch hashing uses the seeded
// family in hashfamily.hpp instead.
struct TermHash {
    size_t operator()(const Term& t) const noexcept {
        uint64_t h = 14695981039346656037ULL;
        auto step = [&h](uint8_t b) {
            h ^= b;
            h *= 1099511628211ULL;
        };
        step(static_cast<uint8_t>(t.kind));
        for (const char c : t.lexical)
            step(static_cast<uint8_t>(c));
        return static_cast<size_t>(h);
    }
};

namespace vocab {
inline constexpr std::string_view kRdfType =
    "http://www.w3.org/1999/02/22-rdf-syntax-ns#type";
inline constexpr std::string_view kRdfsSubClassOf =
    "http://www.w3.org/2000/01/rdf-schema#subClassOf";
inline constexpr std::string_view kRdfsDomain =
    "http://www.w3.org/2000/01/rdf-schema#domain";
inline constexpr std::string_view kRdfsRange =
    "http://www.w3.org/2000/01/rdf-schema#range";
inline constexpr std::string_view kRdfsClass =
    "http://www.w3.org/2000/01/rdf-schema#Class";
}  // namespace vocab

}  // namespace kge

#endif
