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
#ifndef KGE_LBE_HPP
#define KGE_LBE_HPP

#include <cstdint>
#include <span>
#include <vector>

#include <kge/fbe.hpp>
#include <kge/taxonomy.hpp>
#include <kge/term.hpp>

namespace kge {

/// A term paired with a class ID it is an instance of (or the MAX sentinel
/// when no class is known).
struct Annotation {
    Term term;
    uint64_t classId = 0;

    bool operator==(const Annotation&) const = default;
};

/// Per-triple annotation, one pass of the locality encoding: every term of
/// <s,p,o> gets a MAX pair; additionally <s, id(o)> when p is rdf:type,
/// <s, id(domain(p))> and <o, id(range(p))> when the schema declares them.
/// Output is a multiset; duplicates are reduced later.
std::vector<Annotation> annotate(std::span<const Triple> triples,
                                 const ClassTaxonomy& taxonomy,
                                 const SchemaIndex& schema);

/// Drops every annotation whose term is already in the frequent dictionary.
std::vector<Annotation> filterFrequent(std::vector<Annotation> annotations,
                                       const FrequentDictionary& d1);

/// Keeps exactly one annotation per distinct term: the minimum class ID
/// seen for it. Result is sorted by term for determinism.
std::vector<Annotation> reduceMinClass(std::span<const Annotation> annotations);

/// Sorts by (class ID asc, term lexical asc) and assigns IDs incrementally
/// from startId. Input must hold one annotation per term (run
/// reduceMinClass first); duplicates raise std::invalid_argument.
std::vector<std::pair<Term, uint64_t>> assignInfrequentIds(
    std::vector<Annotation> reduced, uint64_t startId);

/// Annotation order used by the infrequent ID assignment.
inline bool annotationLess(const Annotation& a, const Annotation& b) {
    if (a.classId != b.classId)
        return a.classId < b.classId;
    return a.term < b.term;
}

}  // namespace kge

#endif
