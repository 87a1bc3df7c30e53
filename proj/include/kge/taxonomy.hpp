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
#ifndef KGE_TAXONOMY_HPP
#define KGE_TAXONOMY_HPP

#include <cstdint>
#include <map>
#include <set>
#include <span>
#include <string>
#include <vector>

#include <kge/term.hpp>

namespace kge {

/// Schema facts gathered in one pass: subclass edges, per-predicate domain
/// and range declarations, and every class mentioned by rdf:type,
/// rdfs:domain, rdfs:range or rdfs:subClassOf. Ordered containers keep the
/// index deterministic under parallel collection and merge.
struct SchemaIndex {
    std::set<std::pair<Term, Term>> subclassEdges;  // (subclass, superclass)
    std::map<Term, Term> domainOf;                  // predicate -> class
    std::map<Term, Term> rangeOf;                   // predicate -> class
    std::set<Term> mentionedClasses;
    uint64_t ignoredNonIriClasses = 0;

    void addTriple(const Triple& t);
    /// Set/map union. Conflicting domain or range declarations keep the
    /// lexically smaller class so the merge is order-independent.
    void merge(const SchemaIndex& other);
};

SchemaIndex collectSchema(std::span<const Triple> triples);

/// The class tree rooted at rdfs:Class with post-order class IDs. Every
/// descendant's ID is smaller than its ancestor's, subtree IDs form
/// contiguous ranges, and maxId() is a sentinel above every assigned ID.
class ClassTaxonomy {
public:
    /// Builds the tree: one vertex per mentioned class plus the root, the
    /// subclass edges, and one fallback edge per vertex to the root. The
    /// spanning tree keeps as many subclass edges as the greedy traversal
    /// can, visiting children in lexical order; cycle back edges are
    /// dropped and unattached vertices fall back to the root.
    static ClassTaxonomy build(const SchemaIndex& schema);

    /// Post-order numbering, children before parents, children visited in
    /// lexical order. Root receives the largest ID.
    void assignClassIds();

    bool idsAssigned() const { return !classIds_.empty() || nodes_.empty(); }

    /// Post-order ID for a known class, maxId() for anything else.
    uint64_t classId(const Term& cls) const;

    /// Sentinel strictly greater than every assigned class ID.
    uint64_t maxId() const { return nodes_.size(); }

    size_t classCount() const { return nodes_.size(); }
    const Term& root() const;
    bool contains(const Term& cls) const;

    /// Parent term of a known class; the root is its own parent.
    const Term& parentOf(const Term& cls) const;

    /// True when the child-parent link came from an rdfs:subClassOf triple
    /// rather than the fallback edge.
    bool viaSubclassEdge(const Term& cls) const;

    /// One line per class, ordered by class ID:
    /// classID<TAB>parentID<TAB>classIRI
    std::string dump() const;

    std::vector<Term> classesInIdOrder() const;

private:
    struct Node {
        Term term;
        size_t parent = 0;        // index into nodes_; root points to itself
        bool original = false;    // attached via a subclass edge
        std::vector<size_t> children;
    };

    std::vector<Node> nodes_;             // nodes_[0] is the root
    std::map<Term, size_t> index_;        // term -> node
    std::vector<uint64_t> classIds_;      // node index -> post-order id
};

}  // namespace kge

#endif
