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
#include <kge/taxonomy.hpp>

#include <algorithm>
#include <stdexcept>

namespace kge {

namespace {

bool isIri(const Term& t, std::string_view iri) {
    return t.kind == TermKind::IRI && t.lexical == iri;
}

}  // namespace

void SchemaIndex::addTriple(const Triple& t) {
    auto classOrCount = [this](const Term& c) -> bool {
        if (c.kind != TermKind::IRI) {
            ++ignoredNonIriClasses;
            return false;
        }
        mentionedClasses.insert(c);
        return true;
    };

    if (isIri(t.predicate, vocab::kRdfsSubClassOf)) {
        const bool subOk = t.subject.kind == TermKind::IRI;
        if (!subOk)
            ++ignoredNonIriClasses;
        else
            mentionedClasses.insert(t.subject);
        if (classOrCount(t.object) && subOk)
            subclassEdges.emplace(t.subject, t.object);
    } else if (isIri(t.predicate, vocab::kRdfType)) {
        classOrCount(t.object);
    } else if (isIri(t.predicate, vocab::kRdfsDomain)) {
        if (classOrCount(t.object)) {
            auto [it, inserted] = domainOf.emplace(t.subject, t.object);
            if (!inserted && t.object < it->second)
                it->second = t.object;
        }
    } else if (isIri(t.predicate, vocab::kRdfsRange)) {
        if (classOrCount(t.object)) {
            auto [it, inserted] = rangeOf.emplace(t.subject, t.object);
            if (!inserted && t.object < it->second)
                it->second = t.object;
        }
    }
}

void SchemaIndex::merge(const SchemaIndex& other) {
    subclassEdges.insert(other.subclassEdges.begin(), other.subclassEdges.end());
    mentionedClasses.insert(other.mentionedClasses.begin(),
                            other.mentionedClasses.end());
    for (const auto& [pred, cls] : other.domainOf) {
        auto [it, inserted] = domainOf.emplace(pred, cls);
        if (!inserted && cls < it->second)
            it->second = cls;
    }
    for (const auto& [pred, cls] : other.rangeOf) {
        auto [it, inserted] = rangeOf.emplace(pred, cls);
        if (!inserted && cls < it->second)
            it->second = cls;
    }
    ignoredNonIriClasses += other.ignoredNonIriClasses;
}

SchemaIndex collectSchema(std::span<const Triple> triples) {
    SchemaIndex index;
    for (const Triple& t : triples)
        index.addTriple(t);
    return index;
}

ClassTaxonomy ClassTaxonomy::build(const SchemaIndex& schema) {
    ClassTaxonomy tax;

    const Term rootTerm = makeIri(std::string(vocab::kRdfsClass));
    tax.nodes_.push_back(Node{rootTerm, 0, false, {}});
    tax.index_.emplace(rootTerm, 0);
    for (const Term& cls : schema.mentionedClasses) {
        if (tax.index_.find(cls) != tax.index_.end())
            continue;  // rdfs:Class itself may be mentioned
        tax.index_.emplace(cls, tax.nodes_.size());
        tax.nodes_.push_back(Node{cls, 0, false, {}});
    }

    const size_t n = tax.nodes_.size();

    // subclassOf adjacency over node indexes; self-loops dropped.
    std::vector<std::vector<size_t>> subsOf(n);   // superclass -> subclasses
    std::vector<size_t> superCount(n, 0);         // original out-degree
    for (const auto& [sub, super] : schema.subclassEdges) {
        const size_t s = tax.index_.at(sub);
        const size_t p = tax.index_.at(super);
        if (s == p)
            continue;
        subsOf[p].push_back(s);
        ++superCount[s];
    }
    for (std::vector<size_t>& subs : subsOf) {
        std::sort(subs.begin(), subs.end(), [&](size_t a, size_t b) {
            return tax.nodes_[a].term < tax.nodes_[b].term;
        });
        subs.erase(std::unique(subs.begin(), subs.end()), subs.end());
    }

    std::vector<bool> visited(n, false);
    visited[0] = true;

    // Depth-first expansion along reversed subclass edges; children examined
    // in lexical order, already-visited children mean a dropped back edge.
    auto attachSubtree = [&](size_t entry) {
        std::vector<std::pair<size_t, size_t>> stack;
        stack.emplace_back(entry, 0);
        while (!stack.empty()) {
            auto& top = stack.back();
            if (top.second == subsOf[top.first].size()) {
                stack.pop_back();
                continue;
            }
            const size_t child = subsOf[top.first][top.second++];
            if (visited[child])
                continue;
            visited[child] = true;
            tax.nodes_[child].parent = top.first;
            tax.nodes_[child].original = true;
            stack.emplace_back(child, 0);
        }
    };

    attachSubtree(0);

    // Remaining vertices enter through their fallback edge to the root.
    // Top classes (no superclass at all) go first, in lexical order; they can
    // only ever be reached as entries, so each DFS below keeps every usable
    // subclass edge. What is left after that sits on cycles: break each by
    // promoting the lexically smallest remaining vertex.
    std::vector<size_t> order(n);
    for (size_t i = 0; i < n; ++i)
        order[i] = i;
    std::sort(order.begin(), order.end(), [&](size_t a, size_t b) {
        return tax.nodes_[a].term < tax.nodes_[b].term;
    });

    for (const size_t v : order) {
        if (visited[v] || superCount[v] != 0)
            continue;
        visited[v] = true;
        tax.nodes_[v].parent = 0;
        tax.nodes_[v].original = false;
        attachSubtree(v);
    }
    for (const size_t v : order) {
        if (visited[v])
            continue;
        visited[v] = true;
        tax.nodes_[v].parent = 0;
        tax.nodes_[v].original = false;
        attachSubtree(v);
    }

    for (size_t i = 1; i < n; ++i)
        tax.nodes_[tax.nodes_[i].parent].children.push_back(i);
    for (Node& node : tax.nodes_) {
        std::sort(node.children.begin(), node.children.end(),
                  [&](size_t a, size_t b) {
                      return tax.nodes_[a].term < tax.nodes_[b].term;
                  });
    }
    return tax;
}

void ClassTaxonomy::assignClassIds() {
    classIds_.assign(nodes_.size(), 0);
    uint64_t next = 0;
    // Iterative post-order from the root; children already in lexical order.
    std::vector<std::pair<size_t, size_t>> stack{{0, 0}};
    while (!stack.empty()) {
        auto& [node, childPos] = stack.back();
        if (childPos < nodes_[node].children.size()) {
            const size_t child = nodes_[node].children[childPos];
            ++childPos;
            stack.emplace_back(child, 0);
        } else {
            classIds_[node] = next++;
            stack.pop_back();
        }
    }
}

uint64_t ClassTaxonomy::classId(const Term& cls) const {
    auto it = index_.find(cls);
    if (it == index_.end())
        return maxId();
    return classIds_.at(it->second);
}

const Term& ClassTaxonomy::root() const { return nodes_.front().term; }

bool ClassTaxonomy::contains(const Term& cls) const {
    return index_.find(cls) != index_.end();
}

const Term& ClassTaxonomy::parentOf(const Term& cls) const {
    auto it = index_.find(cls);
    if (it == index_.end())
        throw std::out_of_range("not a taxonomy class: " + cls.lexical);
    return nodes_[nodes_[it->second].parent].term;
}

bool ClassTaxonomy::viaSubclassEdge(const Term& cls) const {
    auto it = index_.find(cls);
    if (it == index_.end())
        throw std::out_of_range("not a taxonomy class: " + cls.lexical);
    return nodes_[it->second].original;
}

std::vector<Term> ClassTaxonomy::classesInIdOrder() const {
    std::vector<Term> out(nodes_.size());
    for (size_t i = 0; i < nodes_.size(); ++i)
        out[classIds_[i]] = nodes_[i].term;
    return out;
}

std::string ClassTaxonomy::dump() const {
    std::vector<size_t> byId(nodes_.size());
    for (size_t i = 0; i < nodes_.size(); ++i)
        byId[classIds_[i]] = i;
    std::string out;
    for (const size_t node : byId) {
        out += std::to_string(classIds_[node]);
        out += '\t';
        out += std::to_string(classIds_[nodes_[node].parent]);
        out += '\t';
        out += nodes_[node].term.lexical;
        out += '\n';
    }
    return out;
}

}  // namespace kge
