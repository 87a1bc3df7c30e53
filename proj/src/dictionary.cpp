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
#include <kge/dictionary.hpp>

#include <charconv>
#include <cstring>
#include <stdexcept>

#include <kge/ioutil.hpp>
#include <kge/varint.hpp>

namespace kge {

namespace {

constexpr char kDictMagic[4] = {'K', 'G', 'D', 'C'};
constexpr uint32_t kDictVersion = 1;
constexpr char kTriplesMagic[4] = {'K', 'G', 'T', 'R'};
constexpr uint32_t kTriplesVersion = 1;

std::string_view kindName(TermKind k) {
    switch (k) {
        case TermKind::IRI: return "iri";
        case TermKind::Literal: return "literal";
        case TermKind::BlankNode: return "bnode";
    }
    throw std::logic_error("unreachable term kind");
}

TermKind kindFromName(std::string_view name, uint64_t line) {
    if (name == "iri") return TermKind::IRI;
    if (name == "literal") return TermKind::Literal;
    if (name == "bnode") return TermKind::BlankNode;
    throw std::runtime_error("dictionary line " + std::to_string(line) +
                             ": unknown term kind '" + std::string(name) + "'");
}

}  // namespace

const Term& Dictionary::termOf(uint64_t id) const {
    if (id >= terms.size())
        throw std::out_of_range("unknown term ID " + std::to_string(id));
    return terms[static_cast<size_t>(id)];
}

void Dictionary::rebuildIndex() {
    ids.clear();
    ids.reserve(terms.size());
    for (size_t i = 0; i < terms.size(); ++i)
        ids.emplace(terms[i], static_cast<uint64_t>(i));
    if (ids.size() != terms.size())
        throw std::invalid_argument("dictionary contains duplicate terms");
}

std::string Dictionary::toText() const {
    std::string out;
    for (size_t i = 0; i < terms.size(); ++i) {
        out += std::to_string(i);
        out += '\t';
        out += kindName(terms[i].kind);
        out += '\t';
        out += terms[i].lexical;
        out += '\n';
    }
    return out;
}

Dictionary Dictionary::fromText(std::string_view text) {
    Dictionary dict;
    uint64_t lineNo = 0;
    size_t pos = 0;
    while (pos < text.size()) {
        size_t eol = text.find('\n', pos);
        if (eol == std::string_view::npos)
            eol = text.size();
        std::string_view line = text.substr(pos, eol - pos);
        pos = eol + 1;
        ++lineNo;
        if (line.empty())
            continue;
        const size_t tab1 = line.find('\t');
        const size_t tab2 =
            tab1 == std::string_view::npos ? tab1 : line.find('\t', tab1 + 1);
        if (tab2 == std::string_view::npos)
            throw std::runtime_error("dictionary line " + std::to_string(lineNo) +
                                     ": expected id<TAB>kind<TAB>lexical");
        const std::string_view idField = line.substr(0, tab1);
        uint64_t id = 0;
        auto [p, ec] =
            std::from_chars(idField.data(), idField.data() + idField.size(), id);
        if (ec != std::errc() || p != idField.data() + idField.size())
            throw std::runtime_error("dictionary line " + std::to_string(lineNo) +
                                     ": bad ID field");
        if (id != dict.terms.size())
            throw std::runtime_error("dictionary line " + std::to_string(lineNo) +
                                     ": IDs must be contiguous from 0");
        Term t;
        t.kind = kindFromName(line.substr(tab1 + 1, tab2 - tab1 - 1), lineNo);
        t.lexical.assign(line.substr(tab2 + 1));
        if (t.lexical.empty())
            throw std::runtime_error("dictionary line " + std::to_string(lineNo) +
                                     ": empty lexical form");
        dict.terms.push_back(std::move(t));
    }
    dict.rebuildIndex();
    return dict;
}

std::string Dictionary::toBinary() const {
    std::string out;
    out.append(kDictMagic, sizeof(kDictMagic));
    appendU32(out, kDictVersion);
    appendU64(out, terms.size());
    appendU64(out, d1Size);
    for (const Term& t : terms) {
        out.push_back(static_cast<char>(t.kind));
        varintAppend(out, t.lexical.size());
        out.append(t.lexical);
    }
    return out;
}

Dictionary Dictionary::fromBinary(std::string_view bytes) {
    ByteReader r(bytes, "dictionary");
    char magic[4];
    for (char& c : magic)
        c = static_cast<char>(r.byte());
    if (std::memcmp(magic, kDictMagic, 4) != 0)
        r.fail("bad magic");
    if (r.u32() != kDictVersion)
        r.fail("unsupported version");
    const uint64_t count = r.u64();
    Dictionary dict;
    dict.d1Size = r.u64();
    dict.terms.reserve(count);
    for (uint64_t i = 0; i < count; ++i) {
        Term t;
        const uint8_t kind = r.byte();
        if (kind > 2)
            r.fail("bad term kind");
        t.kind = static_cast<TermKind>(kind);
        uint64_t len = 0;
        // varint length
        int shift = 0;
        for (int b = 0;; ++b) {
            if (b == 10)
                r.fail("overlong varint");
            const uint8_t byte = r.byte();
            len |= static_cast<uint64_t>(byte & 0x7f) << shift;
            if ((byte & 0x80) == 0)
                break;
            shift += 7;
        }
        t.lexical.assign(r.bytes(len));
        dict.terms.push_back(std::move(t));
    }
    if (r.remaining() != 0)
        r.fail("trailing bytes");
    dict.rebuildIndex();
    return dict;
}

void Dictionary::saveText(const std::string& path) const {
    writeFileAtomic(path, toText());
}

void Dictionary::saveBinary(const std::string& path) const {
    writeFileAtomic(path, toBinary());
}

Dictionary Dictionary::load(const std::string& path) {
    const std::string data = readFile(path);
    if (data.size() >= 4 && std::memcmp(data.data(), kDictMagic, 4) == 0)
        return fromBinary(data);
    return fromText(data);
}

std::string encodedTriplesToBytes(std::span<const IdTriple> triples) {
    std::string out;
    out.reserve(16 + triples.size() * 3);
    out.append(kTriplesMagic, sizeof(kTriplesMagic));
    appendU32(out, kTriplesVersion);
    appendU64(out, triples.size());
    for (const IdTriple& t : triples) {
        varintAppend(out, t[0]);
        varintAppend(out, t[1]);
        varintAppend(out, t[2]);
    }
    return out;
}

std::vector<IdTriple> encodedTriplesFromBytes(std::string_view bytes) {
    if (bytes.size() < 16 || std::memcmp(bytes.data(), kTriplesMagic, 4) != 0)
        throw std::runtime_error("encoded triples: bad magic");
    ByteReader header(bytes.substr(4), "encoded triples");
    if (header.u32() != kTriplesVersion)
        throw std::runtime_error("encoded triples: unsupported version");
    const uint64_t count = header.u64();

    std::vector<IdTriple> out;
    out.reserve(count);
    const auto* p = reinterpret_cast<const uint8_t*>(bytes.data()) + 16;
    const auto* end = reinterpret_cast<const uint8_t*>(bytes.data()) + bytes.size();
    for (uint64_t i = 0; i < count; ++i) {
        IdTriple t;
        for (uint64_t& v : t) {
            const size_t offset =
                static_cast<size_t>(p - reinterpret_cast<const uint8_t*>(bytes.data()));
            if (!varintRead(p, end, v))
                throw std::runtime_error(
                    "encoded triples: corrupt varint at offset " +
                    std::to_string(offset));
        }
        out.push_back(t);
    }
    if (p != end)
        throw std::runtime_error("encoded triples: trailing bytes at offset " +
                                 std::to_string(p - reinterpret_cast<const uint8_t*>(
                                                        bytes.data())));
    return out;
}

void saveEncodedTriples(const std::string& path, std::span<const IdTriple> t) {
    writeFileAtomic(path, encodedTriplesToBytes(t));
}

std::vector<IdTriple> loadEncodedTriples(const std::string& path) {
    return encodedTriplesFromBytes(readFile(path));
}

}  // namespace kge
