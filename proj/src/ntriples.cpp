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
#include <kge/ntriples.hpp>

#include <cstring>
#include <fstream>
#include <sstream>

#include <zlib.h>

namespace kge {

namespace {

bool isWs(char c) { return c == ' ' || c == '\t'; }

void skipWs(std::string_view line, size_t& pos) {
    while (pos < line.size() && isWs(line[pos]))
        ++pos;
}

// IRIREF: '<' .. '>' with no raw whitespace or another '<' inside.
bool readIri(std::string_view line, size_t& pos, Term& out, std::string& err) {
    size_t p = pos + 1;
    while (p < line.size() && line[p] != '>') {
        const char c = line[p];
        if (c == '<' || c == ' ' || c == '\t') {
            err = "invalid character in IRI";
            return false;
        }
        ++p;
    }
    if (p >= line.size()) {
        err = "unterminated IRI";
        return false;
    }
    if (p == pos + 1) {
        err = "empty IRI";
        return false;
    }
    out.kind = TermKind::IRI;
    out.lexical.assign(line.substr(pos + 1, p - pos - 1));
    pos = p + 1;
    return true;
}

bool isLabelChar(char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
           (c >= '0' && c <= '9') || c == '_' || c == '-' || c == '.';
}

bool readBlank(std::string_view line, size_t& pos, Term& out, std::string& err) {
    if (pos + 1 >= line.size() || line[pos + 1] != ':') {
        err = "expected ':' after '_'";
        return false;
    }
    size_t p = pos + 2;
    while (p < line.size() && isLabelChar(line[p]))
        ++p;
    if (p == pos + 2) {
        err = "empty blank node label";
        return false;
    }
    // A label must not end with '.', that dot terminates the statement.
    while (p > pos + 2 && line[p - 1] == '.')
        --p;
    if (p == pos + 2) {
        err = "empty blank node label";
        return false;
    }
    out.kind = TermKind::BlankNode;
    out.lexical.assign(line.substr(pos + 2, p - pos - 2));
    pos = p;
    return true;
}

bool isLangChar(char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
           (c >= '0' && c <= '9') || c == '-';
}

// The stored lexical form spans from the opening quote through the end of
// the optional language tag or datatype IRI.
bool readLiteral(std::string_view line, size_t& pos, Term& out,
                 std::string& err) {
    const size_t start = pos;
    size_t p = pos + 1;
    while (p < line.size()) {
        if (line[p] == '\\') {
            p += 2;
            continue;
        }
        if (line[p] == '"')
            break;
        ++p;
    }
    if (p >= line.size()) {
        err = "unterminated literal";
        return false;
    }
    ++p;  // past the closing quote
    if (p < line.size() && line[p] == '@') {
        ++p;
        const size_t tagStart = p;
        while (p < line.size() && isLangChar(line[p]))
            ++p;
        if (p == tagStart) {
            err = "empty language tag";
            return false;
        }
    } else if (p + 1 < line.size() && line[p] == '^' && line[p + 1] == '^') {
        p += 2;
        if (p >= line.size() || line[p] != '<') {
            err = "expected datatype IRI after '^^'";
            return false;
        }
        Term dt;
        if (!readIri(line, p, dt, err))
            return false;
    }
    out.kind = TermKind::Literal;
    out.lexical.assign(line.substr(start, p - start));
    pos = p;
    return true;
}

bool parseLine(std::string_view line, Triple& out, std::string& err) {
    size_t pos = 0;
    skipWs(line, pos);

    // subject: IRI or blank node
    if (pos >= line.size()) {
        err = "missing subject";
        return false;
    }
    if (line[pos] == '<') {
        if (!readIri(line, pos, out.subject, err))
            return false;
    } else if (line[pos] == '_') {
        if (!readBlank(line, pos, out.subject, err))
            return false;
    } else {
        err = "subject must be an IRI or blank node";
        return false;
    }

    skipWs(line, pos);
    if (pos >= line.size() || line[pos] != '<') {
        err = "predicate must be an IRI";
        return false;
    }
    if (!readIri(line, pos, out.predicate, err))
        return false;

    skipWs(line, pos);
    if (pos >= line.size()) {
        err = "missing object";
        return false;
    }
    if (line[pos] == '<') {
        if (!readIri(line, pos, out.object, err))
            return false;
    } else if (line[pos] == '_') {
        if (!readBlank(line, pos, out.object, err))
            return false;
    } else if (line[pos] == '"') {
        if (!readLiteral(line, pos, out.object, err))
            return false;
    } else {
        err = "object must be an IRI, blank node, or literal";
        return false;
    }

    skipWs(line, pos);
    if (pos >= line.size() || line[pos] != '.') {
        err = "missing terminating '.'";
        return false;
    }
    ++pos;
    skipWs(line, pos);
    if (pos < line.size() && line[pos] != '#') {
        err = "trailing content after '.'";
        return false;
    }
    return true;
}

}  // namespace

ParseResult parseNTriples(std::string_view text, ErrorPolicy policy) {
    ParseResult result;
    uint64_t lineNo = 0;
    size_t pos = 0;
    while (pos <= text.size()) {
        if (pos == text.size()) {
            break;
        }
        size_t eol = text.find('\n', pos);
        if (eol == std::string_view::npos)
            eol = text.size();
        std::string_view line = text.substr(pos, eol - pos);
        if (!line.empty() && line.back() == '\r')
            line.remove_suffix(1);
        ++lineNo;

        // blank and comment lines
        size_t p = 0;
        skipWs(line, p);
        if (p < line.size() && line[p] != '#') {
            Triple t;
            std::string err;
            if (parseLine(line, t, err)) {
                result.triples.push_back(std::move(t));
            } else {
                ParseError pe{lineNo, static_cast<uint64_t>(pos), err};
                if (policy == ErrorPolicy::Abort) {
                    std::ostringstream what;
                    what << "parse error at line " << lineNo << " (offset "
                         << pos << "): " << err;
                    throw ParseFailure(std::move(pe), what.str());
                }
                result.errors.push_back(std::move(pe));
            }
        }
        pos = eol + 1;
    }
    return result;
}

std::string loadPossiblyGzipped(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw std::runtime_error("cannot open file: " + path);
    std::string raw((std::istreambuf_iterator<char>(in)),
                    std::istreambuf_iterator<char>());
    if (in.bad())
        throw std::runtime_error("read failed: " + path);
    if (raw.size() < 2 || static_cast<uint8_t>(raw[0]) != 0x1f ||
        static_cast<uint8_t>(raw[1]) != 0x8b)
        return raw;

    // gzip magic found: inflate the whole stream.
    z_stream zs;
    std::memset(&zs, 0, sizeof(zs));
    if (inflateInit2(&zs, 16 + MAX_WBITS) != Z_OK)
        throw std::runtime_error("zlib init failed");
    std::string out;
    zs.next_in = reinterpret_cast<Bytef*>(raw.data());
    zs.avail_in = static_cast<uInt>(raw.size());
    char buf[1 << 16];
    int rc = Z_OK;
    do {
        zs.next_out = reinterpret_cast<Bytef*>(buf);
        zs.avail_out = sizeof(buf);
        rc = inflate(&zs, Z_NO_FLUSH);
        if (rc != Z_OK && rc != Z_STREAM_END) {
            inflateEnd(&zs);
            throw std::runtime_error("corrupt gzip stream: " + path);
        }
        out.append(buf, sizeof(buf) - zs.avail_out);
    } while (rc != Z_STREAM_END && (zs.avail_in > 0 || zs.avail_out == 0));
    inflateEnd(&zs);
    if (rc != Z_STREAM_END)
        throw std::runtime_error("truncated gzip stream: " + path);
    return out;
}

ParseResult parseNTriplesFile(const std::string& path, ErrorPolicy policy) {
    return parseNTriples(loadPossiblyGzipped(path), policy);
}

void serializeTerm(const Term& t, std::string& out) {
    switch (t.kind) {
        case TermKind::IRI:
            out.push_back('<');
            out.append(t.lexical);
            out.push_back('>');
            break;
        case TermKind::Literal:
            out.append(t.lexical);
            break;
        case TermKind::BlankNode:
            out.append("_:");
            out.append(t.lexical);
            break;
    }
}

void serializeTriple(const Triple& t, std::string& out) {
    serializeTerm(t.subject, out);
    out.push_back(' ');
    serializeTerm(t.predicate, out);
    out.push_back(' ');
    serializeTerm(t.object, out);
    out.append(" .\n");
}

std::string toNTriples(std::span<const Triple> triples) {
    std::string out;
    for (const Triple& t : triples)
        serializeTriple(t, out);
    return out;
}

std::vector<std::vector<Triple>> partitionRoundRobin(
    std::span<const Triple> triples, size_t m) {
    if (m == 0)
        throw std::invalid_argument("partition count must be >= 1");
    std::vector<std::vector<Triple>> parts(m);
    for (size_t i = 0; i < triples.size(); ++i)
        parts[i % m].push_back(triples[i]);
    return parts;
}

}  // namespace kge
