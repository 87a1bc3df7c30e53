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
#ifndef KGE_NTRIPLES_HPP
#define KGE_NTRIPLES_HPP

#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <kge/term.hpp>

namespace kge {

/// One malformed statement: 1-based line number, byte offset of the line
/// start within the input, and a short reason.
struct ParseError {
    uint64_t line = 0;
    uint64_t byteOffset = 0;
    std::string message;
};

enum class ErrorPolicy { Abort, SkipAndCount };

struct ParseResult {
    std::vector<Triple> triples;
    std::vector<ParseError> errors;  // populated only under SkipAndCount
};

/// Thrown under ErrorPolicy::Abort for the first malformed line.
class ParseFailure : public std::runtime_error {
public:
    ParseFailure(ParseError e, const std::string& what)
        : std::runtime_error(what), error(std::move(e)) {}
    ParseError error;
};

/// Parses newline-delimited N-Triples statements. Comment lines start with
/// '#'. Lexical forms are kept exactly as written; escape sequences are not
/// interpreted and blank node labels are not renamed.
ParseResult parseNTriples(std::string_view text,
                          ErrorPolicy policy = ErrorPolicy::Abort);

/// Reads a file (gzip-compressed input is detected by its magic bytes and
/// inflated) and parses it.
ParseResult parseNTriplesFile(const std::string& path,
                              ErrorPolicy policy = ErrorPolicy::Abort);

/// Loads a file into memory, transparently inflating gzip content.
std::string loadPossiblyGzipped(const std::string& path);

void serializeTerm(const Term& t, std::string& out);
void serializeTriple(const Triple& t, std::string& out);
std::string toNTriples(std::span<const Triple> triples);

/// Round-robin partitioning: triple index i goes to partition i mod m.
/// m = 0 raises std::invalid_argument.
std::vector<std::vector<Triple>> partitionRoundRobin(
    std::span<const Triple> triples, size_t m);

}  // namespace kge

#endif
