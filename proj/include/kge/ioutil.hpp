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
#ifndef KGE_IOUTIL_HPP
#define KGE_IOUTIL_HPP

#include <cstdint>
#include <cstring>
#include <stdexcept>
#include <string>
#include <string_view>

namespace kge {

/// Writes bytes to path atomically: a temp file in the same directory is
/// written first and renamed over the target, so a failed run never leaves a
/// partial output behind.
void writeFileAtomic(const std::string& path, std::string_view bytes);

std::string readFile(const std::string& path);

// Little-endian scalar append/read helpers for the binary formats.
inline void appendU32(std::string& out, uint32_t v) {
    for (int i = 0; i < 4; ++i)
        out.push_back(static_cast<char>((v >> (8 * i)) & 0xff));
}

inline void appendU64(std::string& out, uint64_t v) {
    for (int i = 0; i < 8; ++i)
        out.push_back(static_cast<char>((v >> (8 * i)) & 0xff));
}

class ByteReader {
public:
    ByteReader(std::string_view data, std::string what)
        : data_(data), what_(std::move(what)) {}

    uint32_t u32() {
        uint32_t v = 0;
        for (int i = 0; i < 4; ++i)
            v |= static_cast<uint32_t>(byte()) << (8 * i);
        return v;
    }

    uint64_t u64() {
        uint64_t v = 0;
        for (int i = 0; i < 8; ++i)
            v |= static_cast<uint64_t>(byte()) << (8 * i);
        return v;
    }

    uint8_t byte() {
        if (pos_ >= data_.size())
            fail("unexpected end of file");
        return static_cast<uint8_t>(data_[pos_++]);
    }

    std::string_view bytes(size_t n) {
        if (pos_ + n > data_.size())
            fail("unexpected end of file");
        std::string_view v = data_.substr(pos_, n);
        pos_ += n;
        return v;
    }

    size_t offset() const { return pos_; }
    size_t remaining() const { return data_.size() - pos_; }

    [[noreturn]] void fail(const std::string& msg) const {
        throw std::runtime_error(what_ + ": " + msg + " (offset " +
                                 std::to_string(pos_) + ")");
    }

private:
    std::string_view data_;
    std::string what_;
    size_t pos_ = 0;
};

}  // namespace kge

#endif
