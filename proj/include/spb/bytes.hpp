#pragma once

#include <array>
#include <cstdint>
#include <cstring>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace spb {

using Bytes = std::vector<std::uint8_t>;

// Append helpers used by every canonical serializer in the project.
// All integers are little-endian; variable-length fields carry a u32 length
// prefix. docs/FORMATS.md describes the resulting layouts byte by byte.
inline void put_u8(Bytes& out, std::uint8_t v) { out.push_back(v); }

inline void put_u32(Bytes& out, std::uint32_t v) {
    for (int i = 0; i < 4; ++i) out.push_back(static_cast<std::uint8_t>(v >> (8 * i)));
}

inline void put_u64(Bytes& out, std::uint64_t v) {
    for (int i = 0; i < 8; ++i) out.push_back(static_cast<std::uint8_t>(v >> (8 * i)));
}

inline void put_i64(Bytes& out, std::int64_t v) { put_u64(out, static_cast<std::uint64_t>(v)); }

inline void put_raw(Bytes& out, const std::uint8_t* data, std::size_t len) {
    out.insert(out.end(), data, data + len);
}

inline void put_raw(Bytes& out, const Bytes& data) { put_raw(out, data.data(), data.size()); }

template <std::size_t N>
void put_raw(Bytes& out, const std::array<std::uint8_t, N>& data) {
    put_raw(out, data.data(), N);
}

inline void put_prefixed(Bytes& out, const Bytes& data) {
    put_u32(out, static_cast<std::uint32_t>(data.size()));
    put_raw(out, data);
}

inline void put_prefixed(Bytes& out, std::string_view s) {
    put_u32(out, static_cast<std::uint32_t>(s.size()));
    out.insert(out.end(), s.begin(), s.end());
}

// Sequential reader for the same layouts. Reads return nullopt past the end
// instead of throwing so malformed inputs can be rejected cheaply.
class ByteReader {
public:
    explicit ByteReader(const Bytes& buf) : buf_(buf) {}

    std::optional<std::uint8_t> u8() {
        if (pos_ + 1 > buf_.size()) return std::nullopt;
        return buf_[pos_++];
    }

    std::optional<std::uint32_t> u32() {
        if (pos_ + 4 > buf_.size()) return std::nullopt;
        std::uint32_t v = 0;
        for (int i = 0; i < 4; ++i) v |= static_cast<std::uint32_t>(buf_[pos_ + i]) << (8 * i);
        pos_ += 4;
        return v;
    }

    std::optional<std::uint64_t> u64() {
        if (pos_ + 8 > buf_.size()) return std::nullopt;
        std::uint64_t v = 0;
        for (int i = 0; i < 8; ++i) v |= static_cast<std::uint64_t>(buf_[pos_ + i]) << (8 * i);
        pos_ += 8;
        return v;
    }

    std::optional<std::int64_t> i64() {
        auto v = u64();
        if (!v) return std::nullopt;
        return static_cast<std::int64_t>(*v);
    }

    bool raw(std::uint8_t* dst, std::size_t len) {
        if (pos_ + len > buf_.size()) return false;
        std::memcpy(dst, buf_.data() + pos_, len);
        pos_ += len;
        return true;
    }

    template <std::size_t N>
    bool fixed(std::array<std::uint8_t, N>& dst) {
        return raw(dst.data(), N);
    }

    std::optional<Bytes> prefixed() {
        auto len = u32();
        if (!len || pos_ + *len > buf_.size()) return std::nullopt;
        Bytes out(buf_.begin() + static_cast<std::ptrdiff_t>(pos_),
                  buf_.begin() + static_cast<std::ptrdiff_t>(pos_ + *len));
        pos_ += *len;
        return out;
    }

    bool exhausted() const { return pos_ == buf_.size(); }
    std::size_t remaining() const { return buf_.size() - pos_; }

private:
    const Bytes& buf_;
    std::size_t pos_ = 0;
};

inline std::string to_hex(const std::uint8_t* data, std::size_t len) {
    static const char* digits = "0123456789abcdef";
    std::string out;
    out.reserve(len * 2);
    for (std::size_t i = 0; i < len; ++i) {
        out.push_back(digits[data[i] >> 4]);
        out.push_back(digits[data[i] & 0xf]);
    }
    return out;
}

inline std::string to_hex(const Bytes& b) { return to_hex(b.data(), b.size()); }

template <std::size_t N>
std::string to_hex(const std::array<std::uint8_t, N>& a) {
    return to_hex(a.data(), N);
}

inline std::optional<Bytes> from_hex(std::string_view s) {
    auto nibble = [](char c) -> int {
        if (c >= '0' && c <= '9') return c - '0';
        if (c >= 'a' && c <= 'f') return c - 'a' + 10;
        if (c >= 'A' && c <= 'F') return c - 'A' + 10;
        return -1;
    };
    if (s.size() % 2 != 0) return std::nullopt;
    Bytes out;
    out.reserve(s.size() / 2);
    for (std::size_t i = 0; i < s.size(); i += 2) {
        int hi = nibble(s[i]);
        int lo = nibble(s[i + 1]);
        if (hi < 0 || lo < 0) return std::nullopt;
        out.push_back(static_cast<std::uint8_t>((hi << 4) | lo));
    }
    return out;
}

}  // namespace spb
