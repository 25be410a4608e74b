#ifndef HSLAB_IO_UTIL_HPP
#define HSLAB_IO_UTIL_HPP

#include <bit>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <istream>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "hslab/error.hpp"

namespace hslab {

// Explicit little-endian scalar I/O, independent of host byte order.

inline void write_u64_le(std::ostream &out, uint64_t value) {
    char bytes[8];
    for (int i = 0; i < 8; ++i)
        bytes[i] = char((value >> (8 * i)) & 0xff);
    out.write(bytes, 8);
}

inline uint64_t read_u64_le(std::istream &in) {
    unsigned char bytes[8];
    in.read(reinterpret_cast<char *>(bytes), 8);
    if (!in)
        throw Error(ErrorCode::FORMAT_ERROR, "unexpected end of binary data");
    uint64_t value = 0;
    for (int i = 0; i < 8; ++i)
        value |= uint64_t(bytes[i]) << (8 * i);
    return value;
}

inline void write_f64_le(std::ostream &out, double value) {
    write_u64_le(out, std::bit_cast<uint64_t>(value));
}

inline double read_f64_le(std::istream &in) {
    return std::bit_cast<double>(read_u64_le(in));
}

inline void write_f32_le(std::ostream &out, float value) {
    uint32_t bits = std::bit_cast<uint32_t>(value);
    char bytes[4];
    for (int i = 0; i < 4; ++i)
        bytes[i] = char((bits >> (8 * i)) & 0xff);
    out.write(bytes, 4);
}

inline float read_f32_le(std::istream &in) {
    unsigned char bytes[4];
    in.read(reinterpret_cast<char *>(bytes), 4);
    if (!in)
        throw Error(ErrorCode::FORMAT_ERROR, "unexpected end of binary data");
    uint32_t bits = 0;
    for (int i = 0; i < 4; ++i)
        bits |= uint32_t(bytes[i]) << (8 * i);
    return std::bit_cast<float>(bits);
}

// Shortest decimal string that parses back to exactly `value`.
inline std::string format_double(double value) {
    char buffer[64];
    for (int precision = 1; precision <= 17; ++precision) {
        std::snprintf(buffer, sizeof buffer, "%.*g", precision, value);
        if (std::strtod(buffer, nullptr) == value)
            break;
    }
    return buffer;
}

using KvPairs = std::vector<std::pair<std::string, std::string>>;

// Magic line, key=value lines, blank separator line.
inline void write_kv_header(std::ostream &out, const std::string &magic,
                            const KvPairs &pairs) {
    out << magic << '\n';
    for (const auto &[key, value] : pairs)
        out << key << '=' << value << '\n';
    out << '\n';
}

inline KvPairs read_kv_header(std::istream &in, const std::string &magic) {
    std::string line;
    if (!std::getline(in, line) || line != magic)
        throw Error(ErrorCode::FORMAT_ERROR,
                    "bad magic; expected '" + magic + "'");
    KvPairs pairs;
    while (std::getline(in, line)) {
        if (line.empty())
            return pairs;
        size_t split = line.find('=');
        if (split == std::string::npos)
            throw Error(ErrorCode::FORMAT_ERROR,
                        "malformed header line '" + line + "'");
        pairs.emplace_back(line.substr(0, split), line.substr(split + 1));
    }
    throw Error(ErrorCode::FORMAT_ERROR, "header not terminated");
}

inline const std::string &kv_get(const KvPairs &pairs, const std::string &key) {
    for (const auto &[k, v] : pairs)
        if (k == key)
            return v;
    throw Error(ErrorCode::FORMAT_ERROR, "missing header key '" + key + "'");
}

}

#endif
