#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <istream>
#include <ostream>
#include <string>

#include <json.hpp>

#include "mocrop/errors.hpp"
#include "mocrop/types.hpp"

// Motion-vector sidecar files. Two interconvertible carriers:
//
//   JSONL  - UTF-8, one object per line, LF endings. Line 1 is a header
//            {"clip_id": "...", "width": W, "height": H} (clip_id optional),
//            every further line is {"f": frame, "x":, "y":, "dx":, "dy":}.
//   binary - "MVS1" magic, u32 version (=1), u32 width, u32 height,
//            u64 record count, then fixed 20-byte records:
//            u32 frame_index, f32 x, f32 y, f32 dx, f32 dy.
//            All integers and floats little-endian.
//
// Coordinates are f32 in both carriers, which is exact for quarter-pel codec
// motion vectors. The bitstream itself is never touched here; an external
// decoder emits these files.

namespace mocrop {

struct SidecarHeader {
    static constexpr std::array<char, 4> kMagic{'M', 'V', 'S', '1'};
    static constexpr std::uint32_t kVersion = 1;

    std::uint32_t width = 0;
    std::uint32_t height = 0;
    std::uint64_t record_count = 0;
};

namespace detail {

inline void put_u32(std::ostream& out, std::uint32_t v) {
    const char b[4] = {static_cast<char>(v & 0xff), static_cast<char>((v >> 8) & 0xff),
                       static_cast<char>((v >> 16) & 0xff), static_cast<char>((v >> 24) & 0xff)};
    out.write(b, 4);
}

inline void put_u64(std::ostream& out, std::uint64_t v) {
    put_u32(out, static_cast<std::uint32_t>(v & 0xffffffffULL));
    put_u32(out, static_cast<std::uint32_t>(v >> 32));
}

inline void put_f32(std::ostream& out, float v) {
    put_u32(out, std::bit_cast<std::uint32_t>(v));
}

inline bool get_bytes(std::istream& in, char* dst, std::size_t n) {
    in.read(dst, static_cast<std::streamsize>(n));
    return static_cast<std::size_t>(in.gcount()) == n;
}

inline std::uint32_t decode_u32(const char* b) {
    return static_cast<std::uint32_t>(static_cast<unsigned char>(b[0])) |
           static_cast<std::uint32_t>(static_cast<unsigned char>(b[1])) << 8 |
           static_cast<std::uint32_t>(static_cast<unsigned char>(b[2])) << 16 |
           static_cast<std::uint32_t>(static_cast<unsigned char>(b[3])) << 24;
}

inline std::uint64_t decode_u64(const char* b) {
    return static_cast<std::uint64_t>(decode_u32(b)) |
           static_cast<std::uint64_t>(decode_u32(b + 4)) << 32;
}

inline float decode_f32(const char* b) {
    return std::bit_cast<float>(decode_u32(b));
}

} // namespace detail

inline ClipMotionField parse_jsonl(std::istream& in) {
    using nlohmann::json;
    ClipMotionField field;
    std::string line;
    std::size_t line_no = 0;
    bool have_header = false;

    while (std::getline(in, line)) {
        ++line_no;
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;

        json obj = json::parse(line, nullptr, false);
        if (obj.is_discarded() || !obj.is_object()) {
            throw ParseError("line " + std::to_string(line_no) + ": malformed JSON object");
        }

        if (!have_header) {
            if (!obj.contains("width") || !obj.contains("height")) {
                throw FormatError("line " + std::to_string(line_no) +
                                  ": missing sidecar header (width/height)");
            }
            const auto w = obj["width"].get<std::int64_t>();
            const auto h = obj["height"].get<std::int64_t>();
            if (w < 1 || h < 1 || w > UINT32_MAX || h > UINT32_MAX) {
                throw ValidationError("line " + std::to_string(line_no) +
                                      ": frame dimensions out of range");
            }
            field.width = static_cast<std::uint32_t>(w);
            field.height = static_cast<std::uint32_t>(h);
            if (obj.contains("clip_id")) field.clip_id = obj["clip_id"].get<std::string>();
            have_header = true;
            continue;
        }

        for (const char* key : {"f", "x", "y", "dx", "dy"}) {
            if (!obj.contains(key) || !obj[key].is_number()) {
                throw ParseError("line " + std::to_string(line_no) + ": missing numeric field '" +
                                 key + "'");
            }
        }
        const auto f = obj["f"].get<std::int64_t>();
        if (f < 0 || f > UINT32_MAX) {
            throw ValidationError("line " + std::to_string(line_no) + ": frame index out of range");
        }
        MotionVector v;
        v.frame_index = static_cast<std::uint32_t>(f);
        v.x = obj["x"].get<float>();
        v.y = obj["y"].get<float>();
        v.dx = obj["dx"].get<float>();
        v.dy = obj["dy"].get<float>();
        validate_vector(v, field.width, field.height, "line " + std::to_string(line_no));
        field.vectors.push_back(v);
    }

    if (!have_header) throw FormatError("empty stream: missing sidecar header");
    return field;
}

inline void write_jsonl(const ClipMotionField& field, std::ostream& out) {
    using nlohmann::json;
    json header{{"clip_id", field.clip_id}, {"width", field.width}, {"height", field.height}};
    out << header.dump() << '\n';
    for (const MotionVector& v : field.vectors) {
        json rec{{"f", v.frame_index}, {"x", v.x}, {"y", v.y}, {"dx", v.dx}, {"dy", v.dy}};
        out << rec.dump() << '\n';
    }
}

inline ClipMotionField parse_binary(std::istream& in) {
    char header[24];
    if (!detail::get_bytes(in, header, sizeof header)) {
        throw ParseError("truncated sidecar header");
    }
    if (std::memcmp(header, SidecarHeader::kMagic.data(), 4) != 0) {
        throw FormatError("bad magic: not an MVS1 sidecar");
    }
    const std::uint32_t version = detail::decode_u32(header + 4);
    if (version != SidecarHeader::kVersion) {
        throw FormatError("unsupported sidecar version " + std::to_string(version));
    }

    ClipMotionField field;
    field.width = detail::decode_u32(header + 8);
    field.height = detail::decode_u32(header + 12);
    if (field.width == 0 || field.height == 0) {
        throw ValidationError("sidecar header: frame dimensions must be positive");
    }
    const std::uint64_t count = detail::decode_u64(header + 16);

    field.vectors.reserve(static_cast<std::size_t>(count));
    char rec[20];
    for (std::uint64_t k = 0; k < count; ++k) {
        if (!detail::get_bytes(in, rec, sizeof rec)) {
            throw ParseError("truncated stream at record " + std::to_string(k) + " of " +
                             std::to_string(count));
        }
        MotionVector v;
        v.frame_index = detail::decode_u32(rec);
        v.x = detail::decode_f32(rec + 4);
        v.y = detail::decode_f32(rec + 8);
        v.dx = detail::decode_f32(rec + 12);
        v.dy = detail::decode_f32(rec + 16);
        validate_vector(v, field.width, field.height, "record " + std::to_string(k));
        field.vectors.push_back(v);
    }
    if (in.peek() != std::char_traits<char>::eof()) {
        throw FormatError("trailing bytes after " + std::to_string(count) + " records");
    }
    return field;
}

inline void write_binary(const ClipMotionField& field, std::ostream& out) {
    out.write(SidecarHeader::kMagic.data(), 4);
    detail::put_u32(out, SidecarHeader::kVersion);
    detail::put_u32(out, field.width);
    detail::put_u32(out, field.height);
    detail::put_u64(out, field.vectors.size());
    for (const MotionVector& v : field.vectors) {
        detail::put_u32(out, v.frame_index);
        detail::put_f32(out, v.x);
        detail::put_f32(out, v.y);
        detail::put_f32(out, v.dx);
        detail::put_f32(out, v.dy);
    }
}

// Reads a sidecar file, sniffing the carrier from the first four bytes.
inline ClipMotionField load_sidecar(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open " + path.string());
    char magic[4] = {0, 0, 0, 0};
    in.read(magic, 4);
    in.clear();
    in.seekg(0);
    if (std::memcmp(magic, SidecarHeader::kMagic.data(), 4) == 0) {
        return parse_binary(in);
    }
    ClipMotionField field = parse_jsonl(in);
    if (field.clip_id.empty()) field.clip_id = path.stem().string();
    return field;
}

} // namespace mocrop
