#pragma once

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <istream>
#include <ostream>
#include <string>
#include <vector>

#include "mocrop/errors.hpp"

// Netpbm carriers for frames and map exports: binary PPM (P6) for RGB
// I-frames, binary PGM (P5) for single-channel density maps. Maxval is
// always 255 and the writers emit the canonical single-whitespace form, so
// write/read round-trips are byte-exact.

namespace mocrop {

struct Frame {
    int width = 0;
    int height = 0;
    std::vector<std::uint8_t> rgb;  // row-major, 3 bytes per pixel

    const std::uint8_t* pixel(int x, int y) const {
        return rgb.data() + (static_cast<std::size_t>(y) * width + x) * 3;
    }
    std::uint8_t* pixel(int x, int y) {
        return rgb.data() + (static_cast<std::size_t>(y) * width + x) * 3;
    }

    friend bool operator==(const Frame&, const Frame&) = default;
};

namespace detail {

// Reads the next whitespace-delimited token, skipping '#' comments.
inline std::string next_pnm_token(std::istream& in) {
    std::string tok;
    int c;
    while ((c = in.get()) != std::char_traits<char>::eof()) {
        if (c == '#') {
            while ((c = in.get()) != std::char_traits<char>::eof() && c != '\n') {}
            continue;
        }
        if (std::isspace(c)) {
            if (!tok.empty()) return tok;
            continue;
        }
        tok.push_back(static_cast<char>(c));
    }
    return tok;
}

inline int parse_pnm_int(std::istream& in, const char* what) {
    const std::string tok = next_pnm_token(in);
    if (tok.empty()) throw ParseError(std::string("unexpected end of header reading ") + what);
    int value = 0;
    for (char ch : tok) {
        if (ch < '0' || ch > '9') throw ParseError(std::string("bad ") + what + " '" + tok + "'");
        value = value * 10 + (ch - '0');
        if (value > 1 << 30) throw ParseError(std::string(what) + " out of range");
    }
    return value;
}

} // namespace detail

inline Frame read_ppm(std::istream& in) {
    const std::string magic = detail::next_pnm_token(in);
    if (magic != "P6") throw FormatError("unsupported format '" + magic + "', expected P6");
    Frame f;
    f.width = detail::parse_pnm_int(in, "width");
    f.height = detail::parse_pnm_int(in, "height");
    const int maxval = detail::parse_pnm_int(in, "maxval");
    if (f.width < 1 || f.height < 1) throw ValidationError("frame dimensions must be positive");
    if (maxval != 255) throw FormatError("maxval " + std::to_string(maxval) + " unsupported, expected 255");
    // Header ends with exactly one whitespace byte, already consumed by the
    // token reader.
    f.rgb.resize(static_cast<std::size_t>(f.width) * f.height * 3);
    in.read(reinterpret_cast<char*>(f.rgb.data()), static_cast<std::streamsize>(f.rgb.size()));
    if (static_cast<std::size_t>(in.gcount()) != f.rgb.size()) {
        throw ParseError("truncated pixel data");
    }
    return f;
}

inline void write_ppm(const Frame& f, std::ostream& out) {
    out << "P6\n" << f.width << ' ' << f.height << "\n255\n";
    out.write(reinterpret_cast<const char*>(f.rgb.data()), static_cast<std::streamsize>(f.rgb.size()));
}

inline void write_pgm(int width, int height, const std::vector<std::uint8_t>& gray,
                      std::ostream& out) {
    out << "P5\n" << width << ' ' << height << "\n255\n";
    out.write(reinterpret_cast<const char*>(gray.data()), static_cast<std::streamsize>(gray.size()));
}

inline Frame load_ppm(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open " + path.string());
    return read_ppm(in);
}

inline void save_ppm(const Frame& f, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open " + path.string() + " for writing");
    write_ppm(f, out);
}

} // namespace mocrop
