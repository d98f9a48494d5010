#pragma once

// Line-oriented set files: one vertex per line as a string over {+,-},
// coordinate 0 first. Blank lines and lines starting with '#' are skipped.

#include "omega/errors.hpp"
#include "omega/hypercube.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace omega {

inline std::string format_vertex(std::uint64_t mask, unsigned dim) {
    std::string line(dim, '+');
    for (unsigned b = 0; b < dim; ++b)
        if (mask >> b & 1)
            line[b] = '-';
    return line;
}

inline std::string format_vertex(const Vertex& v) { return format_vertex(v.mask(), v.dim()); }

inline Vertex parse_vertex(std::string_view text) {
    if (text.empty() || text.size() > max_dimension)
        fail(error_kind::io, "set file: vertex length must be between 1 and 64, got " +
                                 std::to_string(text.size()));
    std::uint64_t mask = 0;
    for (std::size_t b = 0; b < text.size(); ++b) {
        if (text[b] == '-')
            mask |= std::uint64_t{1} << b;
        else if (text[b] != '+')
            fail(error_kind::io, std::string("set file: unexpected character '") + text[b] + "'");
    }
    return Vertex(mask, static_cast<unsigned>(text.size()));
}

inline VertexSet read_set(std::istream& in) {
    std::vector<std::uint64_t> masks;
    unsigned dim = 0;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const auto begin = line.find_first_not_of(" \t\r");
        if (begin == std::string::npos || line[begin] == '#')
            continue;
        const auto end = line.find_last_not_of(" \t\r");
        const auto v = parse_vertex(std::string_view(line).substr(begin, end - begin + 1));
        if (dim == 0)
            dim = v.dim();
        else if (v.dim() != dim)
            fail(error_kind::io, "set file: line " + std::to_string(line_no) + " has length " +
                                     std::to_string(v.dim()) + ", expected " + std::to_string(dim));
        masks.push_back(v.mask());
    }
    if (dim == 0)
        fail(error_kind::io, "set file: no vertices");
    std::sort(masks.begin(), masks.end());
    if (std::adjacent_find(masks.begin(), masks.end()) != masks.end())
        fail(error_kind::io, "set file: duplicate vertex");
    return VertexSet(dim, std::move(masks));
}

inline VertexSet read_set_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        fail(error_kind::io, "cannot open set file '" + path + "'");
    return read_set(in);
}

inline void write_set(std::ostream& out, const VertexSet& set) {
    std::string buffer;
    buffer.reserve(1 << 16);
    for (auto mask : set.masks()) {
        buffer += format_vertex(mask, set.dim());
        buffer += '\n';
        if (buffer.size() >= (1 << 16) - 80) {
            out.write(buffer.data(), static_cast<std::streamsize>(buffer.size()));
            buffer.clear();
        }
    }
    out.write(buffer.data(), static_cast<std::streamsize>(buffer.size()));
}

inline void write_set_file(const std::string& path, const VertexSet& set) {
    std::ofstream out(path, std::ios::binary);
    if (!out)
        fail(error_kind::io, "cannot open '" + path + "' for writing");
    write_set(out, set);
    if (!out)
        fail(error_kind::io, "write to '" + path + "' failed");
}

} // namespace omega
