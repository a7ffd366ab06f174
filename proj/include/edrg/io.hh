#pragma once

#include <edrg/graph.hh>

#include <stdexcept>
#include <string>
#include <string_view>

namespace edrg {

enum class ParseErrorKind {
    // graph6
    bad_char,
    truncated,
    trailing_garbage,
    nonzero_padding,
    // edge lists
    self_loop,
    duplicate_edge,
    non_integer,
    bad_arity,
    out_of_range,
    // either
    empty_input,
};

const char * parse_error_kind_name(ParseErrorKind kind) noexcept;

/// Malformed textual input. `line` is 1-based for edge lists and 0 when not applicable;
/// `offset` is the byte position for graph6.
class ParseError : public std::runtime_error {
public:
    ParseError(ParseErrorKind kind, std::string what, int line = 0, std::size_t offset = 0);

    ParseErrorKind kind() const noexcept { return kind_; }
    int line() const noexcept { return line_; }
    std::size_t offset() const noexcept { return offset_; }

private:
    ParseErrorKind kind_;
    int line_;
    std::size_t offset_;
};

/// Standard graph6. An optional ">>graph6<<" header and trailing line terminators are
/// ignored; anything else past the encoded bits is trailing garbage.
Graph parse_graph6(std::string_view text);

/// Shortest encoding (short form for n <= 62).
std::string encode_graph6(const Graph & g);

/// One edge "u v" per line; an optional first line "n <count>" fixes the order, otherwise
/// n = largest vertex + 1. Blank lines and lines starting with '#' are skipped.
Graph parse_edge_list(std::string_view text);

/// Whole file as a string; throws std::runtime_error when it cannot be read.
std::string read_file(const std::string & path);

} // namespace edrg
