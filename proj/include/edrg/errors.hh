#pragma once

#include <stdexcept>
#include <string>

namespace edrg {

/// Shape mismatch between matrix operands (or a non-square matrix where one is required).
class DimensionMismatch : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Malformed graph data: loops, repeated edges, out-of-range vertex ids.
class GraphError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Raised at analysis entry when some vertex cannot be reached.
class DisconnectedGraph : public std::runtime_error {
public:
    explicit DisconnectedGraph(int stranded)
        : std::runtime_error("graph is disconnected: vertex " + std::to_string(stranded) + " is unreachable"),
          stranded_(stranded) {}

    int stranded_vertex() const noexcept { return stranded_; }

private:
    int stranded_;
};

/// Two computations that must agree did not. Indicates a bug, never bad input.
class InternalInconsistency : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

} // namespace edrg
