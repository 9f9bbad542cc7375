#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace flowpoly {

/// Base of all domain errors. `kind()` is a stable machine-readable name,
/// surfaced verbatim in the CLI's error objects.
class Error : public std::runtime_error {
  public:
    Error(std::string kind, const std::string& message)
        : std::runtime_error(message), kind_(std::move(kind)) {}
    const std::string& kind() const { return kind_; }

  private:
    std::string kind_;
};

/// The digraph is not acyclic; carries one explicit cycle as an arc-id sequence.
class CycleError : public Error {
  public:
    explicit CycleError(std::vector<int> cycle)
        : Error("cycle", "graph contains a cycle"), cycle_(std::move(cycle)) {}
    const std::vector<int>& cycle() const { return cycle_; }

  private:
    std::vector<int> cycle_;
};

struct InvalidGraph : Error {
    explicit InvalidGraph(const std::string& m) : Error("invalid_graph", m) {}
};
struct NotAFlow : Error {
    explicit NotAFlow(const std::string& m) : Error("not_a_flow", m) {}
};
struct NotAPath : Error {
    explicit NotAPath(const std::string& m) : Error("not_a_path", m) {}
};
struct SamePath : Error {
    explicit SamePath(const std::string& m) : Error("same_path", m) {}
};
struct VerticesAreAdjacent : Error {
    explicit VerticesAreAdjacent(const std::string& m) : Error("vertices_are_adjacent", m) {}
};
struct NotFacetDefining : Error {
    explicit NotFacetDefining(const std::string& m) : Error("not_facet_defining", m) {}
};
struct SameFacet : Error {
    explicit SameFacet(const std::string& m) : Error("same_facet", m) {}
};
struct DimensionTooSmall : Error {
    explicit DimensionTooSmall(const std::string& m) : Error("dimension_too_small", m) {}
};
struct SameOrder : Error {
    explicit SameOrder(const std::string& m) : Error("same_order", m) {}
};
struct IndexError : Error {
    explicit IndexError(const std::string& m) : Error("index_error", m) {}
};
struct SizeGuard : Error {
    explicit SizeGuard(const std::string& m) : Error("size_guard", m) {}
};
struct EmptyInput : Error {
    explicit EmptyInput(const std::string& m) : Error("empty_input", m) {}
};
struct DimensionMismatch : Error {
    explicit DimensionMismatch(const std::string& m) : Error("dimension_mismatch", m) {}
};
struct ParseError : Error {
    explicit ParseError(const std::string& m) : Error("parse_error", m) {}
};

}  // namespace flowpoly
