#ifndef POLYMINK_ERRORS_HPP
#define POLYMINK_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace polymink {

struct DegenerateSpan : std::runtime_error {
    explicit DegenerateSpan(const std::string& what) : std::runtime_error(what) {}
};

struct ZeroVector : std::runtime_error {
    explicit ZeroVector(const std::string& what) : std::runtime_error(what) {}
};

struct EmptyPolytope : std::runtime_error {
    explicit EmptyPolytope(const std::string& what) : std::runtime_error(what) {}
};

struct UnboundedPolyhedron : std::runtime_error {
    explicit UnboundedPolyhedron(const std::string& what) : std::runtime_error(what) {}
};

struct EmptySection : std::runtime_error {
    explicit EmptySection(const std::string& what) : std::runtime_error(what) {}
};

struct EmptyErosion : std::runtime_error {
    explicit EmptyErosion(const std::string& what) : std::runtime_error(what) {}
};

struct NotFullDimensional : std::runtime_error {
    explicit NotFullDimensional(const std::string& what) : std::runtime_error(what) {}
};

struct DecompositionFailure : std::runtime_error {
    explicit DecompositionFailure(const std::string& what) : std::runtime_error(what) {}
};

struct CensusMismatch : std::runtime_error {
    explicit CensusMismatch(const std::string& what) : std::runtime_error(what) {}
};

struct ApexInAffineHull : std::runtime_error {
    explicit ApexInAffineHull(const std::string& what) : std::runtime_error(what) {}
};

struct NonConvexBulge : std::runtime_error {
    explicit NonConvexBulge(const std::string& what) : std::runtime_error(what) {}
};

struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace polymink

#endif
