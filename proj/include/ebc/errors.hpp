#pragma once

#include <stdexcept>
#include <string>

namespace ebc {

struct SingularMatrix : std::runtime_error {
    explicit SingularMatrix(const std::string& what) : std::runtime_error(what) {}
};

struct RankDeficient : std::runtime_error {
    explicit RankDeficient(const std::string& what) : std::runtime_error(what) {}
};

struct DegenerateCircle : std::runtime_error {
    explicit DegenerateCircle(const std::string& what) : std::runtime_error(what) {}
};

struct NoRightOrbit : std::runtime_error {
    explicit NoRightOrbit(const std::string& what) : std::runtime_error(what) {}
};

struct NumericalFailure : std::runtime_error {
    explicit NumericalFailure(const std::string& what) : std::runtime_error(what) {}
};

struct DegenerateTriangle : std::runtime_error {
    explicit DegenerateTriangle(const std::string& what) : std::runtime_error(what) {}
};

struct PointAtInfinity : std::runtime_error {
    explicit PointAtInfinity(const std::string& what) : std::runtime_error(what) {}
};

struct UnknownCenter : std::runtime_error {
    explicit UnknownCenter(const std::string& what) : std::runtime_error(what) {}
};

struct DegenerateConic : std::runtime_error {
    explicit DegenerateConic(const std::string& what) : std::runtime_error(what) {}
};

struct ImaginaryAxis : std::runtime_error {
    explicit ImaginaryAxis(const std::string& what) : std::runtime_error(what) {}
};

struct DegenerateCevian : std::runtime_error {
    explicit DegenerateCevian(const std::string& what) : std::runtime_error(what) {}
};

struct NullSpaceDimension : std::runtime_error {
    explicit NullSpaceDimension(const std::string& what) : std::runtime_error(what) {}
};

struct DegenerateToLines : std::runtime_error {
    explicit DegenerateToLines(const std::string& what) : std::runtime_error(what) {}
};

struct NotRight : std::runtime_error {
    explicit NotRight(const std::string& what) : std::runtime_error(what) {}
};

struct ClosureFailure : std::runtime_error {
    explicit ClosureFailure(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace ebc
