// errors.hpp — exception types shared across the library

#pragma once

#include <stdexcept>
#include <string>

namespace rgqme {

// Base error carrying a stable machine-parsable tag. The CLI prints the tag
// on stderr and maps it to an exit code, so tags form a fixed enumeration.
class Error : public std::runtime_error {
public:
    Error(std::string tag, const std::string& what)
        : std::runtime_error(what), tag_(std::move(tag)) {}

    const std::string& tag() const noexcept { return tag_; }

private:
    std::string tag_;
};

struct NonHermitianInput : Error {
    explicit NonHermitianInput(const std::string& what) : Error("NonHermitianInput", what) {}
};
struct NoConvergence : Error {
    explicit NoConvergence(const std::string& what) : Error("NoConvergence", what) {}
};
struct NonSquare : Error {
    explicit NonSquare(const std::string& what) : Error("NonSquare", what) {}
};
struct NotPSD : Error {
    explicit NotPSD(const std::string& what) : Error("NotPSD", what) {}
};
struct DimMismatch : Error {
    explicit DimMismatch(const std::string& what) : Error("DimMismatch", what) {}
};
struct NonFiniteState : Error {
    explicit NonFiniteState(const std::string& what) : Error("NonFiniteState", what) {}
};
struct NonUniformGrid : Error {
    explicit NonUniformGrid(const std::string& what) : Error("NonUniformGrid", what) {}
};
struct NotDiagonalizable : Error {
    explicit NotDiagonalizable(const std::string& what) : Error("NotDiagonalizable", what) {}
};
struct NotIntegrable : Error {
    explicit NotIntegrable(const std::string& what) : Error("NotIntegrable", what) {}
};
struct WindowTooNarrow : Error {
    explicit WindowTooNarrow(const std::string& what) : Error("WindowTooNarrow", what) {}
};
struct InvalidState : Error {
    explicit InvalidState(const std::string& what) : Error("InvalidState", what) {}
};
struct ParseError : Error {
    explicit ParseError(const std::string& what) : Error("ParseError", what) {}
};
struct SchemaError : Error {
    explicit SchemaError(const std::string& what) : Error("SchemaError", what) {}
};

} // namespace rgqme
