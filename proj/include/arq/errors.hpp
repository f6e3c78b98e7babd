#pragma once

#include <stdexcept>
#include <string>

namespace arq {

/// Domain error raised by library operations.
///
/// Every error carries a stable machine-readable name (e.g. "CoreCycle",
/// "NotFinitelyPresented") that the CLI prints, plus a human-readable detail.
class ArqError : public std::runtime_error {
public:
    ArqError(std::string name, std::string detail)
        : std::runtime_error(name + ": " + detail), name_(std::move(name)), detail_(std::move(detail)) {}

    /// @returns the stable error name.
    const std::string& name() const noexcept { return name_; }
    /// @returns the human-readable explanation.
    const std::string& detail() const noexcept { return detail_; }

private:
    std::string name_;
    std::string detail_;
};

}  // namespace arq
