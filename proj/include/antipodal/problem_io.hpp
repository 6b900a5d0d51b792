#pragma once

#include "antipodal/error.hpp"
#include "antipodal/gapmap.hpp"

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>

namespace antipodal {

/// Problem file rejected; `field()` is a JSON path such as "bodies[1].radius".
class ProblemError : public InvalidArgument {
public:
    ProblemError(std::string field, const std::string& message)
        : InvalidArgument(field.empty() ? message : field + ": " + message), field_(std::move(field))
    {
    }
    const std::string& field() const { return field_; }

private:
    std::string field_;
};

struct Problem {
    Instance instance;
    std::uint64_t seed = 0;
    /// FNV-1a 64 of the canonical JSON serialisation, 16 hex digits.
    std::string digest;
};

/// Parses a problem document:
///
///   {"dimension": n,
///    "bodies": [{"type": "polytope", "vertices": [[...], ...]}
///             | {"type": "ball", "center": [...], "radius": r}
///             | {"type": "points", "points": [[...], ...]}],
///    "objectives": [{"type": "inner"} | {"type": "bilinear", "Q": [[...], ...]}],
///    "epsilon": "auto" | number,          (optional, default "auto")
///    "seed": k}                           (optional, default 0)
///
/// A "points" body is the convex hull of the listed points, kept in vertex
/// form as given.
Problem parse_problem_text(std::string_view text);
Problem parse_problem(const std::filesystem::path& path);

} // namespace antipodal
