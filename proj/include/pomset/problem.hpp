#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pomset/codes.hpp"
#include "pomset/space.hpp"

namespace pomset {

/// A problem description read from JSON:
///
///   {"m": 6, "pomset": {"s": 2, "relations": [[1, 2]]}, "labeling": [1, 1],
///    "code": {"codewords": [[0, 0], [1, 3]]}, "ideal": {"counts": [3, 1]},
///    "radius": 2}
///
/// Relations are 1-based pairs [a, b] meaning a < b and may list the full
/// order or only covers. "code", "ideal", "radius" and "description" are
/// optional. Every cross-shape constraint is checked at load; the height is
/// always floor(m/2).
struct ProblemFile {
    int modulus = 0;
    int ground_size = 0;
    /// 0-based (a, b) with a < b.
    std::vector<std::pair<int, int>> relations;
    std::vector<int> labeling;
    std::optional<std::vector<Vector>> codewords;
    std::optional<Matrix> generator;
    std::optional<std::vector<int>> ideal;
    std::optional<int> radius;
    std::optional<std::string> description;

    /// Throws InvalidInput (bad JSON or schema) or ShapeError.
    static ProblemFile parse(const std::string& text);
    static ProblemFile load(const std::string& path);

    Pomset pomset() const;
    Space space() const;
    bool has_code() const { return codewords.has_value() || generator.has_value(); }
    /// Throws InvalidInput if the file has no code.
    Code code(std::uint64_t budget = kDefaultScanBudget) const;
    /// Throws InvalidInput if the file has no ideal.
    Ideal file_ideal() const;

    /// Canonical JSON: covering relations only, residues reduced, codewords
    /// deduplicated and sorted, fixed key order, two-space indent.
    std::string canonical() const;
};

/// "1,2,0" or "(1,2,0)" -> {1,2,0}. Throws InvalidInput.
std::vector<long long> parse_int_list(const std::string& text);

}  // namespace pomset
