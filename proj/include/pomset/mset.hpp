#pragma once

#include <compare>
#include <string>
#include <vector>

namespace pomset {

/// A multiset over the ground set {0, ..., s-1} in which no element occurs
/// more than `height` times.
///
/// Elements are 0-based in the API; `notation()` prints them 1-based as
/// "{c/i, ...}" so reports can be compared by eye with hand calculations.
class Mset {
  public:
    /// The empty mset over `ground_size` elements.
    Mset(int ground_size, int height);
    /// Throws InvalidInput when a count is negative or above `height`.
    Mset(std::vector<int> counts, int height);

    /// Every element at full multiplicity.
    static Mset full(int ground_size, int height);

    int ground_size() const { return static_cast<int>(counts_.size()); }
    int height() const { return height_; }
    int count(int element) const { return counts_.at(static_cast<size_t>(element)); }
    const std::vector<int>& counts() const { return counts_; }

    int cardinality() const;
    bool empty() const;
    std::vector<int> root_set() const;

    std::string notation() const;

    bool operator==(const Mset&) const = default;
    // Lexicographic on count vectors, then height.
    auto operator<=>(const Mset& other) const {
        if (auto c = counts_ <=> other.counts_; c != 0) return c;
        return height_ <=> other.height_;
    }

  private:
    std::vector<int> counts_;
    int height_;
};

/// Capped sum: min(height, a_i + b_i).
Mset msum(const Mset& a, const Mset& b);
/// max(a_i - b_i, 0).
Mset mdiff(const Mset& a, const Mset& b);
/// max(a_i, b_i).
Mset munion(const Mset& a, const Mset& b);
Mset complement(const Mset& a);
bool is_submset(const Mset& a, const Mset& b);

}  // namespace pomset
