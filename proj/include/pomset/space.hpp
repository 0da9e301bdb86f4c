#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "pomset/mset.hpp"
#include "pomset/pomset.hpp"

namespace pomset {

/// Coordinates of a vector of Z_m^n, each reduced into 0..m-1.
using Vector = std::vector<int>;

/// min(x, m - x) for a residue 0 <= x < m.
int lee_weight(int residue, int modulus);

/// Maximum Lee weight over a block of residues. Throws ShapeError on an empty block.
int block_weight(std::span<const int> block, int modulus);

/// Number of residues of Z_m whose Lee weight is at most `bound`.
std::uint64_t residues_within(int bound, int modulus);

/// Overflow-checked integer power; throws BudgetExceeded when the result
/// does not fit in 64 bits.
std::uint64_t checked_pow(std::uint64_t base, int exponent);

/// The pomset block space (Z_m^n, d_(P,pi)).
///
/// Block i (0-based) covers coordinates [offset(i), offset(i) + k_i). The
/// pomset height is always floor(m/2).
class Space {
  public:
    Space(int modulus, Pomset pomset, std::vector<int> labeling);

    int modulus() const { return modulus_; }
    int height() const { return pomset_.height(); }
    int block_count() const { return pomset_.ground_size(); }
    int length() const { return length_; }
    const Pomset& pomset() const { return pomset_; }
    const std::vector<int>& labeling() const { return labeling_; }
    int block_size(int block) const { return labeling_.at(static_cast<size_t>(block)); }
    int block_offset(int block) const { return offsets_.at(static_cast<size_t>(block)); }
    /// s * floor(m/2), the largest possible weight.
    int max_weight() const { return block_count() * height(); }

    /// Same modulus and labeling under another pomset.
    Space with_pomset(Pomset pomset) const { return Space(modulus_, std::move(pomset), labeling_); }

    /// Reduces arbitrary (possibly negative) integers mod m. Throws ShapeError
    /// on a length mismatch.
    Vector make_vector(std::span<const long long> coordinates) const;
    Vector make_vector(std::initializer_list<long long> coordinates) const;
    Vector zero() const { return Vector(static_cast<size_t>(length_), 0); }

    /// Throws ShapeError unless `v` has length n with every residue reduced.
    void check(const Vector& v) const;

    std::span<const int> block(const Vector& v, int block) const;

    Mset support(const Vector& v) const;
    int weight(const Vector& v) const;
    int distance(const Vector& u, const Vector& v) const;

    Vector add(const Vector& u, const Vector& v) const;
    Vector subtract(const Vector& u, const Vector& v) const;
    Vector negate(const Vector& u) const;
    Vector scale(const Vector& u, int factor) const;
    int dot(const Vector& u, const Vector& v) const;

    /// m^n; throws BudgetExceeded if it overflows 64 bits.
    std::uint64_t size() const;
    /// Mixed-radix rank with the first coordinate most significant, so index
    /// order equals lexicographic order.
    std::uint64_t index_of(const Vector& v) const;
    Vector at(std::uint64_t index) const;

    std::string describe() const;

    bool operator==(const Space&) const = default;

  private:
    int modulus_;
    Pomset pomset_;
    std::vector<int> labeling_;
    std::vector<int> offsets_;
    int length_ = 0;
};

std::string format_vector(const Vector& v);

}  // namespace pomset
