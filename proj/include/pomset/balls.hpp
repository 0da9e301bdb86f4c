#pragma once

#include <cstdint>
#include <variant>
#include <vector>

#include "pomset/mset.hpp"
#include "pomset/pomset.hpp"
#include "pomset/space.hpp"

namespace pomset {

inline constexpr std::uint64_t kDefaultScanBudget = 10'000'000;
inline constexpr std::uint64_t kDefaultAnnihilatorBudget = 1'000'000;

/// v lies in B_I(center): every block of center - v has weight at most C_I.
/// `ideal` may be any submset of the regular mset.
bool in_ideal_ball(const Space& space, const Vector& v, const Vector& center, const Mset& ideal);

/// |B_I| = prod_{t in I_p} (2 C_I(t) + 1)^{k_t} * m^{sum_{t in I_f} k_t}.
std::uint64_t ideal_ball_size(const Space& space, const Ideal& ideal);

/// Number of vectors whose generated ideal is exactly `ideal`. The empty
/// ideal's sphere is {0}, of size 1.
std::uint64_t ideal_sphere_size(const Space& space, const Ideal& ideal);

/// |B_r(u)| = 1 + sum over nonempty ideals I with |I| <= r of |S_I|.
std::uint64_t radius_ball_size(const Space& space, int radius);

/// Members of B_I(center) in lexicographic order. Throws BudgetExceeded when
/// |B_I| exceeds `budget`.
std::vector<Vector> enumerate_ideal_ball(const Space& space, const Vector& center, const Ideal& ideal,
                                         std::uint64_t budget = kDefaultScanBudget);

/// Centers whose I-balls tile Z_m^n: zero on I_f, multiples of 2 C_I(t) + 1 on
/// I_p, free outside I*. Throws PartitionImpossible when some 2 C_I(t) + 1 does
/// not divide m.
std::vector<Vector> partition_centers(const Space& space, const Ideal& ideal,
                                      std::uint64_t budget = kDefaultScanBudget);

/// Closed-form count of partition_centers().
std::uint64_t partition_center_count(const Space& space, const Ideal& ideal);

/// A ball given by its center and either a radius or an ideal.
struct BallSpec {
    Vector center;
    std::variant<int, Ideal> shape;

    bool contains(const Space& space, const Vector& v) const;
    std::uint64_t size(const Space& space) const;
};

}  // namespace pomset
