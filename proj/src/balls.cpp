#include "pomset/balls.hpp"

#include <algorithm>

#include "pomset/error.hpp"

namespace pomset {

namespace {

void require_ideal_of(const Space& space, const Ideal& ideal) {
    if (!is_ideal(space.pomset(), ideal.counts()))
        throw InvalidInput(ideal.notation() + " is not an ideal of the space's pomset");
}

std::uint64_t mul(std::uint64_t a, std::uint64_t b) {
    if (a != 0 && b > UINT64_MAX / a) throw BudgetExceeded("count overflows 64 bits");
    return a * b;
}

// Every product of per-coordinate choices, added to `base`, in lexicographic
// order of the choice indices.
std::vector<Vector> product(const Space& space, const Vector& base, const std::vector<std::vector<int>>& choices,
                            std::uint64_t budget) {
    std::uint64_t total = 1;
    for (const auto& c : choices) {
        total = mul(total, c.size());
        if (total > budget)
            throw BudgetExceeded("enumeration of " + std::to_string(total) + "+ vectors exceeds budget " +
                                 std::to_string(budget));
    }
    std::vector<Vector> out;
    out.reserve(static_cast<size_t>(total));
    std::vector<size_t> pos(choices.size(), 0);
    const int m = space.modulus();
    while (true) {
        Vector v(choices.size());
        for (size_t i = 0; i < choices.size(); ++i) v[i] = (base[i] + choices[i][pos[i]]) % m;
        out.push_back(std::move(v));
        size_t i = choices.size();
        while (i > 0) {
            --i;
            if (++pos[i] < choices[i].size()) break;
            pos[i] = 0;
            if (i == 0) {
                std::sort(out.begin(), out.end());
                return out;
            }
        }
    }
}

std::vector<int> residues_up_to(int bound, int m) {
    std::vector<int> out;
    for (int x = 0; x < m; ++x)
        if (lee_weight(x, m) <= bound) out.push_back(x);
    return out;
}

}  // namespace

bool in_ideal_ball(const Space& space, const Vector& v, const Vector& center, const Mset& ideal) {
    if (ideal.ground_size() != space.block_count() || ideal.height() != space.height())
        throw ShapeError("ideal shape does not match the space");
    const Vector diff = space.subtract(center, v);
    for (int t = 0; t < space.block_count(); ++t)
        if (block_weight(space.block(diff, t), space.modulus()) > ideal.count(t)) return false;
    return true;
}

std::uint64_t ideal_ball_size(const Space& space, const Ideal& ideal) {
    require_ideal_of(space, ideal);
    std::uint64_t size = 1;
    for (int t : ideal.root_set())
        size = mul(size, checked_pow(residues_within(ideal.count(t), space.modulus()), space.block_size(t)));
    return size;
}

std::uint64_t ideal_sphere_size(const Space& space, const Ideal& ideal) {
    require_ideal_of(space, ideal);
    const auto m = static_cast<std::uint64_t>(space.modulus());
    std::uint64_t size = 1;
    for (int t : ideal.root_set()) {
        const int k = space.block_size(t);
        if (ideal.is_maximal(t)) {
            // Blocks whose largest Lee weight is exactly C_I(t).
            const int c = ideal.count(t);
            size = mul(size, checked_pow(residues_within(c, space.modulus()), k) -
                                 checked_pow(residues_within(c - 1, space.modulus()), k));
        } else {
            size = mul(size, checked_pow(m, k));
        }
    }
    return size;
}

std::uint64_t radius_ball_size(const Space& space, int radius) {
    if (radius < 0 || radius > space.max_weight())
        throw InvalidInput("radius " + std::to_string(radius) + " outside 0.." + std::to_string(space.max_weight()));
    std::uint64_t size = 1;
    for (int i = 1; i <= radius; ++i)
        for (const Ideal& ideal : enumerate_ideals(space.pomset(), i)) size += ideal_sphere_size(space, ideal);
    return size;
}

std::vector<Vector> enumerate_ideal_ball(const Space& space, const Vector& center, const Ideal& ideal,
                                         std::uint64_t budget) {
    require_ideal_of(space, ideal);
    space.check(center);
    std::vector<std::vector<int>> choices(static_cast<size_t>(space.length()));
    for (int t = 0; t < space.block_count(); ++t) {
        const auto allowed = residues_up_to(ideal.count(t), space.modulus());
        for (int j = 0; j < space.block_size(t); ++j) choices[static_cast<size_t>(space.block_offset(t) + j)] = allowed;
    }
    return product(space, center, choices, budget);
}

std::vector<Vector> partition_centers(const Space& space, const Ideal& ideal, std::uint64_t budget) {
    require_ideal_of(space, ideal);
    const int m = space.modulus();
    std::vector<std::vector<int>> choices(static_cast<size_t>(space.length()));
    for (int t = 0; t < space.block_count(); ++t) {
        const int c = ideal.count(t);
        std::vector<int> allowed;
        if (c == 0) {
            for (int x = 0; x < m; ++x) allowed.push_back(x);
        } else if (c == space.height()) {
            allowed.push_back(0);
        } else {
            const int step = 2 * c + 1;
            if (m % step != 0)
                throw PartitionImpossible("2*" + std::to_string(c) + "+1 = " + std::to_string(step) +
                                          " does not divide m = " + std::to_string(m) + " (block " +
                                          std::to_string(t + 1) + "); no family of " + ideal.notation() +
                                          "-balls partitions the space");
            for (int x = 0; x < m; x += step) allowed.push_back(x);
        }
        for (int j = 0; j < space.block_size(t); ++j) choices[static_cast<size_t>(space.block_offset(t) + j)] = allowed;
    }
    return product(space, space.zero(), choices, budget);
}

std::uint64_t partition_center_count(const Space& space, const Ideal& ideal) {
    require_ideal_of(space, ideal);
    const int m = space.modulus();
    std::uint64_t count = 1;
    for (int t = 0; t < space.block_count(); ++t) {
        const int c = ideal.count(t);
        const int k = space.block_size(t);
        if (c == 0) {
            count = mul(count, checked_pow(static_cast<std::uint64_t>(m), k));
        } else if (c < space.height()) {
            const int step = 2 * c + 1;
            if (m % step != 0) throw PartitionImpossible("2*C+1 does not divide m");
            count = mul(count, checked_pow(static_cast<std::uint64_t>(m / step), k));
        }
    }
    return count;
}

bool BallSpec::contains(const Space& space, const Vector& v) const {
    if (const int* radius = std::get_if<int>(&shape)) return space.distance(center, v) <= *radius;
    return in_ideal_ball(space, v, center, std::get<Ideal>(shape).counts());
}

std::uint64_t BallSpec::size(const Space& space) const {
    if (const int* radius = std::get_if<int>(&shape)) return radius_ball_size(space, *radius);
    return ideal_ball_size(space, std::get<Ideal>(shape));
}

}  // namespace pomset
