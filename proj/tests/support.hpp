#pragma once

// Shared helpers for the unit, property and acceptance binaries.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "pomset/codes.hpp"
#include "pomset/error.hpp"
#include "pomset/problem.hpp"

#ifndef POMSET_FIXTURE_DIR
#error "POMSET_FIXTURE_DIR must point at the fixtures directory"
#endif

namespace pomset::testing {

inline std::string fixture_path(const std::string& name) { return std::string(POMSET_FIXTURE_DIR) + "/" + name + ".json"; }

inline ProblemFile fixture(const std::string& name) { return ProblemFile::load(fixture_path(name)); }

inline const std::vector<std::string>& fixture_names() {
    static const std::vector<std::string> names = {
        "vshape",          "z5_one_perfect",     "pr_antichain",    "pr_chain",       "mds_two_chains",
        "duality_equal_dims", "perfect_not_mds", "chain_z6",        "z9_not_mds",     "z9_mds",
        "chain_z5_t1",     "chain_z7_t1",        "chain_z5_t2",     "chain_z7_s3",    "chain_z5_reversed"};
    return names;
}

inline Ideal ideal_of(const Space& space, std::vector<int> counts) {
    return Ideal::of(space.pomset(), Mset(std::move(counts), space.height()));
}

inline bool equal_dims(const Space& space) {
    const auto& k = space.labeling();
    return std::all_of(k.begin(), k.end(), [&](int x) { return x == k.front(); });
}

/// k with K = m^k, if any.
inline std::optional<int> dimension(const Code& code) {
    const int k = ceil_log(code.size(), code.space().modulus());
    if (checked_pow(static_cast<std::uint64_t>(code.space().modulus()), k) != code.size()) return std::nullopt;
    return k;
}

inline std::vector<Ideal> full_count_ideals_of_size(const Pomset& pomset, int cardinality) {
    std::vector<Ideal> out;
    for (const Ideal& i : full_count_ideals(pomset))
        if (i.cardinality() == cardinality) out.push_back(i);
    return out;
}

inline std::uint64_t upow(std::uint64_t base, int e) { return e < 0 ? 0 : checked_pow(base, e); }

/// |B_I ∩ C| for an MDS linear chain code with equal block size t, by the
/// three-case closed form.
inline std::uint64_t chain_intersection_closed_form(int n, int k, int t, int m, int cardinality) {
    const int L = m / 2;
    const int threshold = (n - k) / t * L;
    if (cardinality <= threshold) return 1;
    const int l = cardinality / L, p = cardinality % L;
    const std::uint64_t base = upow(static_cast<std::uint64_t>(m), t * l - n + k);
    if (p == 0) return base;
    return upow(static_cast<std::uint64_t>(2 * p + 1), t) * base;
}

/// The five equivalent conditions for an equal-dimension linear code with K = m^k.
struct DualityConditions {
    bool mds = false;
    bool perfect_for_all = false;
    bool dual_perfect_for_all = false;
    bool dual_mds = false;
    bool intersections = false;
    std::string detail;

    bool all_equal() const {
        return mds == perfect_for_all && mds == dual_perfect_for_all && mds == dual_mds && mds == intersections;
    }
};

inline DualityConditions duality_conditions(const Code& code) {
    const Space& space = code.space();
    const int m = space.modulus(), L = space.height(), n = space.length(), t = space.labeling().front();
    const int k = *dimension(code);
    DualityConditions c;
    c.mds = is_mds(code);

    const bool divisible = (n - k) % t == 0 && k % t == 0;
    if (divisible) {
        c.perfect_for_all = true;
        for (const Ideal& i : full_count_ideals_of_size(space.pomset(), (n - k) / t * L))
            c.perfect_for_all = c.perfect_for_all && is_ideal_perfect(code, i, 200'000'000);
    }

    const Pomset reversed = dual_pomset(space.pomset());
    const Code dual = dual_code(code).in_space(space.with_pomset(reversed));
    if (divisible) {
        c.dual_perfect_for_all = true;
        for (const Ideal& i : full_count_ideals_of_size(reversed, k / t * L))
            c.dual_perfect_for_all = c.dual_perfect_for_all && is_ideal_perfect(dual, i, 200'000'000);
    }
    c.dual_mds = dual.size() >= 2 && is_mds(dual);

    // |B_I(x) ∩ C| over every full-count ideal and every x.
    c.intersections = divisible;
    if (divisible) {
        for (const Ideal& i : full_count_ideals(space.pomset())) {
            const int l = i.cardinality() / L;
            const bool large = i.cardinality() >= (n - k) / t * L;
            const std::uint64_t expected = large ? upow(static_cast<std::uint64_t>(m), t * l - n + k) : 1;
            for (std::uint64_t x = 0; x < space.size() && c.intersections; ++x) {
                const Vector v = space.at(x);
                const std::uint64_t got = ball_code_intersection(code, i.counts(), v);
                const bool ok = large ? got == expected : got <= 1;
                if (!ok) {
                    c.intersections = false;
                    c.detail = "I=" + i.notation() + " x=" + format_vector(v) + " got " + std::to_string(got);
                }
            }
        }
    }
    return c;
}

/// Every pomset on s labelled elements (s <= 4).
inline std::vector<Pomset> all_pomsets(int s, int height) {
    std::vector<std::pair<int, int>> pairs;
    for (int a = 0; a < s; ++a)
        for (int b = 0; b < s; ++b)
            if (a != b) pairs.emplace_back(a, b);
    std::vector<Pomset> out;
    for (std::uint32_t mask = 0; mask < (1u << pairs.size()); ++mask) {
        std::vector<std::pair<int, int>> rel;
        for (size_t i = 0; i < pairs.size(); ++i)
            if (mask >> i & 1u) rel.push_back(pairs[i]);
        try {
            Pomset p(s, height, rel);
            if (p.relations().size() == rel.size()) out.push_back(p);
        } catch (const InvalidInput&) {
        }
    }
    return out;
}

/// A random code: a random generator matrix or a random word list.
inline Code random_code(const Space& space, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> residue(0, space.modulus() - 1);
    std::uniform_int_distribution<int> coin(0, 1);
    auto word = [&] {
        Vector v(static_cast<size_t>(space.length()));
        for (int& x : v) x = residue(rng);
        return v;
    };
    if (coin(rng)) {
        std::uniform_int_distribution<int> rows(1, std::min(2, space.length()));
        Matrix g;
        for (int r = rows(rng); r > 0; --r) g.push_back(word());
        return Code::generated(space, g);
    }
    std::uniform_int_distribution<int> count(2, 8);
    std::vector<Vector> words;
    for (int c = count(rng); c > 0; --c) words.push_back(word());
    return Code::from_words(space, words);
}

}  // namespace pomset::testing
