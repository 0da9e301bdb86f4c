#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "pomset/mset.hpp"

namespace pomset {

/// A pomset on the regular mset {l/0, ..., l/(s-1)}, represented by the
/// strict partial order it induces on the ground set.
class Pomset {
  public:
    static constexpr int kMaxGroundSize = 24;

    /// `relations` are 0-based pairs (a, b) meaning a < b. Covering pairs are
    /// enough; the transitive closure is taken. Throws InvalidInput on cycles,
    /// self-relations or out-of-range elements.
    Pomset(int ground_size, int height, std::span<const std::pair<int, int>> relations = {});

    static Pomset antichain(int ground_size, int height);
    /// 0 < 1 < ... < s-1.
    static Pomset chain(int ground_size, int height);

    int ground_size() const { return size_; }
    int height() const { return height_; }

    bool less(int a, int b) const { return less_[index(a, b)] != 0; }
    bool comparable(int a, int b) const { return less(a, b) || less(b, a); }

    /// Every related pair, ordered lexicographically.
    std::vector<std::pair<int, int>> relations() const;
    /// Hasse diagram of the order.
    std::vector<std::pair<int, int>> covering_relations() const;

    bool is_chain() const;
    bool is_antichain() const;

    /// Bitmask of elements strictly below `element`.
    std::uint32_t below_mask(int element) const { return below_[static_cast<size_t>(element)]; }
    bool is_downset(std::uint32_t mask) const;

    bool operator==(const Pomset&) const = default;

  private:
    size_t index(int a, int b) const { return static_cast<size_t>(a) * static_cast<size_t>(size_) + static_cast<size_t>(b); }

    int size_;
    int height_;
    std::vector<std::uint8_t> less_;
    std::vector<std::uint32_t> below_;
};

/// An order ideal of a Pomset: for every element present, everything strictly
/// below it carries full count.
class Ideal {
  public:
    /// Throws InvalidInput when `counts` is not an ideal of `pomset`.
    static Ideal of(const Pomset& pomset, Mset counts);

    const Mset& counts() const { return counts_; }
    int count(int element) const { return counts_.count(element); }
    int cardinality() const { return counts_.cardinality(); }
    int ground_size() const { return counts_.ground_size(); }
    int height() const { return counts_.height(); }

    /// I*
    std::vector<int> root_set() const { return counts_.root_set(); }
    /// I_f: root elements at full count.
    std::vector<int> full_elements() const;
    /// I_p: root elements at partial count.
    std::vector<int> partial_elements() const;
    /// M(I)*: root elements with no other root element above them.
    const std::vector<int>& maximal_elements() const { return maximal_; }

    bool has_full_count() const { return partial_elements().empty(); }
    bool is_maximal(int element) const;

    std::string notation() const { return counts_.notation(); }

    bool operator==(const Ideal& other) const { return counts_ == other.counts_; }
    auto operator<=>(const Ideal& other) const { return counts_ <=> other.counts_; }

  private:
    Ideal(Mset counts, std::vector<int> maximal) : counts_(std::move(counts)), maximal_(std::move(maximal)) {}

    Mset counts_;
    std::vector<int> maximal_;
};

bool is_ideal(const Pomset& pomset, const Mset& counts);

/// Smallest ideal containing `generators`.
Ideal ideal_generated(const Pomset& pomset, const Mset& generators);

/// All ideals of the given cardinality, in lexicographic order of count vectors.
std::vector<Ideal> enumerate_ideals(const Pomset& pomset, int cardinality);
/// Every ideal of every cardinality, lexicographic.
std::vector<Ideal> all_ideals(const Pomset& pomset);
/// Ideals whose counts are all full, i.e. one per down-set.
std::vector<Ideal> full_count_ideals(const Pomset& pomset);

/// Down-sets of the underlying poset with exactly `size` elements, each sorted
/// ascending; the list is ordered lexicographically.
std::vector<std::vector<int>> enumerate_root_downsets(const Pomset& pomset, int size);

/// The full-count ideal on a down-set.
Ideal full_ideal_on(const Pomset& pomset, std::span<const int> downset);

Pomset dual_pomset(const Pomset& pomset);

/// Complement of an ideal of `pomset`, returned as an ideal of the dual.
Ideal ideal_complement(const Pomset& pomset, const Ideal& ideal);

/// True iff every related pair of `coarse` is related in `fine`.
bool is_finer(const Pomset& coarse, const Pomset& fine);

}  // namespace pomset
