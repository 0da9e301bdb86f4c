#include "pomset/pomset.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <string>

#include "pomset/error.hpp"

namespace pomset {

namespace {

void require_element(int element, int size) {
    if (element < 0 || element >= size)
        throw InvalidInput("pomset element " + std::to_string(element + 1) + " outside 1.." + std::to_string(size));
}

// Elements in an order compatible with the poset (everything below comes first).
std::vector<int> linear_extension(const Pomset& p) {
    std::vector<int> order(static_cast<size_t>(p.ground_size()));
    for (int i = 0; i < p.ground_size(); ++i) order[static_cast<size_t>(i)] = i;
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        return std::popcount(p.below_mask(a)) < std::popcount(p.below_mask(b));
    });
    return order;
}

void for_each_downset(const Pomset& p, const std::function<void(std::uint32_t)>& visit) {
    const std::vector<int> order = linear_extension(p);
    std::function<void(size_t, std::uint32_t)> walk = [&](size_t pos, std::uint32_t mask) {
        if (pos == order.size()) {
            visit(mask);
            return;
        }
        const int e = order[pos];
        walk(pos + 1, mask);
        if ((p.below_mask(e) & ~mask) == 0) walk(pos + 1, mask | (1u << e));
    };
    walk(0, 0);
}

std::vector<int> mask_elements(std::uint32_t mask) {
    std::vector<int> out;
    for (int i = 0; mask != 0; ++i, mask >>= 1)
        if (mask & 1u) out.push_back(i);
    return out;
}

std::vector<int> maximal_in(const Pomset& p, const std::vector<int>& roots) {
    std::vector<int> out;
    for (int i : roots) {
        bool maximal = true;
        for (int j : roots)
            if (j != i && p.less(i, j)) {
                maximal = false;
                break;
            }
        if (maximal) out.push_back(i);
    }
    return out;
}

void require_compatible(const Pomset& p, const Mset& m) {
    if (m.ground_size() != p.ground_size() || m.height() != p.height())
        throw ShapeError("mset (s=" + std::to_string(m.ground_size()) + ", l=" + std::to_string(m.height()) +
                         ") does not match pomset (s=" + std::to_string(p.ground_size()) +
                         ", l=" + std::to_string(p.height()) + ")");
}

}  // namespace

Pomset::Pomset(int ground_size, int height, std::span<const std::pair<int, int>> relations)
    : size_(ground_size), height_(height) {
    if (size_ <= 0 || size_ > kMaxGroundSize)
        throw InvalidInput("pomset ground size must be in 1.." + std::to_string(kMaxGroundSize));
    if (height_ <= 0) throw InvalidInput("pomset height must be positive");
    less_.assign(static_cast<size_t>(size_) * static_cast<size_t>(size_), 0);
    for (auto [a, b] : relations) {
        require_element(a, size_);
        require_element(b, size_);
        if (a == b) throw InvalidInput("relation " + std::to_string(a + 1) + " < " + std::to_string(a + 1) + " is reflexive");
        less_[index(a, b)] = 1;
    }
    // Warshall closure.
    for (int k = 0; k < size_; ++k)
        for (int i = 0; i < size_; ++i)
            if (less_[index(i, k)])
                for (int j = 0; j < size_; ++j)
                    if (less_[index(k, j)]) less_[index(i, j)] = 1;
    for (int i = 0; i < size_; ++i)
        if (less_[index(i, i)]) throw InvalidInput("order relation has a cycle through element " + std::to_string(i + 1));

    below_.assign(static_cast<size_t>(size_), 0);
    for (int i = 0; i < size_; ++i)
        for (int j = 0; j < size_; ++j)
            if (less_[index(j, i)]) below_[static_cast<size_t>(i)] |= 1u << j;
}

Pomset Pomset::antichain(int ground_size, int height) { return Pomset(ground_size, height); }

Pomset Pomset::chain(int ground_size, int height) {
    std::vector<std::pair<int, int>> rel;
    for (int i = 0; i + 1 < ground_size; ++i) rel.emplace_back(i, i + 1);
    return Pomset(ground_size, height, rel);
}

std::vector<std::pair<int, int>> Pomset::relations() const {
    std::vector<std::pair<int, int>> out;
    for (int a = 0; a < size_; ++a)
        for (int b = 0; b < size_; ++b)
            if (less(a, b)) out.emplace_back(a, b);
    return out;
}

std::vector<std::pair<int, int>> Pomset::covering_relations() const {
    std::vector<std::pair<int, int>> out;
    for (auto [a, b] : relations()) {
        bool covers = true;
        for (int c = 0; c < size_ && covers; ++c)
            if (less(a, c) && less(c, b)) covers = false;
        if (covers) out.emplace_back(a, b);
    }
    return out;
}

bool Pomset::is_chain() const {
    for (int a = 0; a < size_; ++a)
        for (int b = a + 1; b < size_; ++b)
            if (!comparable(a, b)) return false;
    return true;
}

bool Pomset::is_antichain() const {
    return std::all_of(less_.begin(), less_.end(), [](std::uint8_t x) { return x == 0; });
}

bool Pomset::is_downset(std::uint32_t mask) const {
    for (int i = 0; i < size_; ++i)
        if ((mask >> i & 1u) && (below_[static_cast<size_t>(i)] & ~mask)) return false;
    return true;
}

std::vector<int> Ideal::full_elements() const {
    std::vector<int> out;
    for (int i : root_set())
        if (count(i) == height()) out.push_back(i);
    return out;
}

std::vector<int> Ideal::partial_elements() const {
    std::vector<int> out;
    for (int i : root_set())
        if (count(i) < height()) out.push_back(i);
    return out;
}

bool Ideal::is_maximal(int element) const {
    return std::find(maximal_.begin(), maximal_.end(), element) != maximal_.end();
}

Ideal Ideal::of(const Pomset& pomset, Mset counts) {
    if (!is_ideal(pomset, counts)) throw InvalidInput(counts.notation() + " is not an ideal of the pomset");
    auto maximal = maximal_in(pomset, counts.root_set());
    return Ideal(std::move(counts), std::move(maximal));
}

bool is_ideal(const Pomset& pomset, const Mset& counts) {
    require_compatible(pomset, counts);
    for (int i = 0; i < pomset.ground_size(); ++i) {
        if (counts.count(i) == 0) continue;
        for (int j = 0; j < pomset.ground_size(); ++j)
            if (pomset.less(j, i) && counts.count(j) != pomset.height()) return false;
    }
    return true;
}

Ideal ideal_generated(const Pomset& pomset, const Mset& generators) {
    require_compatible(pomset, generators);
    std::uint32_t below_support = 0;
    for (int i : generators.root_set()) below_support |= pomset.below_mask(i);
    std::vector<int> counts = generators.counts();
    for (int j = 0; j < pomset.ground_size(); ++j)
        if (below_support >> j & 1u) counts[static_cast<size_t>(j)] = pomset.height();
    return Ideal::of(pomset, Mset(std::move(counts), pomset.height()));
}

std::vector<Ideal> enumerate_ideals(const Pomset& pomset, int cardinality) {
    const int s = pomset.ground_size();
    const int l = pomset.height();
    if (cardinality < 0 || cardinality > s * l)
        throw InvalidInput("ideal cardinality " + std::to_string(cardinality) + " outside 0.." + std::to_string(s * l));

    std::vector<Ideal> out;
    for_each_downset(pomset, [&](std::uint32_t mask) {
        const std::vector<int> roots = mask_elements(mask);
        const std::vector<int> maximal = maximal_in(pomset, roots);
        const int fixed = l * static_cast<int>(roots.size() - maximal.size());
        const int free_total = cardinality - fixed;
        const int q = static_cast<int>(maximal.size());
        if (free_total < q || free_total > q * l) return;

        std::vector<int> counts(static_cast<size_t>(s), 0);
        for (int i : roots) counts[static_cast<size_t>(i)] = l;
        // Distribute free_total over the maximal elements, each in 1..l.
        std::function<void(size_t, int)> fill = [&](size_t pos, int remaining) {
            if (pos == maximal.size()) {
                if (remaining == 0) out.push_back(Ideal::of(pomset, Mset(counts, l)));
                return;
            }
            const int left = static_cast<int>(maximal.size() - pos - 1);
            for (int c = 1; c <= l; ++c) {
                const int rest = remaining - c;
                if (rest < left || rest > left * l) continue;
                counts[static_cast<size_t>(maximal[pos])] = c;
                fill(pos + 1, rest);
            }
            counts[static_cast<size_t>(maximal[pos])] = 0;
        };
        fill(0, free_total);
    });
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Ideal> all_ideals(const Pomset& pomset) {
    std::vector<Ideal> out;
    for (int r = 0; r <= pomset.ground_size() * pomset.height(); ++r) {
        auto level = enumerate_ideals(pomset, r);
        out.insert(out.end(), std::make_move_iterator(level.begin()), std::make_move_iterator(level.end()));
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Ideal> full_count_ideals(const Pomset& pomset) {
    std::vector<Ideal> out;
    for_each_downset(pomset, [&](std::uint32_t mask) {
        const auto roots = mask_elements(mask);
        out.push_back(full_ideal_on(pomset, roots));
    });
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::vector<int>> enumerate_root_downsets(const Pomset& pomset, int size) {
    if (size < 0 || size > pomset.ground_size())
        throw InvalidInput("down-set size " + std::to_string(size) + " outside 0.." + std::to_string(pomset.ground_size()));
    std::vector<std::vector<int>> out;
    for_each_downset(pomset, [&](std::uint32_t mask) {
        if (std::popcount(mask) == size) out.push_back(mask_elements(mask));
    });
    std::sort(out.begin(), out.end());
    return out;
}

Ideal full_ideal_on(const Pomset& pomset, std::span<const int> downset) {
    std::vector<int> counts(static_cast<size_t>(pomset.ground_size()), 0);
    for (int i : downset) {
        require_element(i, pomset.ground_size());
        counts[static_cast<size_t>(i)] = pomset.height();
    }
    return Ideal::of(pomset, Mset(std::move(counts), pomset.height()));
}

Pomset dual_pomset(const Pomset& pomset) {
    std::vector<std::pair<int, int>> reversed;
    for (auto [a, b] : pomset.relations()) reversed.emplace_back(b, a);
    return Pomset(pomset.ground_size(), pomset.height(), reversed);
}

Ideal ideal_complement(const Pomset& pomset, const Ideal& ideal) {
    if (!is_ideal(pomset, ideal.counts())) throw InvalidInput(ideal.notation() + " is not an ideal of the pomset");
    const Pomset dual = dual_pomset(pomset);
    Mset comp = complement(ideal.counts());
    if (!is_ideal(dual, comp))
        throw InternalInconsistency("complement " + comp.notation() + " is not an ideal of the dual pomset");
    return Ideal::of(dual, std::move(comp));
}

bool is_finer(const Pomset& coarse, const Pomset& fine) {
    if (coarse.ground_size() != fine.ground_size() || coarse.height() != fine.height())
        throw ShapeError("is_finer: pomsets differ in ground size or height");
    for (auto [a, b] : coarse.relations())
        if (!fine.less(a, b)) return false;
    return true;
}

}  // namespace pomset
