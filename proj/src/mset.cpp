#include "pomset/mset.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "pomset/error.hpp"

namespace pomset {

namespace {

void require_same_shape(const Mset& a, const Mset& b) {
    if (a.ground_size() != b.ground_size() || a.height() != b.height()) {
        std::ostringstream msg;
        msg << "mset shape mismatch: (s=" << a.ground_size() << ", l=" << a.height() << ") vs (s="
            << b.ground_size() << ", l=" << b.height() << ")";
        throw ShapeError(msg.str());
    }
}

template <typename Op>
Mset pointwise(const Mset& a, const Mset& b, Op op) {
    require_same_shape(a, b);
    std::vector<int> out(a.counts().size());
    for (size_t i = 0; i < out.size(); ++i) out[i] = op(a.counts()[i], b.counts()[i]);
    return Mset(std::move(out), a.height());
}

}  // namespace

Mset::Mset(int ground_size, int height) : Mset(std::vector<int>(ground_size < 0 ? 0 : ground_size, 0), height) {
    if (ground_size <= 0) throw InvalidInput("mset ground size must be positive");
}

Mset::Mset(std::vector<int> counts, int height) : counts_(std::move(counts)), height_(height) {
    if (height_ <= 0) throw InvalidInput("mset height must be positive");
    if (counts_.empty()) throw InvalidInput("mset ground size must be positive");
    for (int c : counts_) {
        if (c < 0 || c > height_) {
            throw InvalidInput("mset count " + std::to_string(c) + " outside 0.." + std::to_string(height_));
        }
    }
}

Mset Mset::full(int ground_size, int height) {
    if (ground_size <= 0) throw InvalidInput("mset ground size must be positive");
    return Mset(std::vector<int>(static_cast<size_t>(ground_size), height), height);
}

int Mset::cardinality() const { return std::accumulate(counts_.begin(), counts_.end(), 0); }

bool Mset::empty() const {
    return std::all_of(counts_.begin(), counts_.end(), [](int c) { return c == 0; });
}

std::vector<int> Mset::root_set() const {
    std::vector<int> roots;
    for (size_t i = 0; i < counts_.size(); ++i)
        if (counts_[i] > 0) roots.push_back(static_cast<int>(i));
    return roots;
}

std::string Mset::notation() const {
    std::ostringstream os;
    os << '{';
    bool first = true;
    for (size_t i = 0; i < counts_.size(); ++i) {
        if (counts_[i] == 0) continue;
        if (!first) os << ',';
        os << counts_[i] << '/' << (i + 1);
        first = false;
    }
    os << '}';
    return os.str();
}

Mset msum(const Mset& a, const Mset& b) {
    const int cap = a.height();
    return pointwise(a, b, [cap](int x, int y) { return std::min(cap, x + y); });
}

Mset mdiff(const Mset& a, const Mset& b) {
    return pointwise(a, b, [](int x, int y) { return std::max(x - y, 0); });
}

Mset munion(const Mset& a, const Mset& b) {
    return pointwise(a, b, [](int x, int y) { return std::max(x, y); });
}

Mset complement(const Mset& a) {
    std::vector<int> out(a.counts().size());
    for (size_t i = 0; i < out.size(); ++i) out[i] = a.height() - a.counts()[i];
    return Mset(std::move(out), a.height());
}

bool is_submset(const Mset& a, const Mset& b) {
    require_same_shape(a, b);
    for (size_t i = 0; i < a.counts().size(); ++i)
        if (a.counts()[i] > b.counts()[i]) return false;
    return true;
}

}  // namespace pomset
