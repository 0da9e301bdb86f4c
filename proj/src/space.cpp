#include "pomset/space.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

#include "pomset/error.hpp"

namespace pomset {

int lee_weight(int residue, int modulus) { return std::min(residue, modulus - residue); }

int block_weight(std::span<const int> block, int modulus) {
    if (block.empty()) throw ShapeError("block weight of an empty block");
    int w = 0;
    for (int x : block) w = std::max(w, lee_weight(x, modulus));
    return w;
}

std::uint64_t residues_within(int bound, int modulus) {
    if (bound < 0) return 0;
    return std::min<std::uint64_t>(2ull * static_cast<std::uint64_t>(bound) + 1, static_cast<std::uint64_t>(modulus));
}

std::uint64_t checked_pow(std::uint64_t base, int exponent) {
    std::uint64_t out = 1;
    for (int i = 0; i < exponent; ++i) {
        if (base != 0 && out > std::numeric_limits<std::uint64_t>::max() / base)
            throw BudgetExceeded("integer power " + std::to_string(base) + "^" + std::to_string(exponent) + " overflows");
        out *= base;
    }
    return out;
}

Space::Space(int modulus, Pomset pomset, std::vector<int> labeling)
    : modulus_(modulus), pomset_(std::move(pomset)), labeling_(std::move(labeling)) {
    if (modulus_ < 2) throw InvalidInput("modulus must be at least 2");
    if (pomset_.height() != modulus_ / 2)
        throw ShapeError("pomset height " + std::to_string(pomset_.height()) + " differs from floor(m/2) = " +
                         std::to_string(modulus_ / 2));
    if (static_cast<int>(labeling_.size()) != pomset_.ground_size())
        throw ShapeError("labeling has " + std::to_string(labeling_.size()) + " blocks, pomset has " +
                         std::to_string(pomset_.ground_size()));
    offsets_.reserve(labeling_.size());
    for (int k : labeling_) {
        if (k <= 0) throw InvalidInput("block dimensions must be positive");
        offsets_.push_back(length_);
        length_ += k;
    }
}

Vector Space::make_vector(std::span<const long long> coordinates) const {
    if (static_cast<int>(coordinates.size()) != length_)
        throw ShapeError("vector has " + std::to_string(coordinates.size()) + " coordinates, space length is " +
                         std::to_string(length_));
    Vector v(coordinates.size());
    for (size_t i = 0; i < coordinates.size(); ++i) {
        long long r = coordinates[i] % modulus_;
        if (r < 0) r += modulus_;
        v[i] = static_cast<int>(r);
    }
    return v;
}

Vector Space::make_vector(std::initializer_list<long long> coordinates) const {
    return make_vector(std::span<const long long>(coordinates.begin(), coordinates.size()));
}

void Space::check(const Vector& v) const {
    if (static_cast<int>(v.size()) != length_)
        throw ShapeError("vector has " + std::to_string(v.size()) + " coordinates, space length is " +
                         std::to_string(length_));
    for (int x : v)
        if (x < 0 || x >= modulus_) throw ShapeError("coordinate " + std::to_string(x) + " is not reduced mod m");
}

std::span<const int> Space::block(const Vector& v, int b) const {
    return std::span<const int>(v).subspan(static_cast<size_t>(block_offset(b)), static_cast<size_t>(block_size(b)));
}

Mset Space::support(const Vector& v) const {
    check(v);
    std::vector<int> counts(static_cast<size_t>(block_count()));
    for (int b = 0; b < block_count(); ++b) counts[static_cast<size_t>(b)] = block_weight(block(v, b), modulus_);
    return Mset(std::move(counts), height());
}

// |<supp(v)>| without materializing the ideal: elements strictly below a
// support element count l, the rest count their block weight.
int Space::weight(const Vector& v) const {
    check(v);
    std::uint32_t below = 0;
    int supported = 0;
    std::vector<int> w(static_cast<size_t>(block_count()));
    for (int b = 0; b < block_count(); ++b) {
        w[static_cast<size_t>(b)] = block_weight(block(v, b), modulus_);
        if (w[static_cast<size_t>(b)] > 0) below |= pomset_.below_mask(b);
    }
    for (int b = 0; b < block_count(); ++b) supported += (below >> b & 1u) ? height() : w[static_cast<size_t>(b)];
    return supported;
}

int Space::distance(const Vector& u, const Vector& v) const { return weight(subtract(u, v)); }

Vector Space::add(const Vector& u, const Vector& v) const {
    check(u);
    check(v);
    Vector out(u.size());
    for (size_t i = 0; i < u.size(); ++i) out[i] = (u[i] + v[i]) % modulus_;
    return out;
}

Vector Space::subtract(const Vector& u, const Vector& v) const {
    check(u);
    check(v);
    Vector out(u.size());
    for (size_t i = 0; i < u.size(); ++i) out[i] = (u[i] - v[i] + modulus_) % modulus_;
    return out;
}

Vector Space::negate(const Vector& u) const { return subtract(zero(), u); }

Vector Space::scale(const Vector& u, int factor) const {
    check(u);
    long long f = factor % modulus_;
    if (f < 0) f += modulus_;
    Vector out(u.size());
    for (size_t i = 0; i < u.size(); ++i) out[i] = static_cast<int>((f * u[i]) % modulus_);
    return out;
}

int Space::dot(const Vector& u, const Vector& v) const {
    check(u);
    check(v);
    long long acc = 0;
    for (size_t i = 0; i < u.size(); ++i) acc = (acc + static_cast<long long>(u[i]) * v[i]) % modulus_;
    return static_cast<int>(acc);
}

std::uint64_t Space::size() const { return checked_pow(static_cast<std::uint64_t>(modulus_), length_); }

std::uint64_t Space::index_of(const Vector& v) const {
    check(v);
    std::uint64_t idx = 0;
    for (int x : v) idx = idx * static_cast<std::uint64_t>(modulus_) + static_cast<std::uint64_t>(x);
    return idx;
}

Vector Space::at(std::uint64_t index) const {
    Vector v(static_cast<size_t>(length_));
    for (int i = length_ - 1; i >= 0; --i) {
        v[static_cast<size_t>(i)] = static_cast<int>(index % static_cast<std::uint64_t>(modulus_));
        index /= static_cast<std::uint64_t>(modulus_);
    }
    return v;
}

std::string Space::describe() const {
    std::ostringstream os;
    os << "Z_" << modulus_ << "^" << length_ << " labeling=(";
    for (size_t i = 0; i < labeling_.size(); ++i) os << (i ? "," : "") << labeling_[i];
    os << ") order=";
    const auto cover = pomset_.covering_relations();
    if (cover.empty()) os << "antichain";
    for (size_t i = 0; i < cover.size(); ++i)
        os << (i ? "," : "") << cover[i].first + 1 << "<" << cover[i].second + 1;
    return os.str();
}

std::string format_vector(const Vector& v) {
    std::ostringstream os;
    os << '(';
    for (size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
    os << ')';
    return os.str();
}

}  // namespace pomset
