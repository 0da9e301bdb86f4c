#include "pomset/codes.hpp"

#include <algorithm>
#include <limits>
#include <set>
#include <unordered_set>

#include "pomset/error.hpp"

namespace pomset {

namespace {

struct Span {
    std::vector<Vector> words;
    Matrix spanning;
};

// Submodule generated by `rows`, grown one cyclic factor at a time. Returns
// nullopt as soon as it would exceed `limit` elements.
std::optional<Span> span_closure(const Space& space, const std::vector<Vector>& rows, std::uint64_t limit) {
    Span span;
    span.words.push_back(space.zero());
    std::unordered_set<std::uint64_t> seen{space.index_of(space.zero())};
    for (const Vector& g : rows) {
        if (seen.count(space.index_of(g))) continue;
        std::vector<Vector> multiples;
        for (Vector jg = g; !seen.count(space.index_of(jg)); jg = space.add(jg, g)) multiples.push_back(jg);
        const std::uint64_t grown = span.words.size() * (multiples.size() + 1);
        if (grown > limit) return std::nullopt;
        span.spanning.push_back(g);
        const size_t base = span.words.size();
        for (const Vector& shift : multiples)
            for (size_t i = 0; i < base; ++i) {
                Vector w = space.add(span.words[i], shift);
                seen.insert(space.index_of(w));
                span.words.push_back(std::move(w));
            }
    }
    std::sort(span.words.begin(), span.words.end());
    return span;
}

void require_budget(std::uint64_t needed, std::uint64_t budget, const std::string& what) {
    if (needed > budget)
        throw BudgetExceeded(what + " needs " + std::to_string(needed) + " steps, budget is " + std::to_string(budget));
}

std::vector<Vector> radius_offsets(const Space& space, int radius, std::uint64_t budget) {
    const std::uint64_t total = space.size();
    require_budget(total, budget, "radius ball scan");
    std::vector<Vector> out;
    for (std::uint64_t i = 0; i < total; ++i) {
        Vector v = space.at(i);
        if (space.weight(v) <= radius) out.push_back(std::move(v));
    }
    return out;
}

// Number of balls (codeword + offsets) covering each vector, saturated at 255.
CoverReport census(const Code& code, const std::vector<Vector>& offsets, bool require_cover, std::uint64_t budget) {
    const Space& space = code.space();
    const std::uint64_t total = space.size();
    require_budget(total, budget, "cover census");
    if (offsets.size() != 0 && code.size() > std::numeric_limits<std::uint64_t>::max() / offsets.size())
        throw BudgetExceeded("cover census overflows");
    require_budget(code.size() * offsets.size(), std::max<std::uint64_t>(budget, total), "cover census");

    std::vector<std::uint8_t> hits(static_cast<size_t>(total), 0);
    for (const Vector& c : code.words())
        for (const Vector& x : offsets) {
            auto& h = hits[static_cast<size_t>(space.index_of(space.add(c, x)))];
            if (h < 255) ++h;
        }

    CoverReport report;
    report.ball_size = offsets.size();
    report.holds = true;
    for (std::uint64_t i = 0; i < total; ++i) {
        const int h = hits[static_cast<size_t>(i)];
        if (h > 1 || (require_cover && h == 0)) {
            report.holds = false;
            report.witness = space.at(i);
            report.witness_multiplicity = h;
            break;
        }
    }
    return report;
}

void require_radius(const Space& space, int radius) {
    if (radius < 0 || radius > space.max_weight())
        throw InvalidInput("radius " + std::to_string(radius) + " outside 0.." + std::to_string(space.max_weight()));
}

std::uint64_t ipow(std::uint64_t base, int exponent) {
    if (exponent < 0) throw InternalInconsistency("negative exponent in closed-form weight count");
    return checked_pow(base, exponent);
}

}  // namespace

Code Code::from_words(Space space, std::vector<Vector> words, std::uint64_t budget) {
    if (words.empty()) throw InvalidInput("a code needs at least one codeword");
    for (const Vector& w : words) space.check(w);
    std::sort(words.begin(), words.end());
    words.erase(std::unique(words.begin(), words.end()), words.end());
    require_budget(words.size(), budget, "code construction");
    auto span = span_closure(space, words, words.size());
    const bool linear = span && span->words.size() == words.size();
    Matrix spanning = linear ? std::move(span->spanning) : Matrix{};
    return Code(std::move(space), std::move(words), linear, std::move(spanning), std::nullopt);
}

Code Code::generated(Space space, Matrix generator, std::uint64_t budget) {
    std::vector<Vector> rows;
    for (auto& row : generator) {
        std::vector<long long> wide(row.begin(), row.end());
        row = space.make_vector(wide);
        rows.push_back(row);
    }
    auto span = span_closure(space, rows, budget);
    if (!span) throw BudgetExceeded("spanned code exceeds budget " + std::to_string(budget));
    return Code(std::move(space), std::move(span->words), true, std::move(span->spanning), std::move(generator));
}

bool Code::contains(const Vector& v) const { return std::binary_search(words_.begin(), words_.end(), v); }

Code Code::in_space(Space other) const {
    if (other.modulus() != space_.modulus() || other.labeling() != space_.labeling())
        throw ShapeError("in_space: target space differs in modulus or labeling");
    return Code(std::move(other), words_, linear_, spanning_, generator_);
}

Code span_generator(const Space& space, const Matrix& generator, std::uint64_t budget) {
    return Code::generated(space, generator, budget);
}

int min_distance(const Code& code) {
    if (code.size() < 2) throw UndefinedDistance("minimum distance needs at least two codewords");
    const Space& space = code.space();
    int best = std::numeric_limits<int>::max();
    if (code.is_linear()) {
        const Vector zero = space.zero();
        for (const Vector& c : code.words())
            if (c != zero) best = std::min(best, space.weight(c));
        return best;
    }
    const auto& w = code.words();
    for (size_t i = 0; i < w.size(); ++i)
        for (size_t j = i + 1; j < w.size(); ++j) best = std::min(best, space.distance(w[i], w[j]));
    return best;
}

Code dual_code(const Code& code, std::uint64_t budget) {
    if (!code.is_linear()) throw InvalidInput("dual code requires a linear code");
    const Space& space = code.space();
    const std::uint64_t total = space.size();
    require_budget(total, budget, "annihilator scan");
    std::vector<Vector> words;
    for (std::uint64_t i = 0; i < total; ++i) {
        Vector v = space.at(i);
        bool orthogonal = true;
        for (const Vector& g : code.spanning_rows())
            if (space.dot(g, v) != 0) {
                orthogonal = false;
                break;
            }
        if (orthogonal) words.push_back(std::move(v));
    }
    return Code::from_words(space, std::move(words), std::max<std::uint64_t>(budget, total));
}

CoverReport check_ideal_perfect(const Code& code, const Ideal& ideal, std::uint64_t budget) {
    const auto offsets = enumerate_ideal_ball(code.space(), code.space().zero(), ideal, budget);
    return census(code, offsets, true, budget);
}

CoverReport check_radius_perfect(const Code& code, int radius, std::uint64_t budget) {
    require_radius(code.space(), radius);
    return census(code, radius_offsets(code.space(), radius, budget), true, budget);
}

CoverReport check_error_correcting(const Code& code, int radius, std::uint64_t budget) {
    require_radius(code.space(), radius);
    return census(code, radius_offsets(code.space(), radius, budget), false, budget);
}

bool is_ideal_perfect(const Code& code, const Ideal& ideal, std::uint64_t budget) {
    return check_ideal_perfect(code, ideal, budget).holds;
}

bool is_radius_perfect(const Code& code, int radius, std::uint64_t budget) {
    return check_radius_perfect(code, radius, budget).holds;
}

bool is_error_correcting(const Code& code, int radius, std::uint64_t budget) {
    return check_error_correcting(code, radius, budget).holds;
}

std::vector<Vector> radius_balls_containing(const Code& code, const Vector& v, int radius) {
    std::vector<Vector> out;
    for (const Vector& c : code.words())
        if (code.space().distance(c, v) <= radius) out.push_back(c);
    return out;
}

std::vector<Vector> ideal_balls_containing(const Code& code, const Vector& v, const Mset& ideal) {
    std::vector<Vector> out;
    for (const Vector& c : code.words())
        if (in_ideal_ball(code.space(), v, c, ideal)) out.push_back(c);
    return out;
}

int ceil_log(std::uint64_t count, int modulus) {
    if (count == 0) throw InvalidInput("ceil_log of zero");
    int e = 0;
    std::uint64_t p = 1;
    while (p < count) {
        if (p > std::numeric_limits<std::uint64_t>::max() / static_cast<std::uint64_t>(modulus)) return e + 1;
        p *= static_cast<std::uint64_t>(modulus);
        ++e;
    }
    return e;
}

SingletonReport singleton_report(const Code& code) {
    const Space& space = code.space();
    SingletonReport report;
    report.distance = min_distance(code);
    report.root_size = (report.distance - 1) / space.height();
    report.lhs = space.length() - ceil_log(code.size(), space.modulus());
    report.rhs = -1;
    for (auto& downset : enumerate_root_downsets(space.pomset(), report.root_size)) {
        int dims = 0;
        for (int i : downset) dims += space.block_size(i);
        if (dims > report.rhs) {
            report.rhs = dims;
            report.maximizers.clear();
        }
        if (dims == report.rhs) report.maximizers.push_back(std::move(downset));
    }
    if (report.lhs < report.rhs)
        throw InternalInconsistency("Singleton bound violated: n - ceil(log_m K) = " + std::to_string(report.lhs) +
                                    " < " + std::to_string(report.rhs));
    return report;
}

int singleton_rhs(const Code& code) { return singleton_report(code).rhs; }

bool is_mds(const Code& code) { return singleton_report(code).attained(); }

std::vector<Ideal> critical_ideals(const Code& code) {
    std::vector<Ideal> out;
    for (const auto& d : singleton_report(code).maximizers) out.push_back(full_ideal_on(code.space().pomset(), d));
    return out;
}

Code construct_ideal_perfect(const Space& space, const Ideal& ideal, const std::function<Vector(const Vector&)>& section,
                             std::uint64_t budget) {
    if (!is_ideal(space.pomset(), ideal.counts())) throw InvalidInput(ideal.notation() + " is not an ideal");
    if (!ideal.has_full_count()) throw InvalidInput("construct_ideal_perfect needs a full-count ideal");
    std::vector<int> outside, inside;
    for (int t = 0; t < space.block_count(); ++t) {
        auto& target = ideal.count(t) > 0 ? inside : outside;
        for (int j = 0; j < space.block_size(t); ++j) target.push_back(space.block_offset(t) + j);
    }
    const std::uint64_t count = checked_pow(static_cast<std::uint64_t>(space.modulus()), static_cast<int>(outside.size()));
    require_budget(count, budget, "section code");
    std::vector<Vector> words;
    words.reserve(static_cast<size_t>(count));
    Vector free(outside.size(), 0);
    for (std::uint64_t i = 0; i < count; ++i) {
        std::uint64_t rest = i;
        for (size_t j = free.size(); j-- > 0;) {
            free[j] = static_cast<int>(rest % static_cast<std::uint64_t>(space.modulus()));
            rest /= static_cast<std::uint64_t>(space.modulus());
        }
        const Vector image = section(free);
        if (image.size() != inside.size())
            throw InvalidInput("section returned " + std::to_string(image.size()) + " coordinates, expected " +
                               std::to_string(inside.size()));
        Vector word(static_cast<size_t>(space.length()), 0);
        for (size_t j = 0; j < outside.size(); ++j) word[static_cast<size_t>(outside[j])] = free[j];
        for (size_t j = 0; j < inside.size(); ++j) {
            int x = image[j] % space.modulus();
            word[static_cast<size_t>(inside[j])] = x < 0 ? x + space.modulus() : x;
        }
        words.push_back(std::move(word));
    }
    Code code = Code::from_words(space, std::move(words), budget);
    if (!is_ideal_perfect(code, ideal, budget))
        throw InternalInconsistency("section code is not " + ideal.notation() + "-perfect");
    return code;
}

BlockThreshold block_dependency_threshold(const Code& code) {
    const Space& space = code.space();
    if (!is_prime(space.modulus()))
        throw Unsupported("block dependency threshold needs a prime modulus, got " + std::to_string(space.modulus()));
    if (!code.is_linear()) throw InvalidInput("block dependency threshold needs a linear code");
    if (code.size() < 2) throw InvalidInput("block dependency threshold is undefined for the zero code");

    BlockThreshold result;
    const Code dual = dual_code(code);
    result.parity_check = dual.spanning_rows();
    row_reduce_mod_p(result.parity_check, space.modulus());

    for (int j = 1; j <= space.block_count() && result.witnesses.empty(); ++j) {
        for (const auto& downset : enumerate_root_downsets(space.pomset(), j)) {
            std::vector<int> columns;
            for (int b : downset)
                for (int c = 0; c < space.block_size(b); ++c) columns.push_back(space.block_offset(b) + c);
            const int rank = result.parity_check.empty()
                                 ? 0
                                 : rank_mod_p(select_columns(result.parity_check, columns), space.modulus());
            if (rank < static_cast<int>(columns.size())) result.witnesses.push_back(downset);
        }
        if (!result.witnesses.empty()) result.threshold = j;
    }

    result.codeword_minimum = std::numeric_limits<int>::max();
    const Vector zero = space.zero();
    for (const Vector& c : code.words()) {
        if (c == zero) continue;
        const int roots = static_cast<int>(ideal_generated(space.pomset(), space.support(c)).root_set().size());
        result.codeword_minimum = std::min(result.codeword_minimum, roots);
    }
    return result;
}

std::uint64_t ball_code_intersection(const Code& code, const Mset& ideal, const Vector& center) {
    std::uint64_t n = 0;
    for (const Vector& c : code.words())
        if (in_ideal_ball(code.space(), c, center, ideal)) ++n;
    return n;
}

std::uint64_t WeightDistribution::total() const {
    std::uint64_t t = 0;
    for (auto a : counts) t += a;
    return t;
}

WeightDistribution weight_distribution(const Code& code) {
    WeightDistribution dist;
    dist.counts.assign(static_cast<size_t>(code.space().max_weight() + 1), 0);
    for (const Vector& c : code.words()) ++dist.counts[static_cast<size_t>(code.space().weight(c))];
    return dist;
}

ChainWeightCase classify_chain_weight(int r, int distance, int height) {
    if (r == 0) return ChainWeightCase::Origin;
    if (r < distance) return ChainWeightCase::BelowDistance;
    const int p = r % height;
    if (p == 0) return ChainWeightCase::FullCount;
    if (p == 1) return ChainWeightCase::FirstPartial;
    return ChainWeightCase::Partial;
}

WeightDistribution mds_chain_weight_distribution(int n, int k, int t, int m, int s, std::optional<int> distance) {
    if (m < 2 || t <= 0 || s <= 0) throw InvalidInput("chain weight distribution: m >= 2, t >= 1, s >= 1 required");
    if (n != s * t) throw InvalidInput("chain weight distribution: n must equal s * t");
    if (k < 1 || k > n) throw InvalidInput("chain weight distribution: need 1 <= k <= n");
    if ((n - k) % t != 0) throw InvalidInput("chain weight distribution: t must divide n - k");
    const int L = m / 2;
    const int d = (n - k) / t * L + 1;
    if (distance && *distance != d)
        throw InvalidInput("chain weight distribution: distance " + std::to_string(*distance) +
                           " differs from the MDS value " + std::to_string(d));

    const auto M = static_cast<std::uint64_t>(m);
    WeightDistribution dist;
    dist.counts.assign(static_cast<size_t>(s * L + 1), 0);
    for (int r = 0; r <= s * L; ++r) {
        std::uint64_t a = 0;
        const int l = r / L;
        const int p = r % L;
        switch (classify_chain_weight(r, d, L)) {
            case ChainWeightCase::Origin:
                a = 1;
                break;
            case ChainWeightCase::BelowDistance:
                a = 0;
                break;
            case ChainWeightCase::FullCount:
                a = (ipow(M, t) - ipow(static_cast<std::uint64_t>(2 * L - 1), t)) * ipow(M, t * l - n + k - t);
                break;
            case ChainWeightCase::FirstPartial:
                a = (ipow(3, t) - 1) * ipow(M, t * l - n + k);
                break;
            case ChainWeightCase::Partial:
                a = (ipow(static_cast<std::uint64_t>(2 * p + 1), t) - ipow(static_cast<std::uint64_t>(2 * p - 1), t)) *
                    ipow(M, t * l - n + k);
                break;
        }
        dist.counts[static_cast<size_t>(r)] = a;
    }
    return dist;
}

bool differences_avoid_sum_balls(const Code& code, int radius, bool full_count_only) {
    const Space& space = code.space();
    require_radius(space, radius);
    std::vector<Ideal> ideals;
    for (auto& ideal : enumerate_ideals(space.pomset(), radius))
        if (!full_count_only || ideal.has_full_count()) ideals.push_back(std::move(ideal));
    std::set<Mset> sums;
    for (size_t i = 0; i < ideals.size(); ++i)
        for (size_t j = i; j < ideals.size(); ++j) sums.insert(msum(ideals[i].counts(), ideals[j].counts()));

    const auto& w = code.words();
    for (size_t a = 0; a < w.size(); ++a)
        for (size_t b = a + 1; b < w.size(); ++b) {
            const Mset diff = space.support(space.subtract(w[a], w[b]));
            for (const Mset& sum : sums)
                if (is_submset(diff, sum)) return false;
        }
    return true;
}

}  // namespace pomset
