#include "pomset/oracle.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <sstream>

#include "pomset/error.hpp"

namespace pomset::oracle {

namespace {

// Lee block support of every vector of the space, indexed like Space::at.
class SupportTable {
  public:
    SupportTable(const Space& space, std::uint64_t budget) : space_(space) {
        const std::uint64_t total = space.size();
        if (total > budget)
            throw BudgetExceeded("scan of " + std::to_string(total) + " vectors exceeds budget " + std::to_string(budget));
        supports_.reserve(static_cast<size_t>(total));
        for (std::uint64_t i = 0; i < total; ++i) {
            const Mset s = space.support(space.at(i));
            auto [it, fresh] = ids_.try_emplace(s, static_cast<std::uint32_t>(distinct_.size()));
            if (fresh) distinct_.push_back(s);
            supports_.push_back(it->second);
        }
    }

    std::uint64_t size() const { return supports_.size(); }
    const Mset& support(std::uint64_t index) const { return distinct_[supports_[static_cast<size_t>(index)]]; }
    std::uint32_t support_id(std::uint64_t index) const { return supports_[static_cast<size_t>(index)]; }
    const std::vector<Mset>& distinct() const { return distinct_; }

    // Which distinct supports fit inside `ideal`.
    std::vector<bool> fitting(const Mset& ideal) const {
        std::vector<bool> out(distinct_.size());
        for (size_t i = 0; i < distinct_.size(); ++i) out[i] = is_submset(distinct_[i], ideal);
        return out;
    }

    // {v : supp(v) ⊆ ideal}, lexicographic.
    std::vector<Vector> members(const Mset& ideal) const {
        const auto fit = fitting(ideal);
        std::vector<Vector> out;
        for (std::uint64_t i = 0; i < size(); ++i)
            if (fit[supports_[static_cast<size_t>(i)]]) out.push_back(space_.at(i));
        return out;
    }

  private:
    const Space& space_;
    std::vector<std::uint32_t> supports_;
    std::vector<Mset> distinct_;
    std::map<Mset, std::uint32_t> ids_;
};

std::string mismatch(const std::string& what, std::uint64_t formula, std::uint64_t oracle) {
    std::ostringstream os;
    os << what << ": formula=" << formula << " oracle=" << oracle;
    return os.str();
}

void fail(CheckResult& check, std::string witness) {
    if (check.passed) check.witness = std::move(witness);
    check.passed = false;
}

std::uint64_t ideal_cardinality_of(const Pomset& pomset, const Mset& support) {
    return static_cast<std::uint64_t>(ideal_generated(pomset, support).cardinality());
}

}  // namespace

bool CensusReport::telescopes() const {
    std::uint64_t sum = 1;
    for (size_t r = 1; r < by_weight.size(); ++r) sum += by_weight[r];
    return !by_weight.empty() && by_weight[0] == 1 && sum == total;
}

CensusReport weight_census(const Space& space, std::uint64_t budget) {
    const SupportTable table(space, budget);
    CensusReport report;
    report.space = space.describe();
    report.total = table.size();
    report.by_weight.assign(static_cast<size_t>(space.max_weight() + 1), 0);
    std::vector<std::uint64_t> per_support(table.distinct().size(), 0);
    for (std::uint64_t i = 0; i < table.size(); ++i) ++per_support[table.support_id(i)];
    for (size_t id = 0; id < per_support.size(); ++id) {
        const Ideal ideal = ideal_generated(space.pomset(), table.distinct()[id]);
        report.by_weight[static_cast<size_t>(ideal.cardinality())] += per_support[id];
        report.by_ideal[ideal.counts().counts()] += per_support[id];
    }
    return report;
}

MetricReport verify_metric(const Space& space, std::uint64_t triple_budget, std::uint64_t seed, std::uint64_t samples,
                           DistanceFn distance) {
    if (!distance) distance = [&space](const Vector& u, const Vector& v) { return space.distance(u, v); };
    MetricReport report;
    const std::uint64_t n = space.size();

    auto check_pair = [&](const Vector& u, const Vector& v, int duv, int dvu) {
        if (duv < 0) {
            report.failure = "non-negativity";
        } else if ((duv == 0) != (u == v)) {
            report.failure = "identity of indiscernibles";
        } else if (duv != dvu) {
            report.failure = "symmetry";
        } else {
            return true;
        }
        report.passed = false;
        report.witness = {u, v};
        return false;
    };
    auto check_triangle = [&](const Vector& u, const Vector& v, const Vector& w, int duv, int duw, int dwv) {
        if (duv <= duw + dwv) return true;
        report.passed = false;
        report.failure = "triangle inequality";
        report.witness = {u, v, w};
        return false;
    };

    const bool exhaustive = n <= 4096 && n * n * n <= triple_budget;
    report.exhaustive = exhaustive;
    if (exhaustive) {
        std::vector<Vector> all;
        for (std::uint64_t i = 0; i < n; ++i) all.push_back(space.at(i));
        std::vector<int> d(static_cast<size_t>(n * n));
        for (std::uint64_t i = 0; i < n; ++i)
            for (std::uint64_t j = 0; j < n; ++j) d[static_cast<size_t>(i * n + j)] = distance(all[i], all[j]);
        auto at = [&](std::uint64_t i, std::uint64_t j) { return d[static_cast<size_t>(i * n + j)]; };
        for (std::uint64_t i = 0; i < n; ++i)
            for (std::uint64_t j = 0; j < n; ++j)
                if (!check_pair(all[i], all[j], at(i, j), at(j, i))) return report;
        for (std::uint64_t i = 0; i < n; ++i)
            for (std::uint64_t j = 0; j < n; ++j)
                for (std::uint64_t k = 0; k < n; ++k) {
                    ++report.triples;
                    if (!check_triangle(all[i], all[j], all[k], at(i, j), at(i, k), at(k, j))) return report;
                }
        return report;
    }

    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::uint64_t> pick(0, n - 1);
    for (std::uint64_t s = 0; s < samples; ++s) {
        const Vector u = space.at(pick(rng));
        const Vector v = space.at(pick(rng));
        const Vector w = space.at(pick(rng));
        ++report.triples;
        if (!check_pair(u, u, distance(u, u), distance(u, u))) return report;
        if (!check_pair(u, v, distance(u, v), distance(v, u))) return report;
        if (!check_triangle(u, v, w, distance(u, v), distance(u, w), distance(w, v))) return report;
    }
    return report;
}

FormulaSet FormulaSet::library() {
    FormulaSet f;
    f.ball_size = [](const Space& s, const Ideal& i) { return ideal_ball_size(s, i); };
    f.sphere_size = [](const Space& s, const Ideal& i) { return ideal_sphere_size(s, i); };
    f.radius_ball_size = [](const Space& s, int r) { return pomset::radius_ball_size(s, r); };
    f.enumerate_ball = [](const Space& s, const Vector& c, const Ideal& i) { return enumerate_ideal_ball(s, c, i); };
    f.partition = [](const Space& s, const Ideal& i) { return partition_centers(s, i); };
    return f;
}

SuiteReport verify_formula_suite(const Space& space, const FormulaSet& formulas, std::uint64_t budget) {
    SuiteReport report;
    report.space = space.describe();
    std::uint64_t total = 0;
    try {
        total = space.size();
    } catch (const BudgetExceeded&) {
        total = budget + 1;
    }
    if (total > budget) {
        report.partial = true;
        report.passed = false;
        return report;
    }

    const Pomset& pomset = space.pomset();
    const SupportTable table(space, budget);
    const std::vector<Ideal> ideals = all_ideals(pomset);

    // Distinct supports with their multiplicities and generated ideals.
    std::vector<std::uint64_t> per_support(table.distinct().size(), 0);
    for (std::uint64_t i = 0; i < total; ++i) ++per_support[table.support_id(i)];
    std::vector<Mset> generated;
    std::vector<std::uint64_t> weight_of;
    for (const Mset& s : table.distinct()) {
        generated.push_back(ideal_generated(pomset, s).counts());
        weight_of.push_back(ideal_cardinality_of(pomset, s));
    }

    auto named = [](const char* name) {
        CheckResult c;
        c.name = name;
        return c;
    };
    CheckResult ball = named("ideal-ball-size"), members = named("ideal-ball-members"),
                sphere = named("ideal-sphere-size"), telescope = named("sphere-partition"),
                radius = named("radius-ball-size"), uni = named("radius-ball-union"),
                submodule = named("full-ball-submodule"), duality = named("ball-duality"),
                tiling = named("partition-tiling");

    // A fixed non-zero center for translated-ball checks.
    const Vector shifted = space.at(total - 1);
    std::uint64_t sphere_sum = 0;

    for (const Ideal& ideal : ideals) {
        const auto fit = table.fitting(ideal.counts());
        std::uint64_t in_ball = 0, in_sphere = 0;
        for (size_t id = 0; id < fit.size(); ++id) {
            if (fit[id]) in_ball += per_support[id];
            if (generated[id] == ideal.counts()) in_sphere += per_support[id];
        }
        if (ideal.cardinality() == 0) in_sphere = 1;

        ++ball.cases;
        if (const auto f = formulas.ball_size(space, ideal); f != in_ball)
            fail(ball, mismatch("I=" + ideal.notation(), f, in_ball));

        ++sphere.cases;
        const std::uint64_t fs = formulas.sphere_size(space, ideal);
        sphere_sum += fs;
        if (fs != in_sphere) fail(sphere, mismatch("I=" + ideal.notation(), fs, in_sphere));

        if (in_ball <= budget) {
            for (const Vector& center : {space.zero(), shifted}) {
                ++members.cases;
                std::vector<Vector> expected;
                for (std::uint64_t i = 0; i < total; ++i) {
                    Vector v = space.at(i);
                    if (is_submset(space.support(space.subtract(center, v)), ideal.counts()))
                        expected.push_back(std::move(v));
                }
                auto got = formulas.enumerate_ball(space, center, ideal);
                std::sort(got.begin(), got.end());
                if (got != expected)
                    fail(members, "I=" + ideal.notation() + " center=" + format_vector(center) +
                                      mismatch(" members", got.size(), expected.size()));
            }
        } else {
            report.partial = true;
        }

        if (ideal.has_full_count()) {
            // Submodule: closed under addition and negation.
            const std::vector<Vector> ball_members = table.members(ideal.counts());
            ++submodule.cases;
            const std::uint64_t expected_size =
                checked_pow(static_cast<std::uint64_t>(space.modulus()), [&] {
                    int dims = 0;
                    for (int t : ideal.root_set()) dims += space.block_size(t);
                    return dims;
                }());
            if (ball_members.size() != expected_size)
                fail(submodule, mismatch("I=" + ideal.notation() + " size", expected_size, ball_members.size()));
            std::set<Vector> lookup(ball_members.begin(), ball_members.end());
            const std::uint64_t pairs = static_cast<std::uint64_t>(ball_members.size()) * ball_members.size();
            auto closed = [&](const Vector& a, const Vector& b) {
                if (!lookup.count(space.add(a, b)) || !lookup.count(space.negate(a))) {
                    fail(submodule, "I=" + ideal.notation() + " not closed at " + format_vector(a) + "+" + format_vector(b));
                    return false;
                }
                return true;
            };
            if (pairs <= budget) {
                for (const Vector& a : ball_members)
                    for (const Vector& b : ball_members)
                        if (!closed(a, b)) goto closure_done;
            } else {
                std::mt19937_64 rng(0x5eed);
                std::uniform_int_distribution<size_t> pick(0, ball_members.size() - 1);
                for (int s = 0; s < 100'000; ++s)
                    if (!closed(ball_members[pick(rng)], ball_members[pick(rng)])) break;
            }
        closure_done:

            // B_{I^c} in the dual pomset equals the annihilator of B_I.
            ++duality.cases;
            const Pomset dual = dual_pomset(pomset);
            const Space dual_space = space.with_pomset(dual);
            const Ideal comp = ideal_complement(pomset, ideal);
            std::vector<Vector> annihilator;
            for (std::uint64_t i = 0; i < total; ++i) {
                Vector v = space.at(i);
                bool orthogonal = true;
                for (const Vector& b : ball_members)
                    if (space.dot(v, b) != 0) {
                        orthogonal = false;
                        break;
                    }
                if (orthogonal) annihilator.push_back(std::move(v));
            }
            auto dual_ball = formulas.enumerate_ball(dual_space, dual_space.zero(), comp);
            std::sort(dual_ball.begin(), dual_ball.end());
            if (dual_ball != annihilator)
                fail(duality, "I=" + ideal.notation() + mismatch(" dual ball vs annihilator", dual_ball.size(), annihilator.size()));
        }

        // Tiling by the translate centers.
        bool divisible = true;
        for (int t : ideal.partial_elements())
            if (space.modulus() % (2 * ideal.count(t) + 1) != 0) divisible = false;
        ++tiling.cases;
        if (!divisible) {
            bool raised = false;
            try {
                (void)formulas.partition(space, ideal);
            } catch (const PartitionImpossible&) {
                raised = true;
            }
            if (!raised) fail(tiling, "I=" + ideal.notation() + " partition should be impossible");
            continue;
        }
        const std::vector<Vector> centers = formulas.partition(space, ideal);
        const std::vector<Vector> offsets = table.members(ideal.counts());
        if (static_cast<std::uint64_t>(centers.size()) * offsets.size() > budget + total) {
            fail(tiling, "I=" + ideal.notation() + " centers*ball exceeds the space: " + std::to_string(centers.size()) +
                             "*" + std::to_string(offsets.size()));
            continue;
        }
        std::vector<std::uint8_t> hits(static_cast<size_t>(total), 0);
        for (const Vector& c : centers)
            for (const Vector& x : offsets) {
                auto& h = hits[static_cast<size_t>(space.index_of(space.add(c, x)))];
                if (h < 255) ++h;
            }
        for (std::uint64_t i = 0; i < total; ++i)
            if (hits[static_cast<size_t>(i)] != 1) {
                fail(tiling, "I=" + ideal.notation() + " vector " + format_vector(space.at(i)) + " covered " +
                                 std::to_string(hits[static_cast<size_t>(i)]) + " times");
                break;
            }
    }

    ++telescope.cases;
    if (sphere_sum != total) fail(telescope, mismatch("sum of sphere sizes", sphere_sum, total));

    std::uint64_t cumulative = 0;
    for (int r = 0; r <= space.max_weight(); ++r) {
        for (size_t id = 0; id < weight_of.size(); ++id)
            if (weight_of[id] == static_cast<std::uint64_t>(r)) cumulative += per_support[id];
        ++radius.cases;
        if (const auto f = formulas.radius_ball_size(space, r); f != cumulative)
            fail(radius, mismatch("r=" + std::to_string(r), f, cumulative));

        // B_r is the union of the I-balls over ideals of cardinality r.
        ++uni.cases;
        const auto level = enumerate_ideals(pomset, r);
        for (size_t id = 0; id < weight_of.size(); ++id) {
            const bool in_radius = weight_of[id] <= static_cast<std::uint64_t>(r);
            const bool in_union = std::any_of(level.begin(), level.end(), [&](const Ideal& i) {
                return is_submset(table.distinct()[id], i.counts());
            });
            if (in_radius != in_union) {
                fail(uni, "r=" + std::to_string(r) + " support " + table.distinct()[id].notation());
                break;
            }
        }
    }

    report.checks = {ball, members, sphere, telescope, radius, uni, submodule, duality, tiling};
    for (const auto& c : report.checks) report.passed = report.passed && c.passed;
    return report;
}

}  // namespace pomset::oracle
