#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "pomset/oracle.hpp"
#include "support.hpp"

using namespace pomset;
using namespace pomset::testing;

TEST_CASE("census of the V-shape space") {
    const Space sp = fixture("vshape").space();
    const auto c = oracle::weight_census(sp);
    CHECK(c.total == 125);
    CHECK(c.telescopes());
    CHECK(c.by_weight == std::vector<std::uint64_t>{1, 2, 2, 20, 40, 40, 20});
    CHECK(c.by_ideal.at({2, 1, 0}) == 10);
    CHECK_THROWS_AS(oracle::weight_census(sp, 100), BudgetExceeded);
}

TEST_CASE("metric axioms, exhaustive and sampled") {
    const Space small = fixture("z5_one_perfect").space();
    const auto e = oracle::verify_metric(small, 100'000, 1);
    CHECK(e.passed);
    CHECK(e.exhaustive);
    CHECK(e.triples == 15625);

    const Space big = fixture("mds_two_chains").space();
    const auto s = oracle::verify_metric(big, 100'000, 42, 20'000);
    CHECK(s.passed);
    CHECK_FALSE(s.exhaustive);
    CHECK(s.triples == 20'000);
    const auto again = oracle::verify_metric(big, 100'000, 42, 20'000);
    CHECK(again.triples == s.triples);
}

TEST_CASE("metric check catches a non-metric") {
    const Space sp = fixture("z5_one_perfect").space();
    // Raw residues instead of Lee weights: not symmetric.
    auto raw = [&](const Vector& u, const Vector& v) {
        const Vector d = sp.subtract(u, v);
        return d[0] + d[1];
    };
    const auto r = oracle::verify_metric(sp, 100'000, 1, 1000, raw);
    CHECK_FALSE(r.passed);
    CHECK(r.failure == "symmetry");
    CHECK(r.witness.size() == 2);

    // Squared distance breaks the triangle inequality.
    auto squared = [&](const Vector& u, const Vector& v) { return sp.distance(u, v) * sp.distance(u, v); };
    const auto t = oracle::verify_metric(sp, 100'000, 1, 1000, squared);
    CHECK_FALSE(t.passed);
    CHECK(t.failure == "triangle inequality");
}

TEST_CASE("formula suite passes on every fixture space") {
    for (const auto& name : fixture_names()) {
        const auto r = oracle::verify_formula_suite(fixture(name).space());
        INFO(name);
        CHECK(r.passed);
        CHECK_FALSE(r.partial);
        CHECK(r.checks.size() == 9);
        for (const auto& c : r.checks) {
            INFO(c.name << " " << c.witness);
            CHECK(c.passed);
            CHECK(c.cases > 0);
        }
    }
}

TEST_CASE("formula suite detects mutated formulas") {
    const Space even = fixture("pr_antichain").space();
    const Space odd = fixture("vshape").space();
    auto failed = [](const oracle::SuiteReport& r, const std::string& name) {
        for (const auto& c : r.checks)
            if (c.name == name) return !c.passed;
        return false;
    };

    // Odd-m sphere expression applied verbatim to even m.
    auto sphere_mutant = oracle::FormulaSet::library();
    sphere_mutant.sphere_size = [](const Space& sp, const Ideal& i) {
        std::uint64_t n = 1;
        for (int t = 0; t < sp.block_count(); ++t) {
            const int c = i.count(t), k = sp.block_size(t);
            if (c == 0) continue;
            if (i.is_maximal(t)) n *= checked_pow(2 * c + 1, k) - checked_pow(2 * c - 1, k);
            else n *= checked_pow(sp.modulus(), k);
        }
        return n;
    };
    const auto r1 = oracle::verify_formula_suite(even, sphere_mutant);
    CHECK_FALSE(r1.passed);
    CHECK(failed(r1, "ideal-sphere-size"));

    auto ball_mutant = oracle::FormulaSet::library();
    ball_mutant.ball_size = [](const Space& sp, const Ideal& i) { return ideal_ball_size(sp, i) + (i.cardinality() == 2); };
    CHECK(failed(oracle::verify_formula_suite(odd, ball_mutant), "ideal-ball-size"));

    auto radius_mutant = oracle::FormulaSet::library();
    radius_mutant.radius_ball_size = [](const Space& sp, int r) { return radius_ball_size(sp, r) - (r == 3); };
    CHECK(failed(oracle::verify_formula_suite(odd, radius_mutant), "radius-ball-size"));

    auto enum_mutant = oracle::FormulaSet::library();
    enum_mutant.enumerate_ball = [](const Space& sp, const Vector& c, const Ideal& i) {
        auto v = enumerate_ideal_ball(sp, c, i);
        if (v.size() > 1) v.pop_back();
        return v;
    };
    CHECK(failed(oracle::verify_formula_suite(odd, enum_mutant), "ideal-ball-members"));

    auto partition_mutant = oracle::FormulaSet::library();
    partition_mutant.partition = [](const Space& sp, const Ideal& i) {
        auto v = partition_centers(sp, i);
        v.push_back(v.front());
        return v;
    };
    CHECK(failed(oracle::verify_formula_suite(even, partition_mutant), "partition-tiling"));
}

TEST_CASE("suite over budget is flagged partial") {
    const auto r = oracle::verify_formula_suite(fixture("mds_two_chains").space(), oracle::FormulaSet::library(), 1000);
    CHECK(r.partial);
    CHECK_FALSE(r.passed);
    CHECK(r.checks.empty());
}
