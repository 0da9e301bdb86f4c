#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "pomset/balls.hpp"
#include "pomset/space.hpp"

namespace pomset::oracle {

// Brute-force certification of the closed forms. Everything here is derived
// from the definitions (support, generated ideal, distance) by scanning the
// whole space; none of it calls the counting formulas it checks.

struct CensusReport {
    std::string space;
    /// Vectors at each weight 0..s*floor(m/2).
    std::vector<std::uint64_t> by_weight;
    /// Vectors v grouped by the count vector of <supp(v)>.
    std::map<std::vector<int>, std::uint64_t> by_ideal;
    std::uint64_t total = 0;

    /// 1 + sum_{r >= 1} census(r) == m^n.
    bool telescopes() const;
};

CensusReport weight_census(const Space& space, std::uint64_t budget = kDefaultScanBudget);

using DistanceFn = std::function<int(const Vector&, const Vector&)>;

struct MetricReport {
    bool passed = true;
    bool exhaustive = false;
    std::uint64_t triples = 0;
    /// Axiom that failed, empty on success.
    std::string failure;
    std::vector<Vector> witness;
};

/// Checks the metric axioms on every triple when (m^n)^3 <= triple_budget,
/// otherwise on `samples` seeded uniform triples. `distance` defaults to the
/// space's pomset block distance.
MetricReport verify_metric(const Space& space, std::uint64_t triple_budget, std::uint64_t seed,
                           std::uint64_t samples = 100'000, DistanceFn distance = {});

/// The closed forms under test; swap one out to run a mutation check.
struct FormulaSet {
    std::function<std::uint64_t(const Space&, const Ideal&)> ball_size;
    std::function<std::uint64_t(const Space&, const Ideal&)> sphere_size;
    std::function<std::uint64_t(const Space&, int)> radius_ball_size;
    std::function<std::vector<Vector>(const Space&, const Vector&, const Ideal&)> enumerate_ball;
    std::function<std::vector<Vector>(const Space&, const Ideal&)> partition;

    static FormulaSet library();
};

struct CheckResult {
    std::string name;
    bool passed = true;
    std::uint64_t cases = 0;
    std::string witness;
};

struct SuiteReport {
    std::string space;
    bool passed = true;
    /// Some checks were skipped because of the budget.
    bool partial = false;
    std::vector<CheckResult> checks;
};

SuiteReport verify_formula_suite(const Space& space, const FormulaSet& formulas = FormulaSet::library(),
                                 std::uint64_t budget = kDefaultScanBudget);

}  // namespace pomset::oracle
