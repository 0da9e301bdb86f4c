#pragma once

// Structural property checks over the fixtures and random codes.

#include <sstream>

#include "pomset/oracle.hpp"
#include "support.hpp"

namespace pomset::testing {

// Dual codes of small codes are large; their ball censuses need more room.
inline constexpr std::uint64_t kPropertyBudget = 200'000'000;

struct Outcome {
    bool ok = true;
    std::uint64_t cases = 0;
    std::string detail;

    void fail(const std::string& why) {
        if (ok) detail = why;
        ok = false;
    }
};

inline std::vector<Code> fixture_codes() {
    std::vector<Code> out;
    for (const auto& name : fixture_names()) {
        const ProblemFile p = fixture(name);
        if (p.has_code()) out.push_back(p.code());
    }
    return out;
}

inline std::vector<Space> fixture_spaces() {
    std::vector<Space> out;
    for (const auto& name : fixture_names()) out.push_back(fixture(name).space());
    return out;
}

/// Metric axioms on every fixture space: exhaustive where (m^n)^3 fits the
/// triple budget, seeded samples elsewhere.
inline Outcome metric_axioms(std::uint64_t triple_budget, std::uint64_t samples, std::uint64_t seed,
                             std::uint64_t* exhaustive_spaces = nullptr) {
    Outcome o;
    for (const Space& sp : fixture_spaces()) {
        const auto r = oracle::verify_metric(sp, triple_budget, seed, samples);
        ++o.cases;
        if (r.exhaustive && exhaustive_spaces) ++*exhaustive_spaces;
        if (!r.exhaustive && r.passed && r.triples < samples) o.fail(sp.describe() + ": too few samples");
        if (!r.passed) o.fail(sp.describe() + ": " + r.failure);
    }
    return o;
}

/// The Singleton bound n - ceil(log_m K) >= rhs on random codes over the
/// fixture structures.
inline Outcome singleton_random(int codes, std::uint64_t seed) {
    Outcome o;
    const auto spaces = fixture_spaces();
    std::mt19937_64 rng(seed);
    for (int i = 0; o.cases < static_cast<std::uint64_t>(codes); ++i) {
        const Space& sp = spaces[static_cast<size_t>(i) % spaces.size()];
        const Code c = random_code(sp, rng);
        if (c.size() < 2) continue;
        ++o.cases;
        try {
            const SingletonReport s = singleton_report(c);
            if (s.lhs < s.rhs) o.fail(sp.describe() + ": bound violated");
        } catch (const InternalInconsistency& e) {
            o.fail(sp.describe() + ": " + e.what());
        }
    }
    return o;
}

/// MDS iff I-perfect for some full-count ideal of cardinality
/// floor(m/2) * floor((d-1)/floor(m/2)).
inline Outcome mds_iff_perfect(const std::vector<Code>& codes) {
    Outcome o;
    for (const Code& c : codes) {
        if (c.size() < 2 || !c.is_linear() || !dimension(c)) continue;
        ++o.cases;
        const int L = c.space().height();
        const int d = min_distance(c);
        bool perfect = false;
        for (const Ideal& i : full_count_ideals_of_size(c.space().pomset(), L * ((d - 1) / L)))
            perfect = perfect || is_ideal_perfect(c, i);
        if (perfect != is_mds(c))
            o.fail(c.space().describe() + " K=" + std::to_string(c.size()) + ": mds=" + std::to_string(is_mds(c)) +
                   " perfect=" + std::to_string(perfect));
    }
    return o;
}

/// Necessity (r a multiple of floor(m/2), full-count ideals) and sufficiency
/// (all ideals) of avoiding the sum balls B_{I (+) I'}.
inline Outcome error_correction_criteria(const std::vector<Code>& codes) {
    Outcome o;
    for (const Code& c : codes) {
        if (c.size() < 2) continue;
        const Space& sp = c.space();
        for (int r = 0; r <= sp.max_weight(); ++r) {
            const bool corrects = is_error_correcting(c, r);
            ++o.cases;
            if (r % sp.height() == 0 && corrects && !differences_avoid_sum_balls(c, r, true))
                o.fail(sp.describe() + " r=" + std::to_string(r) + ": necessity");
            if (differences_avoid_sum_balls(c, r, false) && !corrects)
                o.fail(sp.describe() + " r=" + std::to_string(r) + ": sufficiency");
        }
    }
    return o;
}

/// Equal block sizes: MDS survives passing to any finer pomset.
inline Outcome finer_monotonicity(const std::vector<Code>& codes) {
    Outcome o;
    for (const Code& c : codes) {
        const Space& sp = c.space();
        if (c.size() < 2 || !equal_dims(sp) || !is_mds(c) || sp.block_count() > 4) continue;
        for (const Pomset& fine : all_pomsets(sp.block_count(), sp.height())) {
            if (!is_finer(sp.pomset(), fine)) continue;
            ++o.cases;
            if (!is_mds(c.in_space(sp.with_pomset(fine))))
                o.fail(sp.describe() + " not MDS under a finer order");
        }
    }
    return o;
}

/// Chain, equal block size t, t | ceil(log_m K): every I-perfect code is MDS.
/// Codes are also read under every chain order of their blocks.
inline Outcome chain_perfect_implies_mds(const std::vector<Code>& codes) {
    Outcome o;
    for (const Code& c : codes) {
        const Space& sp = c.space();
        if (c.size() < 2 || !equal_dims(sp)) continue;
        const int t = sp.labeling().front();
        if (ceil_log(c.size(), sp.modulus()) % t != 0) continue;
        std::vector<int> order(static_cast<size_t>(sp.block_count()));
        for (int i = 0; i < sp.block_count(); ++i) order[static_cast<size_t>(i)] = i;
        do {
            std::vector<std::pair<int, int>> rel;
            for (size_t i = 1; i < order.size(); ++i) rel.emplace_back(order[i - 1], order[i]);
            const Code cc = c.in_space(sp.with_pomset(Pomset(sp.block_count(), sp.height(), rel)));
            const bool mds = is_mds(cc);
            for (const Ideal& i : all_ideals(cc.space().pomset())) {
                if (i.cardinality() == 0) continue;
                ++o.cases;
                if (is_ideal_perfect(cc, i) && !mds) o.fail(cc.space().describe() + " I=" + i.notation());
            }
        } while (std::next_permutation(order.begin(), order.end()));
    }
    return o;
}

/// Linear K = m^k, full-count I: C is I-perfect iff the dual code is
/// I^c-perfect in the dual pomset.
inline Outcome dual_perfectness(const std::vector<Code>& codes) {
    Outcome o;
    for (const Code& c : codes) {
        if (!c.is_linear() || !dimension(c)) continue;
        const Space& sp = c.space();
        const Pomset reversed = dual_pomset(sp.pomset());
        const Code dual = dual_code(c).in_space(sp.with_pomset(reversed));
        for (const Ideal& i : full_count_ideals(sp.pomset())) {
            ++o.cases;
            const Ideal comp = ideal_complement(sp.pomset(), i);
            if (is_ideal_perfect(c, i, kPropertyBudget) != is_ideal_perfect(dual, comp, kPropertyBudget))
                o.fail(sp.describe() + " I=" + i.notation());
        }
    }
    return o;
}

/// The five-way equivalence for equal block sizes.
inline Outcome duality_equivalence(const std::vector<Code>& codes) {
    Outcome o;
    for (const Code& c : codes) {
        const Space& sp = c.space();
        if (!c.is_linear() || !dimension(c) || !equal_dims(sp)) continue;
        const int k = *dimension(c), t = sp.labeling().front();
        if (k == 0 || k == sp.length() || k % t != 0) continue;
        ++o.cases;
        const DualityConditions d = duality_conditions(c);
        if (!d.all_equal()) {
            std::ostringstream os;
            os << sp.describe() << ": " << d.mds << d.perfect_for_all << d.dual_perfect_for_all << d.dual_mds
               << d.intersections << " " << d.detail;
            o.fail(os.str());
        }
    }
    return o;
}

/// Prime modulus: the smallest dependent down-set of parity-check blocks has
/// the size of the smallest codeword root set.
inline Outcome block_threshold_consistency(const std::vector<Code>& codes) {
    Outcome o;
    for (const Code& c : codes) {
        if (!c.is_linear() || c.size() < 2 || !is_prime(c.space().modulus())) continue;
        if (dual_code(c).size() < 2) continue;
        ++o.cases;
        const BlockThreshold b = block_dependency_threshold(c);
        if (!b.consistent())
            o.fail(c.space().describe() + ": threshold " + std::to_string(b.threshold) + " vs " +
                   std::to_string(b.codeword_minimum));
    }
    return o;
}

inline std::vector<Code> random_linear_codes(int count, std::uint64_t seed, bool prime_only) {
    std::vector<Code> out;
    const auto spaces = fixture_spaces();
    std::mt19937_64 rng(seed);
    for (size_t i = 0; static_cast<int>(out.size()) < count; ++i) {
        const Space& sp = spaces[i % spaces.size()];
        if (prime_only && !is_prime(sp.modulus())) continue;
        std::uniform_int_distribution<int> residue(0, sp.modulus() - 1);
        std::uniform_int_distribution<int> rows(1, std::min(2, sp.length() - 1 > 0 ? sp.length() - 1 : 1));
        Matrix g;
        for (int r = rows(rng); r > 0; --r) {
            Vector v(static_cast<size_t>(sp.length()));
            for (int& x : v) x = residue(rng);
            g.push_back(v);
        }
        Code c = Code::generated(sp, g);
        if (c.size() >= 2) out.push_back(std::move(c));
    }
    return out;
}

}  // namespace pomset::testing
