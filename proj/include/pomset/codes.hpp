#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "pomset/balls.hpp"
#include "pomset/modular.hpp"
#include "pomset/space.hpp"

namespace pomset {

/// A nonempty, deduplicated set of codewords in a pomset block space. Words
/// are kept in lexicographic order.
class Code {
  public:
    /// Throws InvalidInput on an empty list, ShapeError on malformed words.
    static Code from_words(Space space, std::vector<Vector> words, std::uint64_t budget = kDefaultScanBudget);
    /// The Z_m-submodule spanned by the rows of `generator`.
    static Code generated(Space space, Matrix generator, std::uint64_t budget = kDefaultScanBudget);

    const Space& space() const { return space_; }
    const std::vector<Vector>& words() const { return words_; }
    std::uint64_t size() const { return words_.size(); }

    /// Closed under addition and negation.
    bool is_linear() const { return linear_; }
    const std::optional<Matrix>& generator() const { return generator_; }
    /// A generating set of the submodule (empty for {0}); only meaningful when linear.
    const Matrix& spanning_rows() const { return spanning_; }

    bool contains(const Vector& v) const;

    /// The same words read in another space with equal modulus and labeling.
    Code in_space(Space other) const;

  private:
    Code(Space space, std::vector<Vector> words, bool linear, Matrix spanning, std::optional<Matrix> generator)
        : space_(std::move(space)),
          words_(std::move(words)),
          linear_(linear),
          spanning_(std::move(spanning)),
          generator_(std::move(generator)) {}

    Space space_;
    std::vector<Vector> words_;
    bool linear_;
    Matrix spanning_;
    std::optional<Matrix> generator_;
};

Code span_generator(const Space& space, const Matrix& generator, std::uint64_t budget = kDefaultScanBudget);

/// Throws UndefinedDistance when the code has a single word.
int min_distance(const Code& code);

/// { v : c.v = 0 mod m for every codeword c }, by exhaustive scan. Requires a
/// linear code.
Code dual_code(const Code& code, std::uint64_t budget = kDefaultAnnihilatorBudget);

/// Outcome of a ball-family census over the whole space.
struct CoverReport {
    bool holds = false;
    /// First vector (lexicographic) breaking the property.
    std::optional<Vector> witness;
    /// How many balls contain the witness.
    int witness_multiplicity = 0;
    std::uint64_t ball_size = 0;
};

CoverReport check_ideal_perfect(const Code& code, const Ideal& ideal, std::uint64_t budget = kDefaultScanBudget);
CoverReport check_radius_perfect(const Code& code, int radius, std::uint64_t budget = kDefaultScanBudget);
CoverReport check_error_correcting(const Code& code, int radius, std::uint64_t budget = kDefaultScanBudget);

bool is_ideal_perfect(const Code& code, const Ideal& ideal, std::uint64_t budget = kDefaultScanBudget);
bool is_radius_perfect(const Code& code, int radius, std::uint64_t budget = kDefaultScanBudget);
bool is_error_correcting(const Code& code, int radius, std::uint64_t budget = kDefaultScanBudget);

/// Codewords whose radius ball contains v.
std::vector<Vector> radius_balls_containing(const Code& code, const Vector& v, int radius);
/// Codewords whose I-ball contains v.
std::vector<Vector> ideal_balls_containing(const Code& code, const Vector& v, const Mset& ideal);

/// Smallest e with m^e >= K.
int ceil_log(std::uint64_t count, int modulus);

struct SingletonReport {
    int distance = 0;
    /// floor((d - 1) / floor(m/2))
    int root_size = 0;
    /// max over down-sets of that size of the summed block dimensions.
    int rhs = 0;
    /// n - ceil(log_m K)
    int lhs = 0;
    /// Down-sets attaining rhs.
    std::vector<std::vector<int>> maximizers;

    bool attained() const { return lhs == rhs; }
};

/// Throws InternalInconsistency if the bound is violated.
SingletonReport singleton_report(const Code& code);
int singleton_rhs(const Code& code);
bool is_mds(const Code& code);

/// Full-count ideals on the down-sets attaining the Singleton maximum.
std::vector<Ideal> critical_ideals(const Code& code);

/// The code {(v, f(v))} with v ranging over the blocks outside I* and f(v)
/// filling the blocks of I* (coordinates in ascending block order). `ideal`
/// must have full count.
Code construct_ideal_perfect(const Space& space, const Ideal& ideal, const std::function<Vector(const Vector&)>& section,
                             std::uint64_t budget = kDefaultScanBudget);

struct BlockThreshold {
    /// Smallest down-set size whose parity-check blocks are dependent.
    int threshold = 0;
    std::vector<std::vector<int>> witnesses;
    /// min |<supp(c)>*| over nonzero codewords.
    int codeword_minimum = 0;
    Matrix parity_check;

    bool consistent() const { return threshold == codeword_minimum; }
};

/// Requires a prime modulus and a linear code other than {0}.
BlockThreshold block_dependency_threshold(const Code& code);

/// |B_I(x) ∩ C|.
std::uint64_t ball_code_intersection(const Code& code, const Mset& ideal, const Vector& center);

/// A_r for r = 0..s*floor(m/2).
struct WeightDistribution {
    std::vector<std::uint64_t> counts;

    std::uint64_t at(int r) const { return counts.at(static_cast<size_t>(r)); }
    std::uint64_t total() const;
    bool operator==(const WeightDistribution&) const = default;
};

WeightDistribution weight_distribution(const Code& code);

enum class ChainWeightCase { Origin, BelowDistance, FullCount, FirstPartial, Partial };

ChainWeightCase classify_chain_weight(int r, int distance, int height);

/// Closed-form weight distribution of an MDS linear code of dimension k in
/// a chain structure of s blocks of size t over Z_m. If `distance` is given it
/// must match the implied (n-k)/t * floor(m/2) + 1.
WeightDistribution mds_chain_weight_distribution(int n, int k, int t, int m, int s,
                                                 std::optional<int> distance = std::nullopt);

/// True iff no difference of distinct codewords lies in B_{I (+) I'} for any
/// ideals I, I' of cardinality r (restricted to full-count ideals if asked).
bool differences_avoid_sum_balls(const Code& code, int radius, bool full_count_only);

}  // namespace pomset
