#include "pomset/cli.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "pomset/codes.hpp"
#include "pomset/error.hpp"
#include "pomset/oracle.hpp"
#include "pomset/problem.hpp"

namespace pomset::cli {

namespace {

// "#"-prefixed human lines first, then key=value lines.
class Report {
  public:
    void say(const std::string& line) { human_.push_back(line); }
    template <typename T>
    void put(const std::string& key, const T& value) {
        std::ostringstream os;
        os << std::boolalpha << value;
        machine_.push_back(key + "=" + os.str());
    }
    void raw(std::string text) { raw_ = std::move(text); }
    void flush(std::ostream& out, bool machine_only) const {
        if (raw_) {
            out << *raw_;
            return;
        }
        if (!machine_only)
            for (const auto& h : human_) out << "# " << h << "\n";
        for (const auto& m : machine_) out << m << "\n";
    }

  private:
    std::vector<std::string> human_;
    std::vector<std::string> machine_;
    std::optional<std::string> raw_;
};

struct Options {
    std::string file;
    std::uint64_t budget = kDefaultScanBudget;
    std::uint64_t seed = 1;
    bool machine = false;
    std::string vector, u, v, ideal, center, probe;
    std::optional<int> radius, cardinality, size;
    bool closed_form = false, list = false;
    std::string mode;
    std::uint64_t samples = 100'000;
    std::uint64_t triple_budget = 100'000;
};

std::string counts_text(const std::vector<int>& counts) {
    std::string s = "[";
    for (size_t i = 0; i < counts.size(); ++i) s += (i ? "," : "") + std::to_string(counts[i]);
    return s + "]";
}

std::string ideal_text(const Ideal& i) { return i.notation() + " " + counts_text(i.counts().counts()); }

std::string set_text(const std::vector<int>& elements) {
    std::string s = "{";
    for (size_t i = 0; i < elements.size(); ++i) s += (i ? "," : "") + std::to_string(elements[i] + 1);
    return s + "}";
}

Vector vector_arg(const Space& space, const std::string& text, const char* flag) {
    if (text.empty()) throw InvalidInput(std::string("missing ") + flag);
    const auto raw = parse_int_list(text);
    return space.make_vector(raw);
}

Ideal ideal_arg(const ProblemFile& p, const std::string& text) {
    if (text.empty()) return p.file_ideal();
    std::vector<int> counts;
    for (long long c : parse_int_list(text)) counts.push_back(static_cast<int>(c));
    if (static_cast<int>(counts.size()) != p.ground_size)
        throw ShapeError("ideal has " + std::to_string(counts.size()) + " counts, expected " + std::to_string(p.ground_size));
    return Ideal::of(p.pomset(), Mset(counts, p.modulus / 2));
}

int radius_arg(const ProblemFile& p, const Options& o) {
    if (o.radius) return *o.radius;
    if (p.radius) return *p.radius;
    throw InvalidInput("missing --radius");
}

// Ball given by --ideal, else --radius, else the file's ideal, else its radius.
std::variant<int, Ideal> ball_arg(const ProblemFile& p, const Options& o) {
    if (!o.ideal.empty()) return ideal_arg(p, o.ideal);
    if (o.radius) return *o.radius;
    if (p.ideal) return p.file_ideal();
    if (p.radius) return *p.radius;
    throw InvalidInput("give --ideal or --radius");
}

int cover_result(Report& r, const Code& code, const CoverReport& cover, const char* key, const std::string& what) {
    r.say(std::string(cover.holds ? "" : "not ") + what);
    r.put(key, cover.holds);
    r.put("code_size", code.size());
    r.put("ball_size", cover.ball_size);
    if (cover.witness) {
        r.say("first uncovered or multiply covered vector " + format_vector(*cover.witness) + " lies in " +
              std::to_string(cover.witness_multiplicity) + " balls");
        r.put("witness", format_vector(*cover.witness));
        r.put("witness_balls", cover.witness_multiplicity);
    }
    return cover.holds ? kTrue : kFalse;
}

void probe(Report& r, const Code& code, const std::string& text, const std::variant<int, Ideal>& shape) {
    if (text.empty()) return;
    const Vector v = vector_arg(code.space(), text, "--probe");
    const auto centers = std::holds_alternative<int>(shape)
                             ? radius_balls_containing(code, v, std::get<int>(shape))
                             : ideal_balls_containing(code, v, std::get<Ideal>(shape).counts());
    std::string list;
    for (const auto& c : centers) list += (list.empty() ? "" : " ") + format_vector(c);
    r.say(format_vector(v) + " lies in " + std::to_string(centers.size()) + " balls");
    r.put("probe", format_vector(v));
    r.put("probe_balls", centers.size());
    r.put("probe_centers", list);
}

int execute(const std::string& command, const Options& o, Report& r) {
    const ProblemFile p = ProblemFile::load(o.file);
    const Space space = p.space();
    r.say(space.describe());

    if (command == "canonical") {
        r.raw(p.canonical());
        return kTrue;
    }
    if (command == "weight") {
        const Vector v = vector_arg(space, o.vector, "--vector");
        const Ideal gen = ideal_generated(space.pomset(), space.support(v));
        r.say("w(" + format_vector(v) + ") = " + std::to_string(space.weight(v)));
        r.put("weight", space.weight(v));
        r.put("support", space.support(v).notation());
        r.put("ideal", ideal_text(gen));
        return kTrue;
    }
    if (command == "distance") {
        const Vector u = vector_arg(space, o.u, "--u"), v = vector_arg(space, o.v, "--v");
        r.put("distance", space.distance(u, v));
        return kTrue;
    }
    if (command == "ideals") {
        if (!o.cardinality) throw InvalidInput("missing --cardinality");
        const auto ideals = enumerate_ideals(space.pomset(), *o.cardinality);
        r.say(std::to_string(ideals.size()) + " ideals of cardinality " + std::to_string(*o.cardinality));
        r.put("count", ideals.size());
        for (const auto& i : ideals) r.put("ideal", ideal_text(i));
        return kTrue;
    }
    if (command == "downsets") {
        if (!o.size) throw InvalidInput("missing --size");
        const auto sets = enumerate_root_downsets(space.pomset(), *o.size);
        r.put("count", sets.size());
        for (const auto& s : sets) r.put("downset", set_text(s));
        return kTrue;
    }
    if (command == "ball-size") {
        const auto shape = ball_arg(p, o);
        const BallSpec ball{space.zero(), shape};
        if (auto* i = std::get_if<Ideal>(&shape)) r.put("ideal", ideal_text(*i));
        else r.put("radius", std::get<int>(shape));
        r.put("ball_size", ball.size(space));
        return kTrue;
    }
    if (command == "sphere-size") {
        const Ideal i = ideal_arg(p, o.ideal);
        r.put("ideal", ideal_text(i));
        r.put("sphere_size", ideal_sphere_size(space, i));
        return kTrue;
    }
    if (command == "partition") {
        const Ideal i = ideal_arg(p, o.ideal);
        r.put("ideal", ideal_text(i));
        try {
            const auto count = partition_center_count(space, i);
            r.put("partition", "possible");
            r.put("center_count", count);
            r.put("ball_size", ideal_ball_size(space, i));
            if (o.list)
                for (const auto& c : partition_centers(space, i, o.budget)) r.put("center", format_vector(c));
            return kTrue;
        } catch (const PartitionImpossible& e) {
            r.say(e.what());
            r.put("partition", "impossible");
            return kFalse;
        }
    }

    // Everything below needs a code.
    const Code code = p.code(o.budget);
    r.say("code with " + std::to_string(code.size()) + " words" + (code.is_linear() ? ", linear" : ""));

    if (command == "check-perfect") {
        const auto shape = ball_arg(p, o);
        int rc = 0;
        if (auto* i = std::get_if<Ideal>(&shape)) {
            r.put("ideal", ideal_text(*i));
            rc = cover_result(r, code, check_ideal_perfect(code, *i, o.budget), "perfect", i->notation() + "-perfect");
        } else {
            const int radius = std::get<int>(shape);
            r.put("radius", radius);
            rc = cover_result(r, code, check_radius_perfect(code, radius, o.budget), "perfect",
                              std::to_string(radius) + "-perfect");
        }
        probe(r, code, o.probe, shape);
        return rc;
    }
    if (command == "check-error-correcting") {
        const int radius = radius_arg(p, o);
        r.put("radius", radius);
        const int rc = cover_result(r, code, check_error_correcting(code, radius, o.budget), "error_correcting",
                                    std::to_string(radius) + "-error-correcting");
        probe(r, code, o.probe, radius);
        return rc;
    }
    if (command == "check-mds" || command == "singleton") {
        const SingletonReport s = singleton_report(code);
        if (command == "check-mds") {
            r.say(std::string("MDS: ") + (s.attained() ? "true" : "false") + ", d=" + std::to_string(s.distance) +
                  ", rhs=" + std::to_string(s.rhs));
            r.put("mds", s.attained());
        }
        r.put("K", code.size());
        r.put("d", s.distance);
        r.put("root_size", s.root_size);
        r.put("lhs", s.lhs);
        r.put("rhs", s.rhs);
        if (command == "singleton") {
            r.put("attained", s.attained());
            for (const auto& m : s.maximizers) r.put("maximizer", set_text(m));
            return kTrue;
        }
        return s.attained() ? kTrue : kFalse;
    }
    if (command == "dual") {
        const Code dual = dual_code(code, std::max<std::uint64_t>(o.budget, kDefaultAnnihilatorBudget));
        r.put("dual_size", dual.size());
        if (dual.size() >= 2) r.put("dual_distance", min_distance(dual));
        if (dual.size() <= 256)
            for (const auto& w : dual.words()) r.put("dual_word", format_vector(w));
        if (!o.ideal.empty() || p.ideal) {
            const Ideal i = ideal_arg(p, o.ideal);
            const Pomset reversed = dual_pomset(space.pomset());
            const Ideal comp = ideal_complement(space.pomset(), i);
            const Code in_dual = dual.in_space(space.with_pomset(reversed));
            const bool perfect = is_ideal_perfect(in_dual, comp, o.budget);
            r.say("dual code is " + std::string(perfect ? "" : "not ") + comp.notation() + "-perfect in the dual pomset");
            r.put("complement_ideal", ideal_text(comp));
            r.put("dual_perfect", perfect);
        }
        return kTrue;
    }
    if (command == "weight-dist") {
        const WeightDistribution dist = weight_distribution(code);
        for (int w = 0; w < static_cast<int>(dist.counts.size()); ++w) r.put("A_" + std::to_string(w), dist.at(w));
        r.put("total", dist.total());
        if (!o.closed_form) return kTrue;
        if (!space.pomset().is_chain()) throw Unsupported("closed form needs a chain pomset");
        const auto& lab = space.labeling();
        if (std::adjacent_find(lab.begin(), lab.end(), std::not_equal_to<>()) != lab.end())
            throw Unsupported("closed form needs equal block sizes");
        if (!code.is_linear()) throw Unsupported("closed form needs a linear code");
        const int k = ceil_log(code.size(), space.modulus());
        if (checked_pow(static_cast<std::uint64_t>(space.modulus()), k) != code.size())
            throw Unsupported("closed form needs K = m^k");
        if (!is_mds(code)) {
            r.say("code is not MDS; closed form does not apply");
            r.put("closed_form_match", false);
            return kFalse;
        }
        const WeightDistribution closed = mds_chain_weight_distribution(space.length(), k, lab.front(), space.modulus(),
                                                                        space.block_count(), min_distance(code));
        for (int w = 0; w < static_cast<int>(closed.counts.size()); ++w)
            r.put("closed_A_" + std::to_string(w), closed.at(w));
        r.put("closed_form_match", closed == dist);
        return closed == dist ? kTrue : kFalse;
    }
    if (command == "intersect") {
        const Ideal i = ideal_arg(p, o.ideal);
        const Vector x = o.center.empty() ? space.zero() : vector_arg(space, o.center, "--center");
        r.put("ideal", ideal_text(i));
        r.put("center", format_vector(x));
        r.put("intersection", ball_code_intersection(code, i.counts(), x));
        return kTrue;
    }
    if (command == "block-threshold") {
        const BlockThreshold b = block_dependency_threshold(code);
        r.put("threshold", b.threshold);
        r.put("codeword_minimum", b.codeword_minimum);
        r.put("consistent", b.consistent());
        for (const auto& w : b.witnesses) r.put("dependent_downset", set_text(w));
        return b.consistent() ? kTrue : kFalse;
    }
    throw InvalidInput("unknown command " + command);
}

int execute_oracle(const Options& o, Report& r) {
    const ProblemFile p = ProblemFile::load(o.file);
    const Space space = p.space();
    r.say(space.describe());
    if (o.mode == "census") {
        const auto c = oracle::weight_census(space, o.budget);
        r.put("total", c.total);
        for (size_t w = 0; w < c.by_weight.size(); ++w) r.put("census_" + std::to_string(w), c.by_weight[w]);
        for (const auto& [counts, n] : c.by_ideal) r.put("sphere" + counts_text(counts), n);
        r.put("telescopes", c.telescopes());
        return c.telescopes() ? kTrue : kFalse;
    }
    if (o.mode == "metric") {
        const auto m = oracle::verify_metric(space, o.triple_budget, o.seed, o.samples);
        r.put("exhaustive", m.exhaustive);
        r.put("triples", m.triples);
        r.put("passed", m.passed);
        if (!m.passed) {
            r.put("failure", m.failure);
            for (const auto& w : m.witness) r.put("witness", format_vector(w));
        }
        return m.passed ? kTrue : kFalse;
    }
    if (o.mode == "suite") {
        const auto s = oracle::verify_formula_suite(space, oracle::FormulaSet::library(), o.budget);
        r.put("partial", s.partial);
        for (const auto& c : s.checks) {
            r.put("check." + c.name, std::string(c.passed ? "pass" : "fail") + " cases=" + std::to_string(c.cases));
            if (!c.passed) r.put("witness." + c.name, c.witness);
        }
        r.put("passed", s.passed);
        if (s.checks.empty() && s.partial) return kBudgetExceeded;
        return s.passed ? kTrue : kFalse;
    }
    throw InvalidInput("oracle mode must be census, metric or suite");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Pomset block metric toolkit over Z_m"};
    app.require_subcommand(1);
    Options o;

    auto add = [&](const std::string& name, const std::string& about) {
        CLI::App* sub = app.add_subcommand(name, about);
        sub->add_option("file", o.file, "problem file (JSON)")->required();
        sub->add_option("--budget", o.budget, "scan budget");
        sub->add_option("--seed", o.seed, "random seed");
        sub->add_flag("--machine", o.machine, "key=value lines only");
        return sub;
    };
    add("canonical", "print the canonical form of the problem file");
    add("weight", "pomset weight of a vector")->add_option("--vector", o.vector)->required();
    {
        auto* s = add("distance", "distance between two vectors");
        s->add_option("--u", o.u)->required();
        s->add_option("--v", o.v)->required();
    }
    add("ideals", "ideals of a given cardinality")->add_option("--cardinality", o.cardinality)->required();
    add("downsets", "root down-sets of a given size")->add_option("--size", o.size)->required();
    {
        auto* s = add("ball-size", "ball cardinality");
        s->add_option("--ideal", o.ideal);
        s->add_option("--radius", o.radius);
    }
    add("sphere-size", "I-sphere cardinality")->add_option("--ideal", o.ideal);
    {
        auto* s = add("partition", "translate centers tiling the space by I-balls");
        s->add_option("--ideal", o.ideal);
        s->add_flag("--list", o.list, "print the centers");
    }
    {
        auto* s = add("check-perfect", "I-perfect or r-perfect check");
        s->add_option("--ideal", o.ideal);
        s->add_option("--radius", o.radius);
        s->add_option("--probe", o.probe, "report the balls containing this vector");
    }
    {
        auto* s = add("check-error-correcting", "r-error-correction check");
        s->add_option("--radius", o.radius);
        s->add_option("--probe", o.probe, "report the balls containing this vector");
    }
    add("check-mds", "Singleton bound attainment");
    add("singleton", "Singleton bound report");
    add("dual", "dual code")->add_option("--ideal", o.ideal, "also check I^c-perfectness in the dual pomset");
    add("weight-dist", "weight distribution")->add_flag("--closed-form", o.closed_form, "compare with the MDS chain formula");
    {
        auto* s = add("intersect", "|B_I(x) ∩ C|");
        s->add_option("--ideal", o.ideal);
        s->add_option("--center", o.center);
    }
    add("block-threshold", "smallest dependent down-set of parity-check blocks");
    {
        auto* s = app.add_subcommand("oracle", "brute-force certification");
        s->add_option("mode", o.mode, "census | metric | suite")->required()->check(CLI::IsMember({"census", "metric", "suite"}));
        s->add_option("file", o.file, "problem file (JSON)")->required();
        s->add_option("--budget", o.budget, "scan budget");
        s->add_option("--seed", o.seed, "random seed");
        s->add_option("--samples", o.samples, "sampled triples for the metric check");
        s->add_option("--triple-budget", o.triple_budget, "exhaustive metric check up to this many triples");
        s->add_flag("--machine", o.machine, "key=value lines only");
    }

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(std::move(reversed));
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kTrue;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return kInputError;
    }

    CLI::App* chosen = app.get_subcommands().front();
    Report report;
    int rc = kTrue;
    try {
        rc = chosen->get_name() == "oracle" ? execute_oracle(o, report) : execute(chosen->get_name(), o, report);
    } catch (const BudgetExceeded& e) {
        err << "budget exceeded: " << e.what() << "\n";
        return kBudgetExceeded;
    } catch (const InternalInconsistency& e) {
        err << "inconsistency: " << e.what() << "\n";
        return kFalse;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kInputError;
    } catch (const std::out_of_range& e) {
        err << "error: " << e.what() << "\n";
        return kInputError;
    }
    report.flush(out, o.machine);
    return rc;
}

}  // namespace pomset::cli
