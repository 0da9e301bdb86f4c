#include "pomset/problem.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "pomset/error.hpp"

namespace pomset {

namespace {

using nlohmann::json;

const json& require(const json& obj, const char* key, const std::string& where) {
    if (!obj.is_object() || !obj.contains(key)) throw InvalidInput(where + ": missing \"" + key + "\"");
    return obj.at(key);
}

void only_keys(const json& obj, std::initializer_list<const char*> allowed, const std::string& where) {
    for (const auto& [key, _] : obj.items())
        if (std::none_of(allowed.begin(), allowed.end(), [&](const char* a) { return key == a; }))
            throw InvalidInput(where + ": unknown key \"" + key + "\"");
}

long long as_int(const json& j, const std::string& where) {
    if (!j.is_number_integer()) throw InvalidInput(where + ": expected an integer");
    return j.get<long long>();
}

std::vector<long long> int_row(const json& j, const std::string& where) {
    if (!j.is_array()) throw InvalidInput(where + ": expected an array of integers");
    std::vector<long long> out;
    for (const auto& x : j) out.push_back(as_int(x, where));
    return out;
}

std::vector<std::vector<long long>> int_rows(const json& j, const std::string& where) {
    if (!j.is_array()) throw InvalidInput(where + ": expected an array of arrays");
    std::vector<std::vector<long long>> out;
    for (const auto& row : j) out.push_back(int_row(row, where));
    return out;
}

int small(long long v, const std::string& where) {
    if (v < -1'000'000'000LL || v > 1'000'000'000LL) throw InvalidInput(where + ": value out of range");
    return static_cast<int>(v);
}

std::string row_text(const std::vector<int>& row) {
    std::string s = "[";
    for (size_t i = 0; i < row.size(); ++i) s += (i ? ", " : "") + std::to_string(row[i]);
    return s + "]";
}

std::string rows_text(const std::vector<std::vector<int>>& rows, const std::string& indent) {
    if (rows.empty()) return "[]";
    std::string s = "[\n";
    for (size_t i = 0; i < rows.size(); ++i) s += indent + "  " + row_text(rows[i]) + (i + 1 < rows.size() ? ",\n" : "\n");
    return s + indent + "]";
}

}  // namespace

std::vector<long long> parse_int_list(const std::string& text) {
    std::string t = text;
    std::replace_if(t.begin(), t.end(), [](char c) { return c == '(' || c == ')' || c == '[' || c == ']' || c == ','; }, ' ');
    std::istringstream in(t);
    std::vector<long long> out;
    std::string tok;
    while (in >> tok) {
        size_t used = 0;
        long long v = 0;
        try {
            v = std::stoll(tok, &used);
        } catch (const std::exception&) {
            throw InvalidInput("not an integer list: \"" + text + "\"");
        }
        if (used != tok.size()) throw InvalidInput("not an integer list: \"" + text + "\"");
        out.push_back(v);
    }
    if (out.empty()) throw InvalidInput("empty integer list: \"" + text + "\"");
    return out;
}

ProblemFile ProblemFile::parse(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw InvalidInput(std::string("malformed JSON: ") + e.what());
    }
    if (!doc.is_object()) throw InvalidInput("problem file must be a JSON object");
    only_keys(doc, {"m", "pomset", "labeling", "code", "ideal", "radius", "description"}, "problem");

    ProblemFile p;
    p.modulus = small(as_int(require(doc, "m", "problem"), "m"), "m");
    if (p.modulus < 2) throw InvalidInput("m must be at least 2");

    const json& pj = require(doc, "pomset", "problem");
    only_keys(pj, {"s", "relations"}, "pomset");
    p.ground_size = small(as_int(require(pj, "s", "pomset"), "pomset.s"), "pomset.s");
    if (pj.contains("relations"))
        for (const auto& r : int_rows(pj.at("relations"), "pomset.relations")) {
            if (r.size() != 2) throw InvalidInput("pomset.relations: each relation is a pair [a, b]");
            const long long a = r[0], b = r[1];
            if (a < 1 || b < 1 || a > p.ground_size || b > p.ground_size)
                throw InvalidInput("pomset.relations: element out of range 1.." + std::to_string(p.ground_size));
            p.relations.emplace_back(static_cast<int>(a - 1), static_cast<int>(b - 1));
        }

    for (long long k : int_row(require(doc, "labeling", "problem"), "labeling")) p.labeling.push_back(small(k, "labeling"));

    if (doc.contains("code")) {
        const json& cj = doc.at("code");
        only_keys(cj, {"codewords", "generator"}, "code");
        if (cj.contains("codewords") == cj.contains("generator"))
            throw InvalidInput("code: give exactly one of \"codewords\" or \"generator\"");
        std::vector<std::vector<int>> rows;
        for (const auto& r : int_rows(cj.contains("codewords") ? cj.at("codewords") : cj.at("generator"), "code")) {
            std::vector<int> row;
            for (long long x : r) row.push_back(static_cast<int>(((x % p.modulus) + p.modulus) % p.modulus));
            rows.push_back(std::move(row));
        }
        if (cj.contains("codewords")) {
            std::sort(rows.begin(), rows.end());
            rows.erase(std::unique(rows.begin(), rows.end()), rows.end());
            p.codewords = std::move(rows);
        } else {
            p.generator = std::move(rows);
        }
    }
    if (doc.contains("ideal")) {
        only_keys(doc.at("ideal"), {"counts"}, "ideal");
        std::vector<int> counts;
        for (long long c : int_row(require(doc.at("ideal"), "counts", "ideal"), "ideal.counts"))
            counts.push_back(small(c, "ideal.counts"));
        p.ideal = std::move(counts);
    }
    if (doc.contains("radius")) p.radius = small(as_int(doc.at("radius"), "radius"), "radius");
    if (doc.contains("description")) {
        if (!doc.at("description").is_string()) throw InvalidInput("description must be a string");
        p.description = doc.at("description").get<std::string>();
    }

    // Cross-shape validation.
    const Space space = p.space();
    if (p.codewords) {
        if (p.codewords->empty()) throw InvalidInput("code: empty codeword list");
        for (const auto& w : *p.codewords) space.check(w);
    }
    if (p.generator)
        for (const auto& r : *p.generator)
            if (static_cast<int>(r.size()) != space.length())
                throw ShapeError("generator row has length " + std::to_string(r.size()) + ", expected " +
                                 std::to_string(space.length()));
    if (p.ideal) (void)p.file_ideal();
    if (p.radius && (*p.radius < 0 || *p.radius > space.max_weight()))
        throw InvalidInput("radius must be in 0.." + std::to_string(space.max_weight()));
    return p;
}

ProblemFile ProblemFile::load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InvalidInput("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse(buf.str());
}

Pomset ProblemFile::pomset() const { return Pomset(ground_size, modulus / 2, relations); }

Space ProblemFile::space() const { return Space(modulus, pomset(), labeling); }

Code ProblemFile::code(std::uint64_t budget) const {
    if (codewords) return Code::from_words(space(), *codewords, budget);
    if (generator) return Code::generated(space(), *generator, budget);
    throw InvalidInput("problem has no code");
}

Ideal ProblemFile::file_ideal() const {
    if (!ideal) throw InvalidInput("problem has no ideal");
    if (static_cast<int>(ideal->size()) != ground_size)
        throw ShapeError("ideal has " + std::to_string(ideal->size()) + " counts, expected " + std::to_string(ground_size));
    return Ideal::of(pomset(), Mset(*ideal, modulus / 2));
}

std::string ProblemFile::canonical() const {
    std::vector<std::vector<int>> covers;
    for (auto [a, b] : pomset().covering_relations()) covers.push_back({a + 1, b + 1});
    std::ostringstream os;
    os << "{\n";
    if (description) os << "  \"description\": " << json(*description).dump() << ",\n";
    os << "  \"m\": " << modulus << ",\n";
    os << "  \"pomset\": {\"s\": " << ground_size << ", \"relations\": " << rows_text(covers, "  ") << "},\n";
    os << "  \"labeling\": " << row_text(labeling);
    if (codewords) os << ",\n  \"code\": {\"codewords\": " << rows_text(*codewords, "  ") << "}";
    if (generator) os << ",\n  \"code\": {\"generator\": " << rows_text(*generator, "  ") << "}";
    if (ideal) os << ",\n  \"ideal\": {\"counts\": " << row_text(*ideal) << "}";
    if (radius) os << ",\n  \"radius\": " << *radius;
    os << "\n}\n";
    return os.str();
}

}  // namespace pomset
