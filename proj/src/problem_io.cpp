#include "antipodal/problem_io.hpp"

#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace antipodal {

namespace {

using nlohmann::json;

std::string at(const std::string& base, std::size_t i) { return base + "[" + std::to_string(i) + "]"; }

const json& member(const json& obj, const std::string& path, const char* key)
{
    const std::string where = path.empty() ? key : path + "." + key;
    if (!obj.is_object() || !obj.contains(key))
        throw ProblemError(where, "missing field");
    return obj.at(key);
}

double number(const json& v, const std::string& path)
{
    if (!v.is_number())
        throw ProblemError(path, "expected a number");
    const double d = v.get<double>();
    if (!std::isfinite(d))
        throw ProblemError(path, "expected a finite number");
    return d;
}

Vector vector_of(const json& v, const std::string& path, std::size_t n)
{
    if (!v.is_array())
        throw ProblemError(path, "expected an array of numbers");
    if (v.size() != n)
        throw ProblemError(path, "expected " + std::to_string(n) + " entries, got " + std::to_string(v.size()));
    Vector out(n);
    for (std::size_t i = 0; i < n; ++i)
        out[i] = number(v[i], at(path, i));
    return out;
}

std::vector<Vector> vector_list(const json& v, const std::string& path, std::size_t n)
{
    if (!v.is_array() || v.empty())
        throw ProblemError(path, "expected a non-empty array of points");
    std::vector<Vector> out;
    for (std::size_t i = 0; i < v.size(); ++i)
        out.push_back(vector_of(v[i], at(path, i), n));
    return out;
}

ConvexBody parse_body(const json& b, const std::string& path, int n)
{
    const auto dim = static_cast<std::size_t>(n);
    const json& type = member(b, path, "type");
    if (!type.is_string())
        throw ProblemError(path + ".type", "expected a string");
    const std::string t = type.get<std::string>();

    ConvexBody body = [&] {
        if (t == "polytope")
            return ConvexBody::polytope(vector_list(member(b, path, "vertices"), path + ".vertices", dim));
        if (t == "points")
            return ConvexBody::polytope(vector_list(member(b, path, "points"), path + ".points", dim));
        if (t == "ball") {
            Vector c = vector_of(member(b, path, "center"), path + ".center", dim);
            const double r = number(member(b, path, "radius"), path + ".radius");
            if (!(r > 0.0))
                throw ProblemError(path + ".radius", "must be positive");
            return ConvexBody::ball(std::move(c), r);
        }
        throw ProblemError(path + ".type", "unknown body type \"" + t + "\"");
    }();

    if (interior_dimension(body) < n)
        throw ProblemError(path, "body is flat: affine dimension " + std::to_string(interior_dimension(body)) +
                                     " < " + std::to_string(n));
    return body;
}

Objective parse_objective(const json& o, const std::string& path, int n)
{
    const json& type = member(o, path, "type");
    if (!type.is_string())
        throw ProblemError(path + ".type", "expected a string");
    const std::string t = type.get<std::string>();
    if (t == "inner")
        return Objective::inner();
    if (t == "bilinear") {
        const auto dim = static_cast<std::size_t>(n);
        const json& rows = member(o, path, "Q");
        if (!rows.is_array() || rows.size() != dim)
            throw ProblemError(path + ".Q", "expected " + std::to_string(n) + " rows");
        Matrix q(dim);
        for (std::size_t r = 0; r < dim; ++r) {
            const Vector row = vector_of(rows[r], at(path + ".Q", r), dim);
            for (std::size_t c = 0; c < dim; ++c)
                q(r, c) = row[c];
        }
        if (!(hadamard_ratio(q) > Objective::kSingularityThreshold))
            throw ProblemError(path + ".Q", "matrix is singular");
        return Objective::bilinear(std::move(q));
    }
    throw ProblemError(path + ".type", "unknown objective type \"" + t + "\"");
}

std::string fnv1a_hex(std::string_view s)
{
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char ch : s) {
        h ^= ch;
        h *= 0x100000001b3ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

} // namespace

Problem parse_problem_text(std::string_view text)
{
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ProblemError("", std::string("malformed JSON: ") + e.what());
    }
    if (!doc.is_object())
        throw ProblemError("", "top level must be an object");

    const json& dim = member(doc, "", "dimension");
    if (!dim.is_number_integer() || dim.get<long long>() < 1)
        throw ProblemError("dimension", "expected a positive integer");
    const int n = static_cast<int>(dim.get<long long>());

    const json& bodies = member(doc, "", "bodies");
    const json& objectives = member(doc, "", "objectives");
    if (!bodies.is_array())
        throw ProblemError("bodies", "expected an array");
    if (!objectives.is_array())
        throw ProblemError("objectives", "expected an array");
    if (bodies.size() != static_cast<std::size_t>(n))
        throw ProblemError("bodies", "expected " + std::to_string(n) + " bodies, got " +
                                         std::to_string(bodies.size()));
    if (objectives.size() != static_cast<std::size_t>(n))
        throw ProblemError("objectives", "expected " + std::to_string(n) + " objectives, got " +
                                             std::to_string(objectives.size()));

    std::vector<ConvexBody> parsed_bodies;
    std::vector<Objective> parsed_objectives;
    for (std::size_t i = 0; i < bodies.size(); ++i) {
        try {
            parsed_bodies.push_back(parse_body(bodies[i], at("bodies", i), n));
        } catch (const ProblemError&) {
            throw;
        } catch (const Error& e) {
            throw ProblemError(at("bodies", i), e.what());
        }
    }
    for (std::size_t i = 0; i < objectives.size(); ++i)
        parsed_objectives.push_back(parse_objective(objectives[i], at("objectives", i), n));

    EpsilonPolicy policy = EpsilonPolicy::automatic();
    if (doc.contains("epsilon")) {
        const json& e = doc.at("epsilon");
        if (e.is_string()) {
            if (e.get<std::string>() != "auto")
                throw ProblemError("epsilon", "expected \"auto\" or a number");
        } else {
            const double eps = number(e, "epsilon");
            if (!(eps > 0.0 && eps < 1.0))
                throw ProblemError("epsilon", "must lie in (0, 1)");
            policy = EpsilonPolicy::fixed_value(eps);
        }
    }

    std::uint64_t seed = 0;
    if (doc.contains("seed")) {
        const json& s = doc.at("seed");
        if (!s.is_number_integer() || s.get<long long>() < 0)
            throw ProblemError("seed", "expected a non-negative integer");
        seed = s.get<std::uint64_t>();
    }

    Instance inst(std::move(parsed_bodies), std::move(parsed_objectives), policy);
    if (policy.fixed && !epsilon_admissible(*policy.fixed, inst.norm_bound()))
        throw ProblemError("epsilon", "too large for these bodies: the cap must miss every half-space");

    return Problem{std::move(inst), seed, fnv1a_hex(doc.dump())};
}

Problem parse_problem(const std::filesystem::path& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw ProblemError("", "cannot open " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_problem_text(buf.str());
}

} // namespace antipodal
