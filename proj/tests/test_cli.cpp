#include "antipodal/commands.hpp"
#include "antipodal/problem_io.hpp"
#include "antipodal/solver.hpp"

#include <doctest.h>
#include <json.hpp>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

using namespace antipodal;
using nlohmann::json;
namespace fs = std::filesystem;

namespace {

const fs::path kExample1 = fs::path(ANTIPODAL_PROBLEMS_DIR) / "example1.json";

fs::path write_temp(const std::string& name, const std::string& text)
{
    const fs::path dir = fs::temp_directory_path() / "antipodal_cli_tests";
    fs::create_directories(dir);
    const fs::path p = dir / name;
    std::ofstream(p) << text;
    return p;
}

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run cli(std::vector<std::string> args)
{
    args.insert(args.begin(), "antipodal");
    std::vector<const char*> argv;
    for (const std::string& a : args)
        argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

std::string field_of(const std::string& text)
{
    try {
        parse_problem_text(text);
    } catch (const ProblemError& e) {
        return e.field();
    }
    return "<accepted>";
}

const char* kTwoBalls = R"({"dimension":2,
  "bodies":[{"type":"ball","center":[0,0],"radius":1},{"type":"points","points":[[0,0],[1,0],[0,1],[0.2,0.2]]}],
  "objectives":[{"type":"bilinear","Q":[[2,1],[0,1]]},{"type":"inner"}],
  "seed":5})";

} // namespace

TEST_CASE("parsing the interval example")
{
    const Problem p = parse_problem(kExample1);
    CHECK(p.instance.n() == 1);
    CHECK(p.instance.bodies()[0].is_polytope());
    CHECK(p.instance.objectives()[0].is_inner());
    CHECK_FALSE(p.instance.epsilon_policy().fixed.has_value());
    CHECK(p.seed == 0);
    CHECK(p.digest.size() == 16);
    CHECK(parse_problem(kExample1).digest == p.digest);

    const Problem q = parse_problem_text(kTwoBalls);
    CHECK(q.seed == 5);
    CHECK(q.instance.bodies()[1].as_polytope().vertices.size() == 4);
    CHECK(q.instance.objectives()[0].is_bilinear());
    CHECK(q.digest != p.digest);
}

TEST_CASE("problem rejections carry a field path")
{
    CHECK(field_of(R"({"dimension":2,"bodies":[{"type":"ball","center":[0,0],"radius":1},{"type":"ball","center":[0,0],"radius":1}],
        "objectives":[{"type":"bilinear","Q":[[1,2],[2,4]]},{"type":"inner"}]})") == "objectives[0].Q");
    CHECK(field_of(R"({"dimension":2,"bodies":[{"type":"ball","center":[0,0],"radius":1},{"type":"ball","center":[0,0],"radius":1}],
        "objectives":[{"type":"inner"}]})") == "objectives");
    CHECK(field_of(R"({"dimension":2,"bodies":[{"type":"polytope","vertices":[[0,0],[1,1],[2,2]]},{"type":"ball","center":[0,0],"radius":1}],
        "objectives":[{"type":"inner"},{"type":"inner"}]})") == "bodies[0]");
    CHECK(field_of(R"({"dimension":2,"bodies":[{"type":"ball","center":[0,0],"radius":1},{"type":"ball","center":[0,0],"radius":0}],
        "objectives":[{"type":"inner"},{"type":"inner"}]})") == "bodies[1].radius");
    CHECK(field_of(R"({"dimension":1,"bodies":[{"type":"ball","center":[0,0],"radius":1}],"objectives":[{"type":"inner"}]})") ==
          "bodies[0].center");
    CHECK(field_of(R"({"dimension":1,"bodies":[{"type":"cube"}],"objectives":[{"type":"inner"}]})") == "bodies[0].type");
    CHECK(field_of(R"({"dimension":1,"bodies":[{"type":"polytope","vertices":[[-1],[1]]}],"objectives":[{"type":"inner"}],"epsilon":0.9})") ==
          "epsilon");
    CHECK(field_of(R"({"dimension":1,"bodies":[{"type":"polytope","vertices":[[-1],[1]]}],"objectives":[{"type":"inner"}],"epsilon":"big"})") ==
          "epsilon");
    CHECK(field_of(R"({"dimension":1,"bodies":[{"type":"polytope","vertices":[[-1],[1]]}],"objectives":[{"type":"inner"}],"seed":-3})") ==
          "seed");
    CHECK(field_of(R"({"dimension":0,"bodies":[],"objectives":[]})") == "dimension");
    CHECK(field_of("{not json") == "");
    CHECK(field_of(R"({"dimension":1,"bodies":[{"type":"polytope","vertices":[[-1],[1]]}],"objectives":[{"type":"inner"}],"epsilon":0.1})") ==
          "<accepted>");
}

TEST_CASE("eval")
{
    const Run north = cli({"eval", kExample1.string(), "--point", "0,1"});
    REQUIRE(north.code == 0);
    const json j = json::parse(north.out);
    CHECK(j["phi"][0].get<double>() == -1.0);
    CHECK(j["epsilon"].get<double>() == 0.05);
    CHECK(j["tool"] == "antipodal");

    const Run east = cli({"eval", kExample1.string(), "--point", "1,0"});
    REQUIRE(east.code == 0);
    CHECK(json::parse(east.out)["psi"][0].get<double>() == 1.0);
    CHECK(json::parse(east.out)["odd_gap"][0].get<double>() == 0.0);

    CHECK(cli({"eval", kExample1.string(), "--point", "0.6,0.8"}).out ==
          cli({"eval", kExample1.string(), "--point", "0.6,0.8"}).out);

    const Run nearly = cli({"eval", kExample1.string(), "--point", "0.6000001,0.8"});
    CHECK(nearly.code == 0);
    CHECK(cli({"eval", kExample1.string(), "--point", "0.7,0.8"}).code == 2);
    CHECK(cli({"eval", kExample1.string(), "--point", "1,0,0"}).code == 2);
    CHECK(cli({"eval", kExample1.string(), "--point", "a,b"}).code == 2);
    CHECK(cli({"eval", "/nonexistent/problem.json", "--point", "1,0"}).code == 2);
    CHECK(cli({"eval", kExample1.string(), "--point", "-1,0"}).code == 0);
}

TEST_CASE("sweep")
{
    const Run r = cli({"sweep", kExample1.string(), "--steps", "8"});
    REQUIRE(r.code == 0);
    std::istringstream in(r.out);
    std::string line;
    std::getline(in, line);
    CHECK(line == "theta,psi_1,phi_1,gap_1");
    int rows = 0;
    double prev = -INFINITY;
    while (std::getline(in, line)) {
        const double theta = std::stod(line.substr(0, line.find(',')));
        CHECK(theta > prev);
        prev = theta;
        const double psi1 = std::stod(line.substr(line.find(',') + 1));
        CHECK(std::fabs(psi1 - example1_psi(theta)) <= 1e-9);
        if (rows == 3) // theta = pi/2
            CHECK(psi1 == 0.0);
        ++rows;
    }
    CHECK(rows == 9);

    const fs::path two = write_temp("two.json", kTwoBalls);
    CHECK(cli({"sweep", two.string()}).code == 2);

    const fs::path csv = fs::temp_directory_path() / "antipodal_cli_tests" / "sweep.csv";
    CHECK(cli({"sweep", kExample1.string(), "--steps", "4", "--out", csv.string()}).code == 0);
    std::ifstream f(csv);
    std::string header;
    std::getline(f, header);
    CHECK(header == "theta,psi_1,phi_1,gap_1");
}

TEST_CASE("solve and verify")
{
    const Run solved = cli({"solve", kExample1.string(), "--tol", "1e-8"});
    REQUIRE(solved.code == 0);
    const json s = json::parse(solved.out);
    CHECK(s["converged"] == true);
    CHECK(s["method"] == "circle_bisection");
    CHECK(s.contains("wall_time_s"));
    CHECK(s["residual"].get<double>() <= 1e-8);

    const fs::path two = write_temp("two.json", kTwoBalls);
    const Run a = cli({"solve", two.string(), "--seed", "3"});
    const Run b = cli({"solve", two.string(), "--seed", "3"});
    REQUIRE(a.code == 0);
    const json ja = json::parse(a.out), jb = json::parse(b.out);
    CHECK(ja["point"] == jb["point"]);
    CHECK(ja["method"] == "multistart");

    std::string coords;
    for (const auto& v : ja["point"]) {
        char buf[40];
        std::snprintf(buf, sizeof buf, "%.17g", v.get<double>());
        coords += (coords.empty() ? "" : ",") + std::string(buf);
    }
    const Run v = cli({"verify", two.string(), "--point", coords});
    REQUIRE(v.code == 0);
    CHECK(std::fabs(json::parse(v.out)["residual"].get<double>() - ja["residual"].get<double>()) <= 1e-12);

    CHECK(cli({"verify", kExample1.string(), "--point", "0.9238795325112867,0.3826834323650898"}).code == 1);
    CHECK(cli({"solve", "/nonexistent.json"}).code == 2);
    CHECK(cli({"solve", kExample1.string(), "--tol", "abc"}).code == 2);
    CHECK(cli({}).code == 2);
    CHECK(cli({"frobnicate"}).code == 2);
}
