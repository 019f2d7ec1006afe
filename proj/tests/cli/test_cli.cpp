#include <doctest.h>

#include <json.hpp>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <sstream>
#include <string>
#include <vector>

namespace {

struct RunResult {
    int exit_code;
    std::string output;
};

std::string cli_path() {
    const char* path = std::getenv("LDIST_CLI");
    REQUIRE_MESSAGE(path != nullptr, "LDIST_CLI must point at the built binary");
    return path;
}

RunResult run(const std::string& args, bool merge_stderr = false) {
    const std::string cmd =
        cli_path() + " " + args + (merge_stderr ? " 2>&1" : " 2>/dev/null");
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    std::array<char, 4096> buf;
    while (std::fgets(buf.data(), buf.size(), pipe) != nullptr) out += buf.data();
    const int status = pclose(pipe);
    return RunResult{WEXITSTATUS(status), out};
}

std::vector<std::string> lines_of(const std::string& text) {
    std::vector<std::string> lines;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line))
        if (!line.empty()) lines.push_back(line);
    return lines;
}

std::vector<std::string> split_csv(const std::string& line) {
    std::vector<std::string> fields;
    std::istringstream in(line);
    std::string field;
    while (std::getline(in, field, ',')) fields.push_back(field);
    return fields;
}

} // namespace

TEST_SUITE("cli") {

TEST_CASE("bounds mp prints the value with twelve significant digits") {
    const RunResult r = run("bounds mp --p 0.999 --q 5.55");
    CHECK(r.exit_code == 0);
    CHECK(std::stod(r.output) == doctest::Approx(73.4208574624).epsilon(1e-10));

    const RunResult r2 = run("bounds mp --p 0.5 --q 3.37");
    CHECK(r2.exit_code == 0);
    CHECK(std::stod(r2.output) == doctest::Approx(1984.43184274).epsilon(1e-10));
}

TEST_CASE("bounds mp rejects out-of-domain arguments with exit 2") {
    const RunResult r = run("bounds mp --p 0.3 --q 2", true);
    CHECK(r.exit_code == 2);
    CHECK(r.output.find("p must lie in (sqrt(2)-1, 1)") != std::string::npos);
    CHECK(run("bounds mp --p 0.5 --q 0.5").exit_code == 2);
    CHECK(run("bounds mp --p 0.5").exit_code == 2); // missing flag
}

TEST_CASE("bounds table emits the exact csv header and nine passing rows") {
    const RunResult r = run("bounds table --format csv");
    CHECK(r.exit_code == 0);
    const auto lines = lines_of(r.output);
    REQUIRE(lines.size() == 10);
    CHECK(lines[0] == "p,q_star,m_star,lower_bound,paper_m_star,rel_err");
    CHECK(split_csv(lines[1])[0] == "0.999");
    CHECK(split_csv(lines[9])[0] == "0.423");
}

TEST_CASE("csv and json table outputs agree to twelve significant digits") {
    const RunResult csv = run("bounds table --format csv");
    const RunResult js = run("bounds table --format json");
    REQUIRE(csv.exit_code == 0);
    REQUIRE(js.exit_code == 0);
    const auto doc = nlohmann::json::parse(js.output);
    CHECK(doc["pass"].get<bool>());
    const auto lines = lines_of(csv.output);
    const auto header = split_csv(lines[0]);
    REQUIRE(doc["rows"].size() == 9);
    for (std::size_t i = 0; i < 9; ++i) {
        const auto fields = split_csv(lines[i + 1]);
        for (std::size_t j = 0; j < header.size(); ++j) {
            const double from_csv = std::stod(fields[j]);
            const double from_json = doc["rows"][i][header[j]].get<double>();
            CHECK(std::abs(from_csv - from_json) <=
                  1e-11 * std::max(1.0, std::abs(from_json)));
        }
    }
}

TEST_CASE("bounds table writes files and fails cleanly on bad paths") {
    const RunResult ok = run("bounds table --format csv --out /tmp/ldist_table_test.csv");
    CHECK(ok.exit_code == 0);
    std::FILE* f = std::fopen("/tmp/ldist_table_test.csv", "r");
    REQUIRE(f != nullptr);
    char first[128] = {0};
    REQUIRE(std::fgets(first, sizeof(first), f) != nullptr);
    std::fclose(f);
    std::remove("/tmp/ldist_table_test.csv");
    CHECK(std::string(first).rfind("p,q_star", 0) == 0);

    const RunResult bad = run("bounds table --out /nonexistent_dir/x.csv", true);
    CHECK(bad.exit_code == 2);
}

TEST_CASE("length reports value and error estimate") {
    const RunResult r = run("length --map kp --p 0.5 --curve I");
    CHECK(r.exit_code == 0);
    double value = 0.0, err = 0.0;
    REQUIRE(std::sscanf(r.output.c_str(), "%lf %lf", &value, &err) == 2);
    CHECK(value == doctest::Approx(1.25663706144).epsilon(1e-10));
    CHECK(err < 1e-9);

    const RunResult up = run("length --map f0 --curve upper");
    CHECK(up.exit_code == 0);
    CHECK(std::stod(up.output) == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("length rejects the divergent request and usage errors with exit 2") {
    const RunResult r = run("length --map f0 --curve I", true);
    CHECK(r.exit_code == 2);
    CHECK(r.output.find("infinite length") != std::string::npos);
    CHECK(run("length --map kp --p 0.5 --curve I --rel-tol 1e-20").exit_code == 2);
    CHECK(run("length --map kp --p 0.5 --curve nowhere").exit_code == 2);
    CHECK(run("length --map kp --p 0.5 --curve Cprime --truncated").exit_code == 2);
    CHECK(run("length --map kp --curve I").exit_code == 2); // kp needs --p
}

TEST_CASE("truncated lengths of the divergent image") {
    const RunResult r = run("length --map f0 --curve I --truncated --eps 1e-2,1e-4");
    CHECK(r.exit_code == 0);
    const auto lines = lines_of(r.output);
    REQUIRE(lines.size() == 2);
    double eps = 0.0, value = 0.0, err = 0.0;
    REQUIRE(std::sscanf(lines[0].c_str(), "%lf %lf %lf", &eps, &value, &err) == 3);
    CHECK(value == doctest::Approx(199.0).epsilon(1e-6));
    REQUIRE(std::sscanf(lines[1].c_str(), "%lf %lf %lf", &eps, &value, &err) == 3);
    CHECK(value == doctest::Approx(19999.0).epsilon(1e-6));
}

TEST_CASE("experiments run end to end with the documented exit codes") {
    CHECK(run("experiment --name table1").exit_code == 0);
    const RunResult ext = run("experiment --name extremal --p 0.9");
    CHECK(ext.exit_code == 0);
    CHECK(ext.output.find("3.15032") != std::string::npos);

    const RunResult th2 =
        run("experiment --name theorem2 --alpha1-arg 0.785398163397448 --p1 0.9 --format json");
    CHECK(th2.exit_code == 0);
    const auto doc = nlohmann::json::parse(th2.output);
    CHECK(doc["pass"].get<bool>());
    bool found = false;
    for (const auto& c : doc["checks"])
        if (c["name"] == "pole_image_matches_closed_form") {
            CHECK(c["computed"].get<double>() ==
                  doctest::Approx(0.774522323190509).epsilon(1e-11));
            found = true;
        }
    CHECK(found);

    const RunResult con = run("experiment --name conjecture --p 0.2");
    CHECK(con.exit_code == 0);
    CHECK(con.output.find("5.65487") != std::string::npos);

    CHECK(run("experiment --name corollary --p 0.9 --theta 0.5").exit_code == 0);
    CHECK(run("experiment --name f0 --format csv").exit_code == 0);
    CHECK(run("experiment --name nonsense").exit_code == 2);
    CHECK(run("experiment --name extremal").exit_code == 2); // missing --p
    CHECK(run("experiment --name theorem2 --alpha1-arg 0.785398 --p1 0.2").exit_code == 2);
}

TEST_CASE("experiment csv rows carry the check schema") {
    const RunResult r = run("experiment --name extremal --p 0.8 --format csv");
    CHECK(r.exit_code == 0);
    const auto lines = lines_of(r.output);
    REQUIRE(lines.size() >= 2);
    CHECK(lines[0] == "name,computed,expected,tolerance,mode,origin,pass");
    for (std::size_t i = 1; i < lines.size(); ++i)
        CHECK(split_csv(lines[i]).size() == 7);
}

} // TEST_SUITE
