// End-to-end checks of the sflab binary: exit codes, JSON shape, and
// byte-determinism. The binary path arrives via the SFLAB_BIN environment
// variable set by the test harness.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <string>

#include <json.hpp>

using Json = nlohmann::ordered_json;

namespace {

struct RunResult {
    int status;
    std::string out;
};

RunResult run(const std::string& args) {
    const char* bin = std::getenv("SFLAB_BIN");
    REQUIRE(bin != nullptr);
    std::string cmd = std::string(bin) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    std::array<char, 4096> buf;
    size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), got);
    int status = pclose(pipe);
    return {WEXITSTATUS(status), out};
}

std::string tmp_path(const char* name) {
    return std::string("/tmp/sflab_test_") + name + ".json";
}

}  // namespace

TEST_CASE("field create") {
    RunResult r = run("field create --p 3 --n 2");
    CHECK(r.status == 0);
    Json j = Json::parse(r.out);
    CHECK(j["ok"] == true);
    CHECK(j["field"]["modulus"] == Json::array({1, 0, 1}));
    CHECK(j["primitive_element"] == 4);
    CHECK(j["nonsquare"] == 4);

    CHECK(run("field create --p 4 --n 2").status == 1);
}

TEST_CASE("family build, validate, nuclei pipeline") {
    std::string path = tmp_path("bh332");
    RunResult b = run("family build --tag bh --q 3 --l 3 --d 2 --out " + path);
    REQUIRE(b.status == 0);

    RunResult v = run("validate " + path);
    CHECK(v.status == 0);
    CHECK(Json::parse(v.out)["valid"] == true);

    RunResult n = run("nuclei " + path);
    REQUIRE(n.status == 0);
    Json j = Json::parse(n.out);
    CHECK(j["orders"]["left"] == 3);
    CHECK(j["orders"]["middle"] == 9);
    CHECK(j["orders"]["right"] == 3);
    CHECK(j["orders"]["center"] == 3);

    // oracle embedding
    std::string gtf_path = tmp_path("gtf331");
    REQUIRE(run("family build --tag gtf --q 3 --t 3 --n 1 --out " + gtf_path).status == 0);
    RunResult o = run("nuclei " + gtf_path + " --oracle");
    REQUIRE(o.status == 0);
    CHECK(Json::parse(o.out)["oracle_match"] == true);
}

TEST_CASE("family rejections exit nonzero with a structured error") {
    RunResult r = run("family build --tag gtf --q 3 --t 2 --n 1");
    CHECK(r.status == 1);
    Json j = Json::parse(r.out);
    CHECK(j["ok"] == false);
    CHECK(j["error"]["code"] == "BadParameter");
}

TEST_CASE("deterministic output: identical invocations produce identical bytes") {
    RunResult a = run("family build --tag zkw --q 3 --h 1 --n 2");
    RunResult b = run("family build --tag zkw --q 3 --h 1 --n 2");
    CHECK(a.status == 0);
    CHECK(a.out == b.out);

    RunResult t1 = run("table --cap 729 --rows gtf");
    RunResult t2 = run("table --cap 729 --rows gtf");
    CHECK(t1.out == t2.out);
}

TEST_CASE("validate reports corruption and parse failures as verdicts") {
    std::string path = tmp_path("corrupt");
    REQUIRE(run("family build --tag gtf --q 3 --t 3 --n 1 --out " + path).status == 0);
    // corrupt one structure constant
    std::string corrupted = tmp_path("corrupted");
    {
        std::ifstream in(path);
        Json j = Json::parse(in);
        j["aij"] = nullptr;
        auto sc = j["structure_constants"].get<std::vector<int>>();
        sc[4] = (sc[4] + 1) % 3;
        j["structure_constants"] = sc;
        std::ofstream out(corrupted);
        out << j.dump(2);
    }
    RunResult v = run("validate " + corrupted);
    CHECK(v.status == 0);
    Json j = Json::parse(v.out);
    CHECK(j["valid"] == false);
    CHECK(j.contains("witness"));

    std::string trunc = tmp_path("trunc");
    {
        std::ofstream out(trunc);
        out << "{\"carrier\": {";
    }
    RunResult t = run("validate " + trunc);
    CHECK(t.status == 0);
    Json tj = Json::parse(t.out);
    CHECK(tj["valid"] == false);
    CHECK(tj["reason"] == "ParseError");
}

TEST_CASE("knuth orbit") {
    std::string path = tmp_path("orbit_gtf");
    REQUIRE(run("family build --tag gtf --q 3 --t 3 --n 1 --out " + path).status == 0);
    RunResult r = run("knuth orbit " + path);
    REQUIRE(r.status == 0);
    Json j = Json::parse(r.out);
    CHECK(j["relations_hold"] == true);
    REQUIRE(j["orbit"].size() == 6);
    CHECK(j["orbit"][0]["derivative"] == "");
    CHECK(j["orbit"][5]["derivative"] == "dtd");
}

TEST_CASE("isotopy compare verdicts") {
    std::string a = tmp_path("cmp_field27");
    std::string b = tmp_path("cmp_gtf");
    REQUIRE(run("family build --tag field --q 27 --out " + a).status == 0);
    REQUIRE(run("family build --tag gtf --q 3 --t 3 --n 1 --out " + b).status == 0);

    RunResult r1 = run("isotopy compare " + a + " " + b);
    CHECK(r1.status == 0);
    CHECK(Json::parse(r1.out)["verdict"] == "NotIsotopic");

    RunResult r2 = run("isotopy compare " + b + " " + b);
    CHECK(Json::parse(r2.out)["verdict"] == "Unknown");

    RunResult r3 = run("isotopy compare " + b + " " + b + " --brute");
    Json j3 = Json::parse(r3.out);
    CHECK(j3["verdict"] == "Isotopic");
    CHECK(j3.contains("triple"));

    RunResult r4 = run("isotopy compare " + b + " " + b + " --brute --budget 10");
    Json j4 = Json::parse(r4.out);
    CHECK(j4["verdict"] == "Unknown");
    CHECK(j4["reason"] == "budget exceeded");
}

TEST_CASE("table at a small cap") {
    RunResult r = run("table --cap 729");
    CHECK(r.status == 0);
    Json j = Json::parse(r.out);
    CHECK(j["ok"] == true);
    int matches = 0;
    for (const auto& row : j["rows"]) {
        if (row.contains("match")) {
            CHECK(row["match"] == true);
            ++matches;
        }
    }
    CHECK(matches >= 8);             // everything of order <= 729
    CHECK(j["skipped"].size() >= 2); // zkw/bierbrauer rows have no desk-scale instance

    // cap below every family minimum: empty table, exit success
    RunResult e = run("table --cap 2");
    CHECK(e.status == 0);
    Json ej = Json::parse(e.out);
    CHECK(ej["ok"] == true);
    CHECK(ej["rows"].empty());
}

TEST_CASE("filtered table") {
    RunResult r = run("table --rows bh --cap 729");
    CHECK(r.status == 0);
    Json j = Json::parse(r.out);
    REQUIRE(j["rows"].size() == 1);
    CHECK(j["rows"][0]["family"] == "bh");
    CHECK(j["rows"][0]["k_expected"] == 3);
    CHECK(j["rows"][0]["nm_expected"] == 9);
    CHECK(j["rows"][0]["match"] == true);
}

TEST_CASE("nuclei with an explicit pivot and side") {
    std::string path = tmp_path("pivot_gtf");
    REQUIRE(run("family build --tag gtf --q 3 --t 3 --n 1 --out " + path).status == 0);
    RunResult r = run("nuclei " + path + " --omega 2 --side middle");
    REQUIRE(r.status == 0);
    Json j = Json::parse(r.out);
    CHECK(j["center_order_with_pivot"] == j["orders"]["center"]);
}

TEST_CASE("pair-carrier exchange round trip") {
    std::string path = tmp_path("dickson");
    REQUIRE(run("family build --tag dickson --q 3 --k 3 --s 1 --out " + path).status == 0);
    RunResult v = run("validate " + path);
    CHECK(Json::parse(v.out)["valid"] == true);
    RunResult n = run("nuclei " + path);
    Json j = Json::parse(n.out);
    CHECK(j["orders"]["middle"] == 27);
    CHECK(j["orders"]["center"] == 3);
    RunResult k = run("knuth orbit " + path);
    CHECK(Json::parse(k.out)["relations_hold"] == true);
}
