#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>
#include <sys/wait.h>

#include "json.hpp"

using json = nlohmann::ordered_json;

namespace {

struct run_result {
    int exit_code;
    std::string out;
};

run_result run_cli(const std::string& args) {
    std::string cmd = std::string(COBLE_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    char buf[4096];
    size_t n;
    while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
    int status = pclose(pipe);
    int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return {code, out};
}

json run_json(const std::string& args, int expected_exit = 0) {
    run_result r = run_cli(args);
    INFO("command: ", args, "\noutput: ", r.out);
    REQUIRE(r.exit_code == expected_exit);
    return json::parse(r.out);
}

std::string fixture(const std::string& name) {
    return std::string("@") + COBLE_FIXTURES_DIR + "/" + name;
}

const char* kTriple =
    R"({"a":{"deg":2,"coeffs":["1","0","-1"]},"b":{"deg":2,"coeffs":["1","0","1"]},"c":{"deg":2,"coeffs":["1","1","-1"]}})";

} // namespace

TEST_CASE("help and usage errors use the documented exit codes") {
    CHECK(run_cli("--help").exit_code == 0);
    CHECK(run_cli("enum classes --help").exit_code == 0);
    CHECK(run_cli("").exit_code == 64);
    CHECK(run_cli("enum classes --n 6").exit_code == 64);
    CHECK(run_cli("enum classes --n 6 --preset minus-one --bogus").exit_code == 64);
    CHECK(run_cli("no-such-command").exit_code == 64);
}

TEST_CASE("validation failures exit with code 2 and a reason") {
    json j = run_json("enum classes --n 6 --preset bogus", 2);
    CHECK(j.at("error") == "BadInput");
    CHECK(j.contains("detail"));

    json parse_err = run_json("picard genus --class 'not json'", 2);
    CHECK(parse_err.at("error") == "BadInput");

    json bad_field = run_json(
        R"(picard genus --class '{"d": 1, "m": [0,0,0,0,0,0,0,0,0,0], "zz": 1}')", 2);
    CHECK(bad_field.at("error") == "BadInput");
}

TEST_CASE("lattice commands reflect, split and print the Gram matrix") {
    json gram = run_json("lattice gram");
    REQUIRE(gram.size() == 10);
    CHECK(gram[0][0].get<int>() == -2);
    CHECK(gram[0][3].get<int>() == 1);
    CHECK(gram[1][2].get<int>() == 1);

    json reflected = run_json(
        R"(lattice reflect --root '{"basis":"root","coords":[1,0,0,0,0,0,0,0,0,0]}' --vector '[0,1,0,0,0,0,0,0,0,0,0]')");
    CHECK(reflected.at("basis") == "standard");

    json split = run_json("lattice split --vector '[1,0,0,0,0,0,0,0,0,0,0]'");
    CHECK(split.at("k_coefficient").get<int>() == 3);
    json perp = split.at("perp");
    CHECK(perp.at("coords")[0].get<int>() == 10);
    CHECK(perp.at("coords")[1].get<int>() == -3);
}

TEST_CASE("picard commands expose pairing, genus, chi and the audit") {
    json pair = run_json(
        R"(picard pair --a '{"d":1,"m":[0,0,0,0,0,0,0,0,0,0]}' --b '{"d":1,"m":[0,0,0,0,0,0,0,0,0,0]}')");
    CHECK(pair.at("pairing").get<int>() == 1);

    json genus = run_json(R"(picard genus --class '{"d":3,"m":[0,0,0,0,0,0,0,0,0,0]}')");
    CHECK(genus.at("genus").get<int>() == 1);

    json chi = run_json(R"(picard chi --class '{"d":4,"m":[1,1,1,1,1,1,1,1,1,1]}')");
    CHECK(chi.at("chi").get<int>() == 5);

    json audit = run_json("picard audit-quintic");
    for (const auto& [key, entry] : audit.items()) {
        INFO("audit entry ", key);
        CHECK(entry.at("pass").get<bool>());
    }

    json contract = run_json(
        R"(picard contract --classes '[{"d":0,"m":[-1,0,0,0,0,0,0,0,0,0]},{"d":0,"m":[0,-1,0,0,0,0,0,0,0,0]},{"d":0,"m":[0,0,-1,0,0,0,0,0,0,0]},{"d":0,"m":[0,0,0,-1,0,0,0,0,0,0]},{"d":0,"m":[0,0,0,0,-1,0,0,0,0,0]},{"d":0,"m":[0,0,0,0,0,-1,0,0,0,0]},{"d":0,"m":[0,0,0,0,0,0,-1,0,0,0]},{"d":0,"m":[0,0,0,0,0,0,0,-1,0,0]},{"d":0,"m":[0,0,0,0,0,0,0,0,-1,0]},{"d":0,"m":[0,0,0,0,0,0,0,0,0,-1]}]')");
    json matrix = contract.at("matrix");
    for (int i = 0; i < 11; ++i)
        for (int j = 0; j < 11; ++j)
            CHECK(matrix[i][j].get<int>() == (i == j ? 1 : 0));
}

TEST_CASE("enum commands count, extend and certify obstructions") {
    json classes = run_json("enum classes --n 6 --preset minus-one");
    CHECK(classes.size() == 27);

    json roots = run_json("enum classes --n 3 --preset root --verify");
    CHECK(roots.size() == 8);

    run_result too_small = run_cli("enum classes --n 8 --preset minus-one --bound 5 --verify");
    CHECK(too_small.exit_code == 2);
    CHECK(json::parse(too_small.out).at("error") == "BoundTooSmall");

    json blocked = run_json("enum extend --input " + fixture("nine_quadric.json"), 3);
    CHECK(blocked.at("error") == "NonExtendable");
    REQUIRE(blocked.contains("certificate"));
    CHECK(blocked.at("certificate").at("kind") == "integrality");
    CHECK(blocked.at("certificate").at("gcd") == "2");
    CHECK(blocked.at("certificate").at("rhs") == "-1");

    json fano = run_json(
        R"(enum fano --input '{"n":10,"seq":[{"d":3,"m":[0,1,1,1,1,1,1,1,1,1]},{"d":3,"m":[1,0,1,1,1,1,1,1,1,1]},{"d":3,"m":[1,1,0,1,1,1,1,1,1,1]},{"d":3,"m":[1,1,1,0,1,1,1,1,1,1]},{"d":3,"m":[1,1,1,1,0,1,1,1,1,1]},{"d":3,"m":[1,1,1,1,1,0,1,1,1,1]},{"d":3,"m":[1,1,1,1,1,1,0,1,1,1]},{"d":3,"m":[1,1,1,1,1,1,1,0,1,1]},{"d":3,"m":[1,1,1,1,1,1,1,1,0,1]},{"d":3,"m":[1,1,1,1,1,1,1,1,1,0]}]}')");
    CHECK(fano.at("d").get<int>() == 10);
    for (const auto& m : fano.at("m")) CHECK(m.get<int>() == 3);

    json phi = run_json(
        R"(enum phi --input '{"n":10,"h":{"d":10,"m":[3,3,3,3,3,3,3,3,3,3]}}')");
    CHECK(phi.at("phi").get<int>() == 3);
}

TEST_CASE("binform commands compute jacobians, resultants and involutions") {
    json jac = run_json(
        R"(binform jacobian --f '{"deg":2,"coeffs":["1","0","0"]}' --g '{"deg":2,"coeffs":["0","0","1"]}')");
    CHECK(jac.at("coeffs") == json::array({"0", "4", "0"}));

    json res = run_json(
        R"(binform resultant --f '{"deg":2,"coeffs":["1","0","-1"]}' --g '{"deg":2,"coeffs":["1","0","1"]}')");
    CHECK(res.at("resultant") == "4");

    json inv = run_json(
        R"(binform involution --f '{"deg":2,"coeffs":["0","1","0"]}' --g '{"deg":2,"coeffs":["1","0","-1"]}')");
    CHECK(inv.contains("m"));

    run_result degenerate = run_cli(
        R"(binform involution --f '{"deg":2,"coeffs":["0","1","0"]}' --g '{"deg":2,"coeffs":["1","1","0"]}')");
    CHECK(degenerate.exit_code == 2);
    CHECK(json::parse(degenerate.out).at("error") == "DegeneratePencil");
}

TEST_CASE("sextic commands run the full pipeline on the bundled fixture") {
    std::string input = " --input " + fixture("sextic_fixture.json");

    json built = run_json("sextic build" + input);
    CHECK(built.at("f0").at("deg").get<int>() == 6);

    json w = run_json("sextic w-form" + input);
    CHECK(w.at("degree").get<int>() == 20);
    CHECK(w.at("square_free").get<bool>() == false);

    json dim = run_json("sextic system-dim --m 6 --r 2" + input);
    CHECK(dim.at("dimension").get<int>() == 1);

    json implicit = run_json("sextic implicitize" + input);
    CHECK(implicit.at("deg").get<int>() == 6);
    CHECK(implicit.at("terms").size() == 15);

    json report = run_json("sextic coble-check --audit" + input);
    CHECK(report.at("is_coble").get<bool>());
    CHECK(report.at("moduli").at("moduli_dim").get<int>() == 9);

    const char* dependent =
        R"('{"a":{"deg":2,"coeffs":["1","0","-1"]},"b":{"deg":2,"coeffs":["1","1","1"]},"c":{"deg":2,"coeffs":["2","1","0"]},"lambda":[["1","2","0"],["0","1","2"],["2","0","1"]]}')";
    run_result nodal = run_cli(std::string("sextic w-form --input ") + dependent);
    CHECK(nodal.exit_code == 3);
    CHECK(json::parse(nodal.out).at("error") == "NotTenNodal");

    run_result nonbir = run_cli(std::string("sextic implicitize --input ") + dependent);
    CHECK(nonbir.exit_code == 3);
    CHECK(json::parse(nonbir.out).at("error") == "NonBirational");
}

TEST_CASE("coincide commands expose the matrices, test, residual and scan") {
    std::string triple = std::string("'") + kTriple + "'";

    json mats = run_json("coincide matrices --input " + triple);
    CHECK(mats.at("detM") == "-2");
    CHECK(mats.at("detN") == "-4");
    CHECK(mats.at("M").size() == 3);

    json test = run_json("coincide test --input " + triple);
    CHECK(test.at("coincident") == false);

    json residual = run_json("coincide residual --input " + triple);
    CHECK(residual.at("scalar") == false);

    run_result scan = run_cli("coincide family-scan --grid " + fixture("lambda_grid.json"));
    CHECK(scan.exit_code == 0);
    int lines = 0;
    size_t pos = 0;
    while ((pos = scan.out.find('\n', pos)) != std::string::npos) {
        ++lines;
        ++pos;
    }
    CHECK(lines == 6);
    CHECK(scan.out.find("\"error\":\"SingularLambda\"") != std::string::npos);
    CHECK(scan.out.find("\"marked_fix\":true") != std::string::npos);
}

TEST_CASE("reports can be written to a file instead of stdout") {
    std::string path = std::string(CMAKE_BINARY_DIR_PATH) + "/cli_output_test.json";
    std::remove(path.c_str());
    run_result r = run_cli("enum classes --n 4 --preset minus-one --output " + path);
    CHECK(r.exit_code == 0);
    CHECK(r.out.empty());
    std::ifstream in(path);
    REQUIRE(in.good());
    json j = json::parse(in);
    CHECK(j.size() == 10);
    std::remove(path.c_str());
}

TEST_CASE("outputs are byte-identical across thread counts and repeats") {
    const std::string commands[] = {
        "enum classes --n 8 --preset minus-one",
        "coincide family-scan --grid " + fixture("lambda_grid.json"),
        "sextic coble-check --audit --input " + fixture("sextic_fixture.json"),
    };
    for (const std::string& cmd : commands) {
        run_result one = run_cli(cmd + " --threads 1");
        run_result four = run_cli(cmd + " --threads 4");
        run_result again = run_cli(cmd + " --threads 4");
        CHECK(one.exit_code == 0);
        CHECK(one.out == four.out);
        CHECK(four.out == again.out);
    }
}
