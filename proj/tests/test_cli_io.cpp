#include "mcg4/catalog.hpp"
#include "mcg4/model_json.hpp"

#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

using namespace mcg4;

namespace {

#ifdef MCG4_CLI_PATH
int run_cli(const std::string& args, std::string* output = nullptr)
{
    const std::string cmd = std::string(MCG4_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    char buf[4096];
    while (std::size_t got = fread(buf, 1, sizeof(buf), pipe))
        out.append(buf, got);
    const int status = pclose(pipe);
    if (output)
        *output = out;
    return WEXITSTATUS(status);
}
#endif

}  // namespace

TEST_CASE("model JSON round trip")
{
    for (const auto& entry : builtin_catalog()) {
        const std::string text = model_to_json_text(entry.model);
        const ManifoldModel parsed = model_from_json_text(text);
        CHECK(parsed == entry.model);
    }
}

TEST_CASE("model JSON validation errors carry field diagnostics")
{
    CHECK_THROWS_WITH_AS(model_from_json_text("{"), doctest::Contains("malformed JSON"),
                         std::invalid_argument);
    CHECK_THROWS_WITH_AS(model_from_json_text(R"({"spin": true, "boundary_components": 1})"),
                         doctest::Contains("gram"), std::invalid_argument);
    CHECK_THROWS_WITH_AS(
        model_from_json_text(R"({"gram": [[0,1],[1,0]], "boundary_components": 1})"),
        doctest::Contains("spin"), std::invalid_argument);
    CHECK_THROWS_WITH_AS(
        model_from_json_text(R"({"gram": [[0,2],[1,0]], "spin": true, "boundary_components": 1})"),
        doctest::Contains("symmetric"), std::invalid_argument);
    CHECK_THROWS_AS(
        model_from_json_text(
            R"({"gram": [[1]], "spin": true, "boundary_components": 1,
                "components": [{"label": "x", "admits_gdt": "maybe"}]})"),
        std::invalid_argument);
}

TEST_CASE("Seifert euler pairs are reduced on ingest")
{
    const auto m = model_from_json_text(
        R"({"gram": [], "spin": true, "boundary_components": 1,
            "components": [{"label": "y", "seifert_euler": [4, -6]}]})");
    REQUIRE(m.components.has_value());
    CHECK((*m.components)[0].seifert_euler == std::pair<long long, long long>{-2, 3});
}

TEST_CASE("report JSON round trip")
{
    for (const auto& entry : builtin_catalog()) {
        const MCGReport r = analyze(entry.model);
        const MCGReport parsed = report_from_json_text(report_to_json_text(r));
        CHECK(parsed == r);
    }
}

TEST_CASE("catalog regression fragments appear in text reports")
{
    for (const auto& entry : builtin_catalog()) {
        const std::string text = report_to_text(analyze(entry.model));
        for (const auto& fragment : entry.expected_fragments) {
            INFO(entry.name, " expects '", fragment, "' in:\n", text);
            CHECK(text.find(fragment) != std::string::npos);
        }
    }
}

TEST_CASE("text reports are deterministic")
{
    const auto* e = find_catalog_entry("S3xI");
    REQUIRE(e != nullptr);
    CHECK(report_to_text(analyze(e->model)) == report_to_text(analyze(e->model)));
}

#ifdef MCG4_CLI_PATH

TEST_CASE("CLI end to end")
{
    std::string out;

    SUBCASE("analyze catalog entries")
    {
        CHECK(run_cli("analyze S3xI", &out) == 0);
        CHECK(out.find("order: 2") != std::string::npos);
        CHECK(run_cli("analyze D4", &out) == 0);
        CHECK(out.find("trivial group") != std::string::npos);
        CHECK(run_cli("analyze CP2-minus-disk", &out) == 0);
        CHECK(out.find("order: 2") != std::string::npos);
    }
    SUBCASE("analyze a model file and honor the JSON flag")
    {
        const char* path = "cli_model_tmp.json";
        {
            std::ofstream f(path);
            f << model_to_json_text(find_catalog_entry("H")->model);
        }
        CHECK(run_cli(std::string("analyze ") + path + " --json", &out) == 0);
        CHECK(out.find("\"order\": \"4\"") != std::string::npos);
        std::remove(path);
    }
    SUBCASE("spectral sequence command")
    {
        CHECK(run_cli("ss --rank 2 --nonspin", &out) == 0);
        CHECK(out.find("E3^{2,2}: dim 1") != std::string::npos);
        CHECK(run_cli("ss --rank 3 --spin", &out) == 0);
        CHECK(out.find("E3^{4,1}: dim 0") != std::string::npos);
        CHECK(run_cli("ss --rank 1 --spin", &out) == 0);
        CHECK(out.find("E3^{2,2}: dim 0") != std::string::npos);
        CHECK(run_cli("ss --rank 9 --spin") == 2);
        CHECK(run_cli("ss --rank 2") == 2);
    }
    SUBCASE("membership check command")
    {
        const char* form_path = "cli_form_tmp.json";
        const char* var_path = "cli_var_tmp.json";
        {
            std::ofstream f(form_path);
            f << "[[1]]";
        }
        {
            std::ofstream f(var_path);
            f << "[[2]]";
        }
        CHECK(run_cli(std::string("check --form ") + form_path + " --variation " + var_path, &out) ==
              0);
        CHECK(out.find("member: true") != std::string::npos);
        CHECK(out.find("xi: [[-1]]") != std::string::npos);
        {
            std::ofstream f(var_path);
            f << "[[0]]";
        }
        CHECK(run_cli(std::string("check --form ") + form_path + " --variation " + var_path, &out) ==
              0);
        CHECK(out.find("member: true") != std::string::npos);
        CHECK(out.find("xi: [[1]]") != std::string::npos);
        {
            std::ofstream f(var_path);
            f << "[[1]]";
        }
        CHECK(run_cli(std::string("check --form ") + form_path + " --variation " + var_path, &out) ==
              0);
        CHECK(out.find("member: false") != std::string::npos);
        {
            std::ofstream f(var_path);
            f << "[[1,0],[0,1]]";
        }
        CHECK(run_cli(std::string("check --form ") + form_path + " --variation " + var_path) == 2);
        std::remove(form_path);
        std::remove(var_path);
    }
    SUBCASE("catalog list and show")
    {
        CHECK(run_cli("catalog list", &out) == 0);
        for (const char* name : {"S3xI", "D4", "CP2-minus-disk", "E8-minus-disk", "S2xD2", "H"})
            CHECK(out.find(name) != std::string::npos);
        CHECK(run_cli("catalog show S3xI", &out) == 0);
        CHECK(out.find("\"spin\": true") != std::string::npos);
        CHECK(out.find("\"boundary_components\": 2") != std::string::npos);
        CHECK(run_cli("catalog show nosuch") == 2);
    }
    SUBCASE("bad inputs exit with code 2")
    {
        CHECK(run_cli("analyze nosuchmodel") == 2);
        const char* path = "cli_bad_tmp.json";
        {
            std::ofstream f(path);
            f << "{not json";
        }
        CHECK(run_cli(std::string("analyze ") + path) == 2);
        std::remove(path);
    }
    SUBCASE("catalog dir environment variable")
    {
        const char* dir_model = "envmodel.json";
        {
            std::ofstream f(dir_model);
            f << R"({"name": "envmodel", "gram": [], "spin": true, "boundary_components": 1})";
        }
        CHECK(run_cli("analyze envmodel") == 2);
        setenv("MCG4_CATALOG_DIR", ".", 1);
        CHECK(run_cli("analyze envmodel", &out) == 0);
        CHECK(out.find("trivial group") != std::string::npos);
        unsetenv("MCG4_CATALOG_DIR");
        std::remove(dir_model);
    }
}

#endif  // MCG4_CLI_PATH
