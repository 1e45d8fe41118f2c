#include "mcg4/catalog.hpp"
#include "mcg4/james.hpp"
#include "mcg4/model_json.hpp"
#include "mcg4/snf.hpp"
#include "mcg4/variations.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

namespace {

using namespace mcg4;

constexpr int kExitOk = 0;
constexpr int kExitInput = 2;
constexpr int kExitInternal = 3;

std::string read_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw std::invalid_argument("cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

// A model argument is a file path when it exists on disk, otherwise a catalog
// name, looked up first in the builtin catalog and then in MCG4_CATALOG_DIR.
ManifoldModel resolve_model(const std::string& arg)
{
    namespace fs = std::filesystem;
    if (fs::exists(arg) && fs::is_regular_file(arg))
        return model_from_json_text(read_file(arg));
    if (const CatalogEntry* e = find_catalog_entry(arg))
        return e->model;
    if (const char* dir = std::getenv("MCG4_CATALOG_DIR")) {
        const fs::path candidate = fs::path(dir) / (arg + ".json");
        if (fs::exists(candidate))
            return model_from_json_text(read_file(candidate.string()));
    }
    throw std::invalid_argument("unknown model '" + arg + "': not a file or catalog name");
}

IntMatrix matrix_from_file(const std::string& path, const char* object_key)
{
    const auto j = nlohmann::json::parse(read_file(path));
    const nlohmann::json* rows = &j;
    if (j.is_object()) {
        if (!j.contains(object_key))
            throw std::invalid_argument(path + ": expected a matrix or an object with key '" +
                                        object_key + "'");
        rows = &j.at(object_key);
    }
    std::vector<std::vector<long long>> data;
    for (const auto& row : *rows) {
        std::vector<long long> r;
        for (const auto& e : row)
            r.push_back(e.get<long long>());
        data.push_back(std::move(r));
    }
    return IntMatrix::from_rows(data);
}

int cmd_analyze(const std::string& model_arg, bool as_json, bool quiet)
{
    const ManifoldModel model = resolve_model(model_arg);
    const MCGReport report = analyze(model);
    if (quiet)
        return kExitOk;
    std::cout << (as_json ? report_to_json_text(report) + "\n" : report_to_text(report));
    return kExitOk;
}

int cmd_ss(long long rank, bool spin, bool as_json, bool quiet)
{
    if (rank < 1 || rank > 8)
        throw std::invalid_argument("ss: --rank must be between 1 and 8");
    const SSReport report = e3_report(static_cast<std::size_t>(rank), spin);
    if (quiet)
        return kExitOk;
    std::cout << (as_json ? ss_report_to_json_text(report) + "\n" : ss_report_to_text(report));
    return kExitOk;
}

int cmd_check(const std::string& form_path, const std::string& variation_path, bool as_json,
              bool quiet)
{
    const SymmetricForm q(matrix_from_file(form_path, "gram"));
    const IntMatrix v = matrix_from_file(variation_path, "v");
    if (v.rows() != q.rank() || v.cols() != q.rank())
        throw std::invalid_argument("check: variation dimensions do not match the form");

    const bool member = is_variation(q, v);
    nlohmann::json j;
    j["member"] = member;
    std::ostringstream text;
    text << "member: " << (member ? "true" : "false");
    if (member) {
        const FormVariation fv(q, v);
        const IntMatrix a = induced_isometry(fv);
        j["xi"] = nlohmann::json::parse(a.to_string() == "[]" ? "[]" : a.to_string());
        j["rel_boundary"] = is_rel_boundary(q, a);
        text << "; xi: " << a.to_string()
             << "; rel_boundary: " << (is_rel_boundary(q, a) ? "true" : "false");
    }
    if (!quiet)
        std::cout << (as_json ? j.dump(2) + "\n" : text.str() + "\n");
    return kExitOk;
}

int cmd_catalog(const std::string& action, const std::string& name, bool as_json, bool quiet)
{
    if (action == "list") {
        if (quiet)
            return kExitOk;
        if (as_json) {
            nlohmann::json j = nlohmann::json::array();
            for (const auto& e : builtin_catalog())
                j.push_back(e.name);
            std::cout << j.dump(2) << "\n";
        } else {
            for (const auto& e : builtin_catalog())
                std::cout << e.name << "\n";
        }
        return kExitOk;
    }
    if (action == "show") {
        const CatalogEntry* e = find_catalog_entry(name);
        if (!e)
            throw std::invalid_argument("catalog: no entry named '" + name + "'");
        if (!quiet)
            std::cout << model_to_json_text(e->model) << "\n";
        return kExitOk;
    }
    throw std::invalid_argument("catalog: action must be 'list' or 'show'");
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"mapping class group invariants of simply connected 4-manifolds with boundary"};
    app.require_subcommand(1);

    bool as_json = false;
    bool quiet = false;
    app.add_flag("--json", as_json, "emit JSON instead of text");
    app.add_flag("--quiet", quiet, "suppress report output");

    std::string model_arg;
    auto* analyze_cmd = app.add_subcommand("analyze", "report the mapping class group of a model");
    analyze_cmd->add_option("model", model_arg, "model file path or catalog name")->required();
    bool analyze_text = false, analyze_json = false;
    analyze_cmd->add_flag("--json", analyze_json, "emit JSON");
    analyze_cmd->add_flag("--text", analyze_text, "emit text (default)");

    long long ss_rank = 0;
    bool ss_spin = false, ss_nonspin = false, ss_json = false;
    auto* ss_cmd = app.add_subcommand("ss", "spectral-sequence E3 ranks for rank n");
    ss_cmd->add_option("--rank", ss_rank, "number of degree-2 generators (1..8)")->required();
    ss_cmd->add_flag("--spin", ss_spin, "spin case (w = 0)");
    ss_cmd->add_flag("--nonspin", ss_nonspin, "non-spin case (w = x1)");
    ss_cmd->add_flag("--json", ss_json, "emit JSON");

    std::string form_path, variation_path;
    bool check_json = false;
    auto* check_cmd = app.add_subcommand("check", "test a matrix against the variation equation");
    check_cmd->add_option("--form", form_path, "JSON file with the Gram matrix")->required();
    check_cmd->add_option("--variation", variation_path, "JSON file with the candidate matrix")
        ->required();
    check_cmd->add_flag("--json", check_json, "emit JSON");

    std::string catalog_action, catalog_name;
    bool catalog_json = false;
    auto* catalog_cmd = app.add_subcommand("catalog", "list or show builtin models");
    catalog_cmd->add_option("action", catalog_action, "'list' or 'show'")->required();
    catalog_cmd->add_option("name", catalog_name, "entry name for 'show'");
    catalog_cmd->add_flag("--json", catalog_json, "emit JSON");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitInput;
    }

    try {
        if (*analyze_cmd)
            return cmd_analyze(model_arg, as_json || analyze_json, quiet);
        if (*ss_cmd) {
            if (ss_spin == ss_nonspin)
                throw std::invalid_argument("ss: pass exactly one of --spin / --nonspin");
            return cmd_ss(ss_rank, ss_spin, as_json || ss_json, quiet);
        }
        if (*check_cmd)
            return cmd_check(form_path, variation_path, as_json || check_json, quiet);
        if (*catalog_cmd)
            return cmd_catalog(catalog_action, catalog_name, as_json || catalog_json, quiet);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::logic_error& e) {
        std::cerr << "internal inconsistency: " << e.what() << "\n";
        return kExitInternal;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInternal;
    }
    return kExitInput;
}
