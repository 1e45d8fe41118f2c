#include "mcg4/model_json.hpp"

#include <json.hpp>

#include <sstream>
#include <stdexcept>

namespace mcg4 {

using nlohmann::json;

namespace {

json matrix_to_json(const IntMatrix& m)
{
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j)
            row.push_back(m.at(i, j).convert_to<long long>());
        rows.push_back(std::move(row));
    }
    return rows;
}

IntMatrix matrix_from_json(const json& j, const std::string& field)
{
    if (!j.is_array())
        throw std::invalid_argument("field '" + field + "' must be an array of rows");
    std::vector<std::vector<long long>> rows;
    for (const auto& row : j) {
        if (!row.is_array())
            throw std::invalid_argument("field '" + field + "' must contain arrays of integers");
        std::vector<long long> r;
        for (const auto& e : row) {
            if (!e.is_number_integer())
                throw std::invalid_argument("field '" + field + "' must contain integers");
            r.push_back(e.get<long long>());
        }
        rows.push_back(std::move(r));
    }
    return IntMatrix::from_rows(rows);
}

std::string tristate_to_string(TriState t)
{
    switch (t) {
    case TriState::Yes: return "yes";
    case TriState::No: return "no";
    default: return "unknown";
    }
}

TriState tristate_from_string(const std::string& s, const std::string& field)
{
    if (s == "yes")
        return TriState::Yes;
    if (s == "no")
        return TriState::No;
    if (s == "unknown")
        return TriState::Unknown;
    throw std::invalid_argument("field '" + field + "' must be \"yes\", \"no\", or \"unknown\"");
}

std::string aut_kind_to_string(AutKind k)
{
    switch (k) {
    case AutKind::Trivial: return "trivial";
    case AutKind::Enumerated: return "enumerated";
    case AutKind::OrderOnly: return "order-only";
    case AutKind::InfiniteUnipotent: return "infinite-unipotent";
    default: return "not-enumerated";
    }
}

AutKind aut_kind_from_string(const std::string& s)
{
    if (s == "trivial")
        return AutKind::Trivial;
    if (s == "enumerated")
        return AutKind::Enumerated;
    if (s == "order-only")
        return AutKind::OrderOnly;
    if (s == "infinite-unipotent")
        return AutKind::InfiniteUnipotent;
    if (s == "not-enumerated")
        return AutKind::NotEnumerated;
    throw std::invalid_argument("unknown aut kind '" + s + "'");
}

}  // namespace

ManifoldModel model_from_json_text(const std::string& text)
{
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw std::invalid_argument(std::string("malformed JSON: ") + e.what());
    }
    if (!j.is_object())
        throw std::invalid_argument("model file must be a JSON object");

    ManifoldModel m;
    if (!j.contains("gram"))
        throw std::invalid_argument("missing required field 'gram'");
    if (!j.contains("spin") || !j["spin"].is_boolean())
        throw std::invalid_argument("missing or non-boolean field 'spin'");
    if (!j.contains("boundary_components") || !j["boundary_components"].is_number_integer())
        throw std::invalid_argument("missing or non-integer field 'boundary_components'");

    m.name = j.value("name", "unnamed");
    m.form = SymmetricForm(matrix_from_json(j["gram"], "gram"));
    m.spin = j["spin"].get<bool>();
    const long long r = j["boundary_components"].get<long long>();
    if (r < 0)
        throw std::invalid_argument("field 'boundary_components' must be >= 0");
    m.boundary_components = static_cast<std::size_t>(r);

    if (j.contains("components") && !j["components"].is_null()) {
        if (!j["components"].is_array())
            throw std::invalid_argument("field 'components' must be an array");
        std::vector<BoundaryComponentInfo> cs;
        for (const auto& cj : j["components"]) {
            BoundaryComponentInfo c;
            c.label = cj.value("label", "");
            if (cj.contains("heegaard_genus") && !cj["heegaard_genus"].is_null())
                c.heegaard_genus = cj["heegaard_genus"].get<long long>();
            if (cj.contains("admits_gdt") && !cj["admits_gdt"].is_null())
                c.admits_gdt = tristate_from_string(cj["admits_gdt"].get<std::string>(), "admits_gdt");
            if (cj.contains("seifert_base_genus") && !cj["seifert_base_genus"].is_null())
                c.seifert_base_genus = cj["seifert_base_genus"].get<long long>();
            if (cj.contains("seifert_euler") && !cj["seifert_euler"].is_null()) {
                const auto& se = cj["seifert_euler"];
                if (!se.is_array() || se.size() != 2 || !se[0].is_number_integer() ||
                    !se[1].is_number_integer())
                    throw std::invalid_argument("field 'seifert_euler' must be [int, int]");
                c.seifert_euler = {se[0].get<long long>(), se[1].get<long long>()};
            }
            cs.push_back(std::move(c));
        }
        m.components = std::move(cs);
    }
    m.validate_and_normalize();
    return m;
}

std::string model_to_json_text(const ManifoldModel& m, int indent)
{
    json j;
    j["name"] = m.name;
    j["gram"] = matrix_to_json(m.form.gram());
    j["spin"] = m.spin;
    j["boundary_components"] = m.boundary_components;
    if (m.components) {
        json cs = json::array();
        for (const auto& c : *m.components) {
            json cj;
            cj["label"] = c.label;
            if (c.heegaard_genus)
                cj["heegaard_genus"] = *c.heegaard_genus;
            cj["admits_gdt"] = tristate_to_string(c.admits_gdt);
            if (c.seifert_base_genus)
                cj["seifert_base_genus"] = *c.seifert_base_genus;
            if (c.seifert_euler)
                cj["seifert_euler"] = {c.seifert_euler->first, c.seifert_euler->second};
            cs.push_back(std::move(cj));
        }
        j["components"] = std::move(cs);
    }
    return j.dump(indent);
}

std::string report_to_json_text(const MCGReport& r, int indent)
{
    json j;
    j["model"] = r.model_name;
    j["rank"] = r.rank;
    j["corank"] = r.corank;
    j["even"] = r.even;
    j["spin"] = r.spin;
    j["boundary_components"] = r.boundary_components;
    j["theta_rank"] = r.theta_rank;
    j["torelli"] = {{"free_rank", r.torelli_free_rank}, {"two_torsion_rank", r.torelli_two_torsion}};
    j["aut_boundary"] = {
        {"kind", aut_kind_to_string(r.aut.kind)},
        {"finite", r.aut.finite},
        {"order", r.aut.finite ? json(r.aut.order.str()) : json(nullptr)},
        {"lifted_order", r.aut.lift_certified ? json(r.aut.lifted_order.str()) : json(nullptr)},
        {"lift_certified", r.aut.lift_certified},
        {"all_lift", r.aut.all_lift},
        {"description", r.aut.text},
    };
    j["kernel_rank"] = r.kernel_rank;
    j["mcg"] = {
        {"order", r.order_known ? json(r.order.str()) : json(nullptr)},
        {"corank_le_one_simplification", r.corank_le_one_simplification},
    };
    j["extension"] = r.extension_text;
    j["caveats"] = r.caveats;
    return j.dump(indent);
}

MCGReport report_from_json_text(const std::string& text)
{
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw std::invalid_argument(std::string("malformed JSON: ") + e.what());
    }
    MCGReport r;
    r.model_name = j.at("model").get<std::string>();
    r.rank = j.at("rank").get<std::size_t>();
    r.corank = j.at("corank").get<std::size_t>();
    r.even = j.at("even").get<bool>();
    r.spin = j.at("spin").get<bool>();
    r.boundary_components = j.at("boundary_components").get<std::size_t>();
    r.theta_rank = j.at("theta_rank").get<std::size_t>();
    r.torelli_free_rank = j.at("torelli").at("free_rank").get<std::size_t>();
    r.torelli_two_torsion = j.at("torelli").at("two_torsion_rank").get<std::size_t>();
    const auto& aj = j.at("aut_boundary");
    r.aut.kind = aut_kind_from_string(aj.at("kind").get<std::string>());
    r.aut.finite = aj.at("finite").get<bool>();
    if (!aj.at("order").is_null())
        r.aut.order = Int(aj.at("order").get<std::string>());
    if (!aj.at("lifted_order").is_null())
        r.aut.lifted_order = Int(aj.at("lifted_order").get<std::string>());
    r.aut.lift_certified = aj.at("lift_certified").get<bool>();
    r.aut.all_lift = aj.at("all_lift").get<bool>();
    r.aut.text = aj.at("description").get<std::string>();
    r.kernel_rank = j.at("kernel_rank").get<std::size_t>();
    const auto& mj = j.at("mcg");
    r.order_known = !mj.at("order").is_null();
    if (r.order_known)
        r.order = Int(mj.at("order").get<std::string>());
    r.corank_le_one_simplification = mj.at("corank_le_one_simplification").get<bool>();
    r.extension_text = j.at("extension").get<std::string>();
    r.caveats = j.at("caveats").get<std::vector<std::string>>();
    return r;
}

std::string report_to_text(const MCGReport& r)
{
    std::ostringstream out;
    out << "model: " << r.model_name << '\n';
    out << "form: rank " << r.rank << ", corank " << r.corank << ", " << (r.even ? "even" : "odd")
        << '\n';
    out << "spin: " << (r.spin ? "yes" : "no") << '\n';
    out << "boundary components: " << r.boundary_components << '\n';
    out << "theta rank: " << r.theta_rank << '\n';
    out << "torelli: free rank " << r.torelli_free_rank << ", 2-torsion rank "
        << r.torelli_two_torsion << '\n';
    out << "aut_boundary: " << r.aut.text << '\n';
    if (r.aut.lift_certified)
        out << "lifting: " << r.aut.lifted_order << " of " << r.aut.order
            << " rel-boundary isometries lift to variations\n";
    out << "kernel rank: " << r.kernel_rank << '\n';
    out << "extension: " << r.extension_text << '\n';
    if (r.corank_le_one_simplification)
        out << "note: corank <= 1, so the variation group and the lifting isometries coincide\n";
    if (r.order_known) {
        if (r.order == 1)
            out << "mcg: trivial group (order: 1)\n";
        else
            out << "mcg: finite, order: " << r.order << '\n';
    } else {
        out << "mcg: order not determined (see extension data)\n";
    }
    if (r.caveats.empty()) {
        out << "caveats: none\n";
    } else {
        out << "caveats:\n";
        for (const auto& c : r.caveats)
            out << "  - " << c << '\n';
    }
    return out.str();
}

std::string ss_report_to_json_text(const SSReport& r, int indent)
{
    json j;
    j["n"] = r.n;
    j["spin"] = r.spin;
    j["w"] = r.w.to_string();
    j["e3_22"] = {{"dim", r.e3_22_dim}, {"generated_by_w_dual", r.e3_22_generated_by_w_dual}};
    json duals = json::array();
    for (const auto& m : r.e3_40.index_two_duals)
        duals.push_back(monomial_to_string(m));
    j["e3_40"] = {{"free_rank", r.e3_40.free_rank},
                  {"unit_generators", r.e3_40.unit_generators},
                  {"index_two_generators", r.e3_40.index_two_generators},
                  {"index_two_duals", std::move(duals)}};
    j["e3_41"] = {{"dim", r.e3_41_dim}};
    j["omega4_summands"] = r.omega4_summands;
    j["omega5_zero"] = r.omega5_zero;
    return j.dump(indent);
}

std::string ss_report_to_text(const SSReport& r)
{
    std::ostringstream out;
    out << "n: " << r.n << ", " << (r.spin ? "spin" : "non-spin") << ", w = " << r.w.to_string()
        << '\n';
    out << "E3^{2,2}: dim " << r.e3_22_dim;
    if (r.e3_22_generated_by_w_dual)
        out << " (generated by the dual of w)";
    out << '\n';
    out << "E3^{4,0}: free rank " << r.e3_40.free_rank << ", index-2 generators "
        << r.e3_40.index_two_generators << ", unit generators " << r.e3_40.unit_generators << '\n';
    out << "E3^{4,1}: dim " << r.e3_41_dim << '\n';
    out << "omega4 summands:";
    for (const auto& s : r.omega4_summands)
        out << ' ' << '[' << s << ']';
    out << '\n';
    out << "omega5_zero: " << (r.omega5_zero ? "true" : "false") << '\n';
    return out.str();
}

}  // namespace mcg4
