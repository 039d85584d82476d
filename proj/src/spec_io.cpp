#include "gfc/spec_io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace gfc {

namespace {

using ordered_json = nlohmann::ordered_json;

CurveParams parse_curve_record(const nlohmann::json& record) {
    if (!record.is_object() || !record.contains("k") || !record.contains("n")) {
        throw std::invalid_argument("curve record needs integer fields 'k' and 'n'");
    }
    if (!record["k"].is_number_integer() || !record["n"].is_number_integer()) {
        throw std::invalid_argument("'k' and 'n' must be integers");
    }
    CurveParams curve;
    curve.k = record["k"].get<long>();
    curve.n = record["n"].get<long>();
    if (record.contains("lambdas")) {
        if (!record["lambdas"].is_array()) {
            throw std::invalid_argument("'lambdas' must be a list of \"p/q\" strings");
        }
        for (const auto& entry : record["lambdas"]) {
            if (!entry.is_string()) {
                throw std::invalid_argument("'lambdas' entries must be \"p/q\" strings");
            }
            curve.lambdas.push_back(parse_rational(entry.get<std::string>()));
        }
    }
    return curve;
}

ordered_json osculation_to_json(const OsculationReport& report) {
    ordered_json j;
    j["wedge_orders"] = report.wedge_orders;
    j["ramification"] = report.ramification;
    j["alpha"] = report.alpha;
    j["hyperosculating"] = report.hyperosculating;
    return j;
}

ordered_json weierstrass_to_json(const WeierstrassReport& report) {
    ordered_json j;
    j["gaps"] = report.gaps;
    j["weight"] = report.weight.get_str();
    j["bound"] = report.bound.get_str();
    j["bound_kind"] = report.bound_is_classic ? "classic-weight" : "lower-bound";
    j["bound_tight"] = report.bound_tight;
    return j;
}

std::string join_csv_list(const std::vector<long>& values) {
    std::ostringstream out;
    for (std::size_t i = 0; i < values.size(); ++i) out << (i ? ";" : "") << values[i];
    return out.str();
}

}  // namespace

SpecFile parse_spec_file(const std::string& text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw std::invalid_argument(std::string("spec file is not valid JSON: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("curves") || !doc["curves"].is_array() ||
        doc["curves"].empty()) {
        throw std::invalid_argument("spec file needs a non-empty 'curves' list");
    }
    SpecFile spec;
    for (const auto& record : doc["curves"]) {
        spec.curves.push_back(parse_curve_record(record));
    }
    // Atomic rejection: validate everything before any computation starts.
    for (const CurveParams& curve : spec.curves) validate(curve);

    if (doc.contains("options")) {
        const auto& options = doc["options"];
        if (!options.is_object()) throw std::invalid_argument("'options' must be an object");
        if (options.contains("truncation")) spec.options.truncation = options["truncation"].get<long>();
        if (options.contains("samples")) spec.options.samples = options["samples"].get<long>();
        if (options.contains("seed")) spec.options.seed = options["seed"].get<unsigned long long>();
    }
    return spec;
}

SpecFile load_spec_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open spec file: " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_spec_file(buffer.str());
}

std::string analyses_to_json(const std::vector<CurveAnalysis>& analyses) {
    ordered_json root;
    root["curves"] = ordered_json::array();
    for (const CurveAnalysis& analysis : analyses) {
        ordered_json curve;
        curve["k"] = analysis.curve.k;
        curve["n"] = analysis.curve.n;
        ordered_json lambdas = ordered_json::array();
        for (const Rational& lambda : analysis.curve.lambdas) {
            lambdas.push_back(to_string(lambda));
        }
        curve["lambdas"] = lambdas;
        curve["genus"] = analysis.genus_value.get_str();
        curve["degree"] = analysis.degree_value.get_str();
        curve["fixed_points"] = analysis.fixed_point_total.get_str();
        curve["canonical_degree"] = analysis.canonical_deg;
        curve["weight_bound"] = analysis.classes.front().weierstrass.bound.get_str();
        curve["weight_bound_kind"] =
            analysis.curve.n >= 3 ? "lower-bound" : "classic-weight";
        ordered_json expected;
        expected["b1"] = analysis.expected_totals.b1.get_str();
        if (analysis.expected_totals.rest) {
            expected["b_rest"] = analysis.expected_totals.rest->get_str();
        }
        curve["expected_totals"] = expected;

        curve["classes"] = ordered_json::array();
        for (const ClassAnalysis& cls : analysis.classes) {
            ordered_json c;
            c["vanishing_coordinate"] = cls.vanishing_coordinate;
            c["multiplicity"] = cls.multiplicity.get_str();
            c["branch_value"] = to_string(cls.branch_value);
            ordered_json relocated = ordered_json::array();
            for (const Rational& lambda : cls.relocated_lambdas) {
                relocated.push_back(to_string(lambda));
            }
            c["relocated_lambdas"] = relocated;
            c["osculation"] = osculation_to_json(cls.osculation);
            c["weierstrass"] = weierstrass_to_json(cls.weierstrass);
            curve["classes"].push_back(c);
        }

        ordered_json summed = ordered_json::array();
        for (const Integer& total : analysis.summed_totals) summed.push_back(total.get_str());
        curve["summed_totals"] = summed;
        ordered_json ranks = ordered_json::array();
        for (const Integer& rank : analysis.plucker.ranks) ranks.push_back(rank.get_str());
        ordered_json plucker;
        plucker["ranks"] = ranks;
        plucker["consistent"] = analysis.plucker.consistent;
        curve["plucker"] = plucker;
        curve["weight_total"] = analysis.weight_total.get_str();

        ordered_json verdicts;
        verdicts["ramification_theorem"] = analysis.ramification_ok;
        verdicts["total_ramification"] = analysis.totals_ok;
        verdicts["plucker_closure"] = analysis.plucker_ok;
        verdicts["dimension"] = analysis.dimension_ok;
        verdicts["weight"] = analysis.weight_ok;
        curve["verdicts"] = verdicts;

        root["curves"].push_back(curve);
    }
    return root.dump(2) + "\n";
}

std::string analyses_to_csv(const std::vector<CurveAnalysis>& analyses) {
    std::ostringstream out;
    out << "k,n,lambdas,genus,degree,fixed_points,canonical_degree,"
        << "class,multiplicity,branch_value,wedge_orders,ramification,hyperosculating,"
        << "gaps,weight,bound,bound_kind,bound_tight,plucker_ranks,plucker_consistent\n";
    for (const CurveAnalysis& analysis : analyses) {
        std::ostringstream lambdas;
        for (std::size_t i = 0; i < analysis.curve.lambdas.size(); ++i) {
            lambdas << (i ? ";" : "") << to_string(analysis.curve.lambdas[i]);
        }
        std::ostringstream ranks;
        for (std::size_t i = 0; i < analysis.plucker.ranks.size(); ++i) {
            ranks << (i ? ";" : "") << analysis.plucker.ranks[i].get_str();
        }
        for (const ClassAnalysis& cls : analysis.classes) {
            out << analysis.curve.k << "," << analysis.curve.n << ",\"" << lambdas.str() << "\","
                << analysis.genus_value.get_str() << "," << analysis.degree_value.get_str() << ","
                << analysis.fixed_point_total.get_str() << "," << analysis.canonical_deg << ","
                << cls.vanishing_coordinate << "," << cls.multiplicity.get_str() << ","
                << to_string(cls.branch_value) << "," << join_csv_list(cls.osculation.wedge_orders)
                << "," << join_csv_list(cls.osculation.ramification) << ","
                << (cls.osculation.hyperosculating ? "true" : "false") << ","
                << join_csv_list(cls.weierstrass.gaps) << "," << cls.weierstrass.weight.get_str()
                << "," << cls.weierstrass.bound.get_str() << ","
                << (cls.weierstrass.bound_is_classic ? "classic-weight" : "lower-bound") << ","
                << (cls.weierstrass.bound_tight ? "true" : "false") << ",\"" << ranks.str()
                << "\"," << (analysis.plucker.consistent ? "true" : "false") << "\n";
        }
    }
    return out.str();
}

}  // namespace gfc
