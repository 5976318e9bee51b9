#include "imatch/json_io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace imatch {

namespace {

using json = nlohmann::ordered_json;

const char* kind_name(ValueKind kind) {
    switch (kind) {
        case ValueKind::BilateralUniform: return "bilateral_uniform";
        case ValueKind::TwoPointOrdered: return "two_point_ordered";
        case ValueKind::AlmostEquivalent4Point: return "almost_equivalent_4point";
        case ValueKind::FixedMatrices: return "fixed_matrices";
    }
    return "unknown";
}

ValueKind kind_from_name(const std::string& name) {
    if (name == "bilateral_uniform") return ValueKind::BilateralUniform;
    if (name == "two_point_ordered") return ValueKind::TwoPointOrdered;
    if (name == "almost_equivalent_4point") return ValueKind::AlmostEquivalent4Point;
    if (name == "fixed_matrices") return ValueKind::FixedMatrices;
    throw std::invalid_argument("unknown value model kind: " + name);
}

std::vector<double> matrix_field(const json& j, const char* key, std::size_t expected) {
    if (!j.contains(key)) throw std::invalid_argument(std::string("missing field: ") + key);
    std::vector<double> flat;
    const json& arr = j.at(key);
    if (!arr.is_array()) throw std::invalid_argument(std::string(key) + " must be an array");
    for (const json& item : arr) {
        if (item.is_array())
            for (const json& cell : item) flat.push_back(cell.get<double>());
        else
            flat.push_back(item.get<double>());
    }
    if (flat.size() != expected)
        throw std::invalid_argument(std::string(key) + " has the wrong number of entries");
    return flat;
}

// Scalar prior broadcast, or a full matrix.
std::vector<double> prior_field(const json& params, const char* key, std::size_t expected) {
    if (!params.contains(key)) return std::vector<double>(expected, 0.5);
    const json& field = params.at(key);
    if (field.is_number()) return std::vector<double>(expected, field.get<double>());
    std::vector<double> flat;
    for (const json& item : field) {
        if (item.is_array())
            for (const json& cell : item) flat.push_back(cell.get<double>());
        else
            flat.push_back(item.get<double>());
    }
    if (flat.size() != expected)
        throw std::invalid_argument(std::string(key) + " has the wrong number of entries");
    return flat;
}

}  // namespace

std::string instance_to_json(const Instance& inst) {
    json out;
    out["n"] = inst.n;
    out["m"] = inst.m;
    out["kind"] = kind_name(inst.model.kind());
    json params = json::object();
    switch (inst.model.kind()) {
        case ValueKind::BilateralUniform: {
            const UniformParams& u = inst.model.uniform_params();
            params["v_center"] = u.v_center;
            params["v_half_width"] = u.v_half_width;
            params["u_center"] = u.u_center;
            params["u_half_width"] = u.u_half_width;
            if (!u.v_centers.empty()) params["v_centers"] = u.v_centers;
            break;
        }
        case ValueKind::AlmostEquivalent4Point: {
            const AlmostEquivalentParams& a = inst.model.almost_params();
            params["expected"] = a.expected;
            params["high_threshold"] = a.high_threshold;
            params["low_threshold"] = a.low_threshold;
            params["high_point"] = a.high_point;
            params["low_point"] = a.low_point;
            params["mid_low_point"] = a.mid_low_point;
            params["phi_high"] = a.phi_high;
            params["phi_low"] = a.phi_low;
            break;
        }
        case ValueKind::FixedMatrices:
            params["prior_v"] = inst.model.priors_v();
            params["prior_u"] = inst.model.priors_u();
            break;
        case ValueKind::TwoPointOrdered:
            break;
    }
    out["params"] = std::move(params);
    if (inst.model.kind() == ValueKind::FixedMatrices) {
        out["v"] = inst.model.fixed_v();
        out["u"] = inst.model.fixed_u();
    }
    return out.dump(2) + "\n";
}

Instance instance_from_json(const std::string& text) {
    json in;
    try {
        in = json::parse(text);
    } catch (const json::parse_error& e) {
        throw std::invalid_argument(std::string("instance JSON is malformed: ") + e.what());
    }
    const int n = in.at("n").get<int>();
    const int m = in.at("m").get<int>();
    const ValueKind kind = kind_from_name(in.at("kind").get<std::string>());
    const json params = in.value("params", json::object());
    const std::size_t vs = static_cast<std::size_t>(n) * m;

    switch (kind) {
        case ValueKind::BilateralUniform: {
            UniformParams u;
            u.v_center = params.value("v_center", 0.5);
            u.v_half_width = params.value("v_half_width", 0.5);
            u.u_center = params.value("u_center", 0.5);
            u.u_half_width = params.value("u_half_width", 0.5);
            if (params.contains("v_centers")) u.v_centers = matrix_field(params, "v_centers", vs);
            return Instance(n, m, ValueModel::bilateral_uniform(n, m, std::move(u)));
        }
        case ValueKind::TwoPointOrdered:
            return Instance(n, m, ValueModel::two_point_ordered(n, m));
        case ValueKind::AlmostEquivalent4Point: {
            AlmostEquivalentParams a;
            a.expected = params.value("expected", a.expected);
            a.high_threshold = params.value("high_threshold", a.high_threshold);
            a.low_threshold = params.value("low_threshold", a.low_threshold);
            a.high_point = params.value("high_point", a.high_point);
            a.low_point = params.value("low_point", a.low_point);
            a.mid_low_point = params.value("mid_low_point", a.mid_low_point);
            a.phi_high = params.value("phi_high", a.phi_high);
            a.phi_low = params.value("phi_low", a.phi_low);
            return Instance(n, m, ValueModel::almost_equivalent(n, m, a));
        }
        case ValueKind::FixedMatrices: {
            std::vector<double> v = matrix_field(in, "v", vs);
            std::vector<double> u = matrix_field(in, "u", vs);
            std::vector<double> pv = prior_field(params, "prior_v", vs);
            std::vector<double> pu = prior_field(params, "prior_u", vs);
            return Instance(n, m, ValueModel::fixed(n, m, std::move(v), std::move(u),
                                                    std::move(pv), std::move(pu)));
        }
    }
    throw std::logic_error("unreachable value kind");
}

std::string matching_to_json(const Matching& matching) {
    json out;
    out["n"] = matching.n();
    out["m"] = matching.m();
    json pairs = json::array();
    for (int i = 0; i < matching.n(); ++i) {
        const int j = matching.position_of(i);
        if (j >= 0) pairs.push_back({i + 1, j + 1});
    }
    out["pairs"] = std::move(pairs);
    return out.dump(2) + "\n";
}

Matching matching_from_json(const std::string& text) {
    json in;
    try {
        in = json::parse(text);
    } catch (const json::parse_error& e) {
        throw std::invalid_argument(std::string("matching JSON is malformed: ") + e.what());
    }
    Matching matching(in.at("n").get<int>(), in.at("m").get<int>());
    for (const json& pair : in.at("pairs")) {
        const int i = pair.at(0).get<int>();
        const int j = pair.at(1).get<int>();
        if (i < 1 || i > matching.n() || j < 1 || j > matching.m())
            throw std::invalid_argument("matching pair out of range");
        if (matching.applicant_matched(i - 1) || matching.position_matched(j - 1))
            throw std::invalid_argument("matching pairs an agent twice");
        matching.pair(i - 1, j - 1);
    }
    return matching;
}

std::string ledger_to_json(const InterviewLedger& ledger) {
    json out;
    out["n"] = ledger.n();
    out["m"] = ledger.m();
    json records = json::array();
    for (const InterviewRecord& rec : ledger.records()) {
        records.push_back({{"applicant", rec.applicant + 1},
                           {"position", rec.position + 1},
                           {"v", rec.v},
                           {"u", rec.u}});
    }
    out["records"] = std::move(records);
    return out.dump(2) + "\n";
}

InterviewLedger ledger_from_json(const std::string& text) {
    json in;
    try {
        in = json::parse(text);
    } catch (const json::parse_error& e) {
        throw std::invalid_argument(std::string("ledger JSON is malformed: ") + e.what());
    }
    InterviewLedger ledger(in.at("n").get<int>(), in.at("m").get<int>());
    for (const json& rec : in.at("records")) {
        ledger.add(rec.at("applicant").get<int>() - 1, rec.at("position").get<int>() - 1,
                   rec.at("v").get<double>(), rec.at("u").get<double>());
    }
    return ledger;
}

std::string stability_report_to_json(const StabilityReport& report) {
    json out;
    out["is_interim_stable"] = report.is_interim_stable;
    json uninterviewed = json::array();
    for (const auto& [i, j] : report.uninterviewed_matched_pairs)
        uninterviewed.push_back({{"applicant", i + 1}, {"position", j + 1}});
    out["uninterviewed_matched_pairs"] = std::move(uninterviewed);
    json blocking = json::array();
    for (const auto& [i, j] : report.blocking_pairs)
        blocking.push_back({{"applicant", i + 1}, {"position", j + 1}});
    out["blocking_pairs"] = std::move(blocking);
    return out.dump(2) + "\n";
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::invalid_argument("cannot open for writing: " + path);
    out << content;
    if (!out) throw std::runtime_error("failed writing: " + path);
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::invalid_argument("cannot open: " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

Instance load_instance(const std::string& path) { return instance_from_json(read_file(path)); }
Matching load_matching(const std::string& path) { return matching_from_json(read_file(path)); }
InterviewLedger load_ledger(const std::string& path) { return ledger_from_json(read_file(path)); }

}  // namespace imatch
