#include "phinmod/io.hpp"

#include <fstream>

#include <json.hpp>

namespace phinmod {

namespace {

Rat parse_rational(const std::string& s) {
    try {
        Rat q(s);
        q.canonicalize();
        return q;
    } catch (const std::exception&) {
        throw IoError("bad rational literal: '" + s + "'");
    }
}

std::string show_rational(const Rat& q) {
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

}  // namespace

Json to_json(const FieldSpec& spec) {
    return Json{{"prime", spec.prime}, {"ramification", spec.ramification}};
}

FieldSpec field_spec_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("prime") || !j.contains("ramification"))
        throw IoError("field spec wants {prime, ramification}");
    return make_field(j["prime"].get<long>(), j["ramification"].get<int>());
}

Json to_json(const FieldElement& x) {
    Json arr = Json::array();
    for (const auto& c : x.coeffs()) arr.push_back(show_rational(c));
    return arr;
}

FieldElement field_element_from_json(const Json& j, const FieldSpec& spec) {
    if (j.is_array()) {
        if ((int)j.size() != spec.ramification)
            throw IoError("field element wants " + std::to_string(spec.ramification) +
                          " coefficients, got " + std::to_string(j.size()));
        std::vector<Rat> coeffs;
        for (const auto& c : j) {
            if (!c.is_string()) throw IoError("field element coefficients must be strings");
            coeffs.push_back(parse_rational(c.get<std::string>()));
        }
        return FieldElement(spec, std::move(coeffs));
    }
    if (j.is_string()) {
        // "q", "q*u^k", or "u^k"
        std::string s = j.get<std::string>();
        std::string qpart = s;
        long upow = 0;
        auto star = s.find("*u^");
        if (star != std::string::npos) {
            qpart = s.substr(0, star);
            upow = std::stol(s.substr(star + 3));
        } else if (s.rfind("u^", 0) == 0) {
            qpart = "1";
            upow = std::stol(s.substr(2));
        } else if (s == "u") {
            qpart = "1";
            upow = 1;
        }
        return FieldElement::unit_u_power(spec, parse_rational(qpart), upow);
    }
    if (j.is_number_integer())
        return FieldElement::from_rational(spec, Rat(j.get<long>()));
    throw IoError("field element wants an array of rationals or a string");
}

Json to_json(const Matrix& m) {
    Json rows = Json::array();
    for (int i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (int j = 0; j < m.cols(); ++j) row.push_back(to_json(m.at(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

Matrix matrix_from_json(const Json& j, const FieldSpec& spec) {
    if (!j.is_array() || j.empty()) throw IoError("matrix wants a nonempty array of rows");
    int rows = (int)j.size();
    int cols = (int)j[0].size();
    Matrix m(rows, cols, spec);
    for (int i = 0; i < rows; ++i) {
        if ((int)j[i].size() != cols) throw IoError("ragged matrix rows");
        for (int c = 0; c < cols; ++c) m.at(i, c) = field_element_from_json(j[i][c], spec);
    }
    return m;
}

Json vec_to_json(const Vec& v) {
    Json arr = Json::array();
    for (const auto& x : v) arr.push_back(to_json(x));
    return arr;
}

Vec vec_from_json(const Json& j, const FieldSpec& spec) {
    if (!j.is_array()) throw IoError("vector wants an array");
    Vec v;
    for (const auto& x : j) v.push_back(field_element_from_json(x, spec));
    return v;
}

Json to_json(const Subspace& s) {
    Json arr = Json::array();
    for (const auto& b : s.basis()) arr.push_back(vec_to_json(b));
    return arr;
}

Json to_json(const PhiNModule& m) {
    Json j;
    j["field"] = to_json(m.field);
    j["hodge"] = Json{{"r", m.hodge.r}, {"s", m.hodge.s}};
    j["phi"] = to_json(m.phi);
    j["N"] = to_json(m.N);
    Json fil_s = Json::array();
    for (const auto& b : m.fil.L1.basis()) fil_s.push_back(vec_to_json(b));
    j["fil_s"] = fil_s;
    Json fil_r = Json::array();
    for (const auto& b : m.fil.L2.basis()) fil_r.push_back(vec_to_json(b));
    j["fil_r"] = fil_r;
    if (m.jordan) {
        Json hint;
        Json eig = Json::array();
        for (const auto& l : m.jordan->eigenvalues) eig.push_back(to_json(l));
        hint["eigenvalues"] = eig;
        if (m.jordan->change_of_basis)
            hint["change_of_basis"] = to_json(*m.jordan->change_of_basis);
        j["jordan"] = hint;
    }
    return j;
}

PhiNModule module_from_json(const Json& j) {
    if (!j.is_object()) throw IoError("module document must be an object");
    for (const char* key : {"field", "hodge", "phi", "N", "fil_s", "fil_r"})
        if (!j.contains(key)) throw IoError(std::string("module document missing '") + key + "'");
    PhiNModule m;
    m.field = field_spec_from_json(j["field"]);
    if (!j["hodge"].contains("r") || !j["hodge"].contains("s"))
        throw IoError("hodge wants {r, s}");
    m.hodge = {j["hodge"]["r"].get<int>(), j["hodge"]["s"].get<int>()};
    m.phi = matrix_from_json(j["phi"], m.field);
    m.N = matrix_from_json(j["N"], m.field);
    if (!j["fil_s"].is_array() || j["fil_s"].size() != 1)
        throw IoError("fil_s wants exactly one spanning vector");
    if (!j["fil_r"].is_array() || j["fil_r"].size() != 2)
        throw IoError("fil_r wants exactly two spanning vectors");
    std::vector<Vec> l1 = {vec_from_json(j["fil_s"][0], m.field)};
    std::vector<Vec> l2 = {vec_from_json(j["fil_r"][0], m.field),
                           vec_from_json(j["fil_r"][1], m.field)};
    m.fil.L1 = Subspace::span(3, m.field, l1);
    m.fil.L2 = Subspace::span(3, m.field, l2);
    if (j.contains("jordan")) {
        JordanHint hint;
        for (const auto& l : j["jordan"]["eigenvalues"])
            hint.eigenvalues.push_back(field_element_from_json(l, m.field));
        if (j["jordan"].contains("change_of_basis"))
            hint.change_of_basis = matrix_from_json(j["jordan"]["change_of_basis"], m.field);
        m.jordan = hint;
    }
    return m;
}

Json to_json(const FamilyInstance& fi) {
    Json j;
    j["id"] = family_name(fi.id);
    j["field"] = to_json(fi.field);
    j["hodge"] = Json{{"r", fi.hodge.r}, {"s", fi.hodge.s}};
    Json eig = Json::array();
    for (const auto& l : fi.eigen_params) eig.push_back(to_json(l));
    j["eigen_params"] = eig;
    Json fil = Json::array();
    for (const auto& l : fi.fil_params) fil.push_back(to_json(l));
    j["fil_params"] = fil;
    return j;
}

FamilyInstance instance_from_json(const Json& j, const FieldSpec& default_spec) {
    if (!j.is_object()) throw IoError("family instance must be an object");
    FamilyInstance fi;
    fi.field = j.contains("field") ? field_spec_from_json(j["field"]) : default_spec;
    if (!j.contains("id") || !j["id"].is_string())
        throw IoError("family instance wants an 'id' string");
    auto id = family_from_name(j["id"].get<std::string>());
    if (!id) throw IoError("unknown family id '" + j["id"].get<std::string>() + "'");
    fi.id = *id;
    if (!j.contains("hodge")) throw IoError("family instance wants 'hodge'");
    fi.hodge = {j["hodge"]["r"].get<int>(), j["hodge"]["s"].get<int>()};
    if (j.contains("eigen_params"))
        for (const auto& l : j["eigen_params"])
            fi.eigen_params.push_back(field_element_from_json(l, fi.field));
    if (j.contains("fil_params"))
        for (const auto& l : j["fil_params"])
            fi.fil_params.push_back(field_element_from_json(l, fi.field));
    return fi;
}

PhiNModule parse_module_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open '" + path + "'");
    Json j;
    try {
        in >> j;
    } catch (const std::exception& ex) {
        throw IoError("parse error in '" + path + "': " + ex.what());
    }
    PhiNModule m = module_from_json(j);
    auto bad = validate_module(m);
    if (!bad.empty()) throw ValidationError(bad.front());
    return m;
}

}  // namespace phinmod
