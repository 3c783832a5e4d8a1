#include "comax/json_io.hpp"

#include <fstream>
#include <sstream>

namespace comax {

namespace {

json flag_to_json(const Flag& f) {
    json j;
    if (f.known())
        j["value"] = *f.value;
    else
        j["error"] = f.error;
    return j;
}

json subspace_to_json(const Subspace& s) {
    json j;
    j["ambient_dim"] = s.ambient_dim;
    j["basis"] = mat_to_json(s.basis);
    return j;
}

} // namespace

json mat_to_json(const Mat& m) {
    json rows = json::array();
    for (int i = 0; i < m.rows; ++i) {
        json row = json::array();
        for (int j = 0; j < m.cols; ++j) row.push_back(FieldSpec::format_scalar(m.at(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

json coalgebra_to_json(const Coalgebra& c) {
    json j;
    j["schema"] = "coalgebra";
    j["field"] = c.field.name();
    j["labels"] = c.labels;
    json delta = json::array();
    for (int idx = 0; idx < c.dim(); ++idx)
        for (const DeltaTerm& t : c.delta[idx])
            delta.push_back(json::array(
                {idx, t.left, t.right, FieldSpec::format_scalar(t.coeff)}));
    j["delta"] = std::move(delta);
    json eps = json::array();
    for (const Scalar& e : c.eps) eps.push_back(FieldSpec::format_scalar(e));
    j["eps"] = std::move(eps);
    return j;
}

Coalgebra coalgebra_from_json(const json& j) {
    require(j.is_object() && j.value("schema", "") == "coalgebra", ErrorKind::ParseError,
            "not a coalgebra JSON document");
    Coalgebra c;
    c.field = FieldSpec::parse(j.at("field").get<std::string>());
    c.labels = j.at("labels").get<std::vector<std::string>>();
    const int n = c.dim();
    c.delta.resize(n);
    c.eps.assign(n, c.field.zero());
    for (const json& row : j.at("delta")) {
        require(row.is_array() && row.size() == 4, ErrorKind::ParseError,
                "delta entries must be [c,a,b,coeff]");
        int idx = row[0].get<int>(), a = row[1].get<int>(), b = row[2].get<int>();
        require(idx >= 0 && idx < n && a >= 0 && a < n && b >= 0 && b < n, ErrorKind::ParseError,
                "delta index out of range");
        c.delta[idx].push_back({a, b, c.field.parse_scalar(row[3].get<std::string>())});
    }
    const json& eps = j.at("eps");
    require(int(eps.size()) == n, ErrorKind::ParseError, "eps length mismatch");
    for (int i = 0; i < n; ++i) c.eps[i] = c.field.parse_scalar(eps[i].get<std::string>());
    c.sort_terms();
    return c;
}

json algebra_to_json(const Algebra& a) {
    json j;
    j["schema"] = "algebra";
    j["field"] = a.field.name();
    j["labels"] = a.labels;
    json mult = json::array();
    const int n = a.dim();
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (const MultTerm& t : a.terms(x, y))
                mult.push_back(json::array({x, y, t.idx, FieldSpec::format_scalar(t.coeff)}));
    j["mult"] = std::move(mult);
    json unit = json::array();
    for (const Scalar& u : a.unit) unit.push_back(FieldSpec::format_scalar(u));
    j["unit"] = std::move(unit);
    return j;
}

Algebra algebra_from_json(const json& j) {
    require(j.is_object() && j.value("schema", "") == "algebra", ErrorKind::ParseError,
            "not an algebra JSON document");
    Algebra a;
    a.field = FieldSpec::parse(j.at("field").get<std::string>());
    a.labels = j.at("labels").get<std::vector<std::string>>();
    const int n = a.dim();
    a.mult.assign(size_t(n) * n, {});
    a.unit.assign(n, a.field.zero());
    for (const json& row : j.at("mult")) {
        require(row.is_array() && row.size() == 4, ErrorKind::ParseError,
                "mult entries must be [a,b,c,coeff]");
        int x = row[0].get<int>(), y = row[1].get<int>(), z = row[2].get<int>();
        require(x >= 0 && x < n && y >= 0 && y < n && z >= 0 && z < n, ErrorKind::ParseError,
                "mult index out of range");
        a.mult[size_t(x) * n + y].push_back({z, a.field.parse_scalar(row[3].get<std::string>())});
    }
    const json& unit = j.at("unit");
    require(int(unit.size()) == n, ErrorKind::ParseError, "unit length mismatch");
    for (int i = 0; i < n; ++i) a.unit[i] = a.field.parse_scalar(unit[i].get<std::string>());
    a.sort_terms();
    return a;
}

json cover_to_json(const Coalgebra& c, const CoalgebraCover& cov) {
    json j;
    j["schema"] = "cover";
    j["coalgebra"] = coalgebra_to_json(c);
    j["d"] = coalgebra_to_json(cov.d);
    j["pi"] = mat_to_json(cov.pi);
    j["kernel"] = subspace_to_json(cov.kernel);
    j["flags"] = {{"surjective", cov.flags.surjective},
                  {"kernel_small", cov.flags.kernel_small},
                  {"codense", cov.flags.codense},
                  {"maximal_checked", cov.flags.maximal_checked}};
    j["dims"] = {{"c", c.dim()}, {"d", cov.d.dim()}, {"kernel", cov.kernel.dim()}};
    return j;
}

json report_to_json(const Coalgebra& c, const PropertyReport& r) {
    json j;
    j["schema"] = "report";
    j["dim"] = c.dim();
    j["field"] = c.field.name();
    j["cocommutative"] = r.cocommutative;
    j["non_singular"] = flag_to_json(r.non_singular);
    j["cosemisimple"] = flag_to_json(r.cosemisimple);
    j["cosemiprime"] = flag_to_json(r.cosemiprime);
    j["hereditary"] = flag_to_json(r.hereditary);
    j["coprime_simple"] = flag_to_json(r.coprime_simple);
    j["copolyform_left"] = flag_to_json(r.copolyform_left);
    j["copolyform_right"] = flag_to_json(r.copolyform_right);
    j["self_injective_dual"] = flag_to_json(r.self_injective_dual);
    j["coradical_dim"] = r.coradical_dim;
    j["radical_dim"] = r.radical_dim;
    j["cover"] = r.cover_summary;
    json certs;
    if (r.singular_witness) certs["singular_submodule"] = subspace_to_json(*r.singular_witness);
    if (r.radical_witness) certs["dual_radical"] = subspace_to_json(*r.radical_witness);
    if (r.coradical_witness) certs["coradical"] = subspace_to_json(*r.coradical_witness);
    if (r.dual_hull_dim >= 0) certs["dual_hull_dim"] = r.dual_hull_dim;
    j["certificates"] = std::move(certs);
    return j;
}

std::string dump_canonical(const json& j) { return j.dump(2) + "\n"; }

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    require(in.good(), ErrorKind::InvalidArgument, "cannot read file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    require(out.good(), ErrorKind::InvalidArgument, "cannot write file: " + path);
    out << content;
}

} // namespace comax
