#include "covmf/serialize.hpp"

#include <algorithm>
#include <cctype>

#include "covmf/error.hpp"

namespace covmf {

using nlohmann::json;

namespace {

void check_version(const json& j) {
    if (j.contains("format_version") && j.at("format_version") != "1")
        raise(Errc::BadFormat, "unsupported format_version");
}

int require_int(const json& j, const char* key) {
    if (!j.contains(key) || !j.at(key).is_number_integer())
        raise(Errc::BadFormat, std::string("missing integer field '") + key + "'");
    return j.at(key).get<int>();
}

std::string require_string(const json& j, const char* key) {
    if (!j.contains(key) || !j.at(key).is_string())
        raise(Errc::BadFormat, std::string("missing string field '") + key + "'");
    return j.at(key).get<std::string>();
}

// Largest x-index mentioned in any of the strings, for files that omit the
// variable count.
int infer_num_vars(const std::vector<std::string>& texts) {
    int max_index = -1;
    for (const auto& s : texts) {
        for (std::size_t i = 0; i + 1 < s.size(); ++i) {
            if (s[i] != 'x' || !std::isdigit(static_cast<unsigned char>(s[i + 1]))) continue;
            std::size_t j = i + 1;
            int v = 0;
            while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j])))
                v = v * 10 + (s[j++] - '0');
            max_index = std::max(max_index, v);
        }
    }
    return max_index + 1;
}

} // namespace

json to_json(const BaseVariety& v) {
    json j;
    if (v.is_projective_space()) {
        j["kind"] = "P";
        j["N"] = v.ambient_dim();
    } else {
        j["kind"] = "CI";
        j["N"] = v.ambient_dim();
        json forms = json::array();
        for (const auto& f : v.forms()) forms.push_back(format_poly(f));
        j["forms"] = forms;
    }
    return j;
}

BaseVariety base_variety_from_json(const json& j) {
    std::string kind = require_string(j, "kind");
    int n = require_int(j, "N");
    if (kind == "P") return BaseVariety::projective_space(n);
    if (kind != "CI") raise(Errc::BadFormat, "base variety kind must be 'P' or 'CI'");
    Ring ring{1, n + 1, false, 1};
    std::vector<MultiPoly> forms;
    if (j.contains("forms"))
        for (const auto& t : j.at("forms"))
            forms.push_back(parse_poly(ring, t.get<std::string>(), true));
    return BaseVariety::complete_intersection(n, std::move(forms));
}

json to_json(const ProductDecomposition& dec) {
    json j;
    j["d"] = dec.d;
    j["n"] = dec.degree_n;
    json terms = json::array();
    for (const auto& tuple : dec.terms) {
        json t = json::array();
        for (const auto& f : tuple) t.push_back(format_poly(f));
        terms.push_back(t);
    }
    j["terms"] = terms;
    return j;
}

ProductDecomposition decomposition_from_json(const json& j, const Ring& base_ring) {
    check_version(j);
    ProductDecomposition dec;
    dec.d = require_int(j, "d");
    dec.degree_n = require_int(j, "n");
    if (!j.contains("terms") || !j.at("terms").is_array())
        raise(Errc::BadFormat, "decomposition needs a 'terms' array");
    for (const auto& tuple : j.at("terms")) {
        std::vector<MultiPoly> fs;
        for (const auto& t : tuple)
            fs.push_back(parse_poly(base_ring, t.get<std::string>(), true));
        if (static_cast<int>(fs.size()) != dec.d)
            raise(Errc::BadFormat, "every decomposition term needs exactly d factors");
        dec.terms.push_back(std::move(fs));
    }
    return dec;
}

json to_json(const MatrixRoot& root) {
    json j;
    j["d"] = root.d;
    j["size"] = root.size;
    j["n"] = root.n;
    j["field_order"] = root.field_order;
    j["num_vars"] = root.q.ring().num_vars;
    j["term_count"] = root.term_count;
    auto matrix_to_json = [](const PolyMatrix& m) {
        json rows = json::array();
        for (std::size_t i = 0; i < m.rows(); ++i) {
            json row = json::array();
            for (std::size_t k = 0; k < m.cols(); ++k) row.push_back(format_poly(m.at(i, k)));
            rows.push_back(row);
        }
        return rows;
    };
    j["entries"] = matrix_to_json(root.q);
    if (root.cofactor) j["cofactor_entries"] = matrix_to_json(*root.cofactor);
    j["target"] = format_poly(root.target);
    return j;
}

MatrixRoot matrix_root_from_json(const json& j) {
    check_version(j);
    MatrixRoot root;
    root.d = require_int(j, "d");
    root.size = require_int(j, "size");
    root.n = require_int(j, "n");
    root.field_order = require_int(j, "field_order");
    root.term_count = j.contains("term_count") ? j.at("term_count").get<int>() : 1;

    int num_vars = 0;
    if (j.contains("num_vars")) {
        num_vars = j.at("num_vars").get<int>();
    } else {
        std::vector<std::string> texts;
        texts.push_back(require_string(j, "target"));
        for (const auto& row : j.at("entries"))
            for (const auto& e : row) texts.push_back(e.get<std::string>());
        num_vars = std::max(1, infer_num_vars(texts));
    }
    Ring ring{root.field_order, num_vars, true, root.n};

    auto matrix_from = [&](const json& rows) {
        std::size_t m = rows.size();
        PolyMatrix mat(m, m, ring);
        for (std::size_t i = 0; i < m; ++i) {
            const auto& row = rows.at(i);
            if (row.size() != m) raise(Errc::BadFormat, "root matrix must be square");
            for (std::size_t k = 0; k < m; ++k)
                mat.at(i, k) = parse_poly(ring, row.at(k).get<std::string>());
        }
        return mat;
    };
    if (!j.contains("entries")) raise(Errc::BadFormat, "root needs 'entries'");
    root.q = matrix_from(j.at("entries"));
    if (static_cast<int>(root.q.rows()) != root.size)
        raise(Errc::BadFormat, "recorded size disagrees with the entry matrix");
    if (j.contains("cofactor_entries")) root.cofactor = matrix_from(j.at("cofactor_entries"));
    root.target = parse_poly(ring, require_string(j, "target"));
    return root;
}

json to_json(const UlrichCertificate& cert) {
    json j;
    j["format_version"] = "1";
    j["base"] = to_json(cert.base);
    j["n"] = cert.n;
    j["d"] = cert.d;
    j["rank"] = cert.rank;
    j["decomposition"] = to_json(cert.decomposition);
    j["root"] = to_json(cert.root);
    j["verified"] = cert.verified;
    j["log"] = cert.log;
    return j;
}

UlrichCertificate certificate_from_json(const json& j) {
    check_version(j);
    if (!j.contains("base")) raise(Errc::BadFormat, "certificate needs 'base'");
    BaseVariety base = base_variety_from_json(j.at("base"));
    UlrichCertificate cert{base,
                           require_int(j, "n"),
                           require_int(j, "d"),
                           ProductDecomposition{},
                           matrix_root_from_json(j.at("root")),
                           require_int(j, "rank"),
                           j.value("verified", false),
                           {}};
    cert.decomposition = decomposition_from_json(j.at("decomposition"), base.ring());
    if (j.contains("log"))
        for (const auto& line : j.at("log")) cert.log.push_back(line.get<std::string>());
    return cert;
}

json to_json(const AbelianCoverSpec& spec) {
    json j;
    json stages = json::array();
    for (const auto& s : spec.stages) {
        json st;
        st["d"] = s.d;
        st["m_deg"] = s.m_deg;
        if (s.branch_ref) st["branch_ref"] = *s.branch_ref;
        if (s.terms) st["terms"] = *s.terms;
        stages.push_back(st);
    }
    j["stages"] = stages;
    return j;
}

AbelianCoverSpec cover_spec_from_json(const json& j) {
    check_version(j);
    if (!j.contains("stages") || !j.at("stages").is_array())
        raise(Errc::BadFormat, "cover spec needs a 'stages' array");
    AbelianCoverSpec spec;
    for (const auto& st : j.at("stages")) {
        CoverStage stage;
        stage.d = require_int(st, "d");
        stage.m_deg = require_int(st, "m_deg");
        if (st.contains("branch_ref")) stage.branch_ref = st.at("branch_ref").get<std::string>();
        if (st.contains("terms")) stage.terms = st.at("terms").get<int>();
        spec.stages.push_back(std::move(stage));
    }
    return spec;
}

json to_json(const FeasibilityReport& rep) {
    json j;
    j["format_version"] = "1";
    switch (rep.verdict) {
        case FeasibilityVerdict::Feasible: j["verdict"] = "Feasible"; break;
        case FeasibilityVerdict::InfeasibleEtale: j["verdict"] = "InfeasibleEtale"; break;
        case FeasibilityVerdict::InfeasibleH0: j["verdict"] = "InfeasibleH0"; break;
    }
    j["genus_base"] = rep.arithmetic.g_base;
    j["genus_top"] = rep.arithmetic.g_top;
    j["degree"] = rep.arithmetic.d;
    j["branch_degree"] = rep.arithmetic.branch_degree;
    j["ramification_degree"] = rep.arithmetic.ramification_degree;
    j["rank"] = rep.rank;
    j["forced_degree"] = rep.forced_degree;
    j["required_h0"] = rep.required_h0;
    if (rep.h0_bound) j["h0_bound"] = *rep.h0_bound;
    j["narrative"] = rep.narrative;
    return j;
}

} // namespace covmf
