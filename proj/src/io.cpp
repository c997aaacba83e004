#include "solvlie/io.hpp"

#include <fstream>
#include <sstream>

namespace solvlie {

json field_to_json(const FieldSpec& f) {
    switch (f.kind()) {
        case field_kind::rationals: return json{{"type", "Q"}};
        case field_kind::prime: return json{{"type", "GF"}, {"p", f.p()}};
        case field_kind::extension:
            return json{{"type", "GF"}, {"p", f.p()}, {"deg", f.degree()},
                        {"min_poly", f.min_poly()}};
    }
    throw error("unreachable");
}

FieldSpec field_from_json(const json& j) {
    if (!j.is_object() || !j.contains("type") || !j["type"].is_string())
        throw parse_error("field: expected an object with a \"type\" string");
    const std::string type = j["type"];
    if (type == "Q") return FieldSpec::rationals();
    if (type != "GF") throw parse_error("field: unknown type \"" + type + "\"");
    if (!j.contains("p") || !j["p"].is_number_integer() || j["p"].get<long long>() < 2)
        throw parse_error("field: GF needs a prime \"p\"");
    std::uint64_t p = j["p"].get<std::uint64_t>();
    if (!j.contains("deg")) return FieldSpec::prime_field(p);
    unsigned deg = j["deg"];
    if (!j.contains("min_poly")) return FieldSpec::extension_field(p, deg);
    std::vector<std::uint64_t> mp = j["min_poly"].get<std::vector<std::uint64_t>>();
    return FieldSpec::extension_field(p, deg, std::move(mp));
}

namespace {

mpq_class parse_rational(const std::string& s) {
    mpq_class q;
    if (q.set_str(s, 10) != 0) throw parse_error("bad rational literal \"" + s + "\"");
    q.canonicalize();
    return q;
}

}  // namespace

json scalar_to_json(const Scalar& s) {
    switch (s.field().kind()) {
        case field_kind::rationals: return s.rat().get_str();
        case field_kind::prime: return s.res();
        case field_kind::extension: return s.cvec();
    }
    throw error("unreachable");
}

Scalar scalar_from_json(const FieldSpec& f, const json& j) {
    switch (f.kind()) {
        case field_kind::rationals: {
            if (j.is_string()) return Scalar::rational(f, parse_rational(j.get<std::string>()));
            if (j.is_number_integer()) return Scalar::from_int(f, j.get<long long>());
            throw parse_error("rational scalar: expected \"num/den\" or an integer");
        }
        case field_kind::prime: {
            if (j.is_number_integer()) {
                long long v = j.get<long long>();
                return Scalar::from_int(f, v);
            }
            if (j.is_string()) {
                mpq_class q = parse_rational(j.get<std::string>());
                if (q.get_den() != 1)
                    throw parse_error("prime-field scalar: expected an integer residue");
                return Scalar::from_int(f, static_cast<long long>(q.get_num().get_si()));
            }
            throw parse_error("prime-field scalar: expected an integer");
        }
        case field_kind::extension: {
            if (!j.is_array())
                throw parse_error("extension scalar: expected a coefficient array");
            std::vector<std::uint64_t> c;
            for (const auto& e : j) {
                if (!e.is_number_integer()) throw parse_error("extension scalar: bad coefficient");
                long long v = e.get<long long>();
                long long m = v % static_cast<long long>(f.p());
                if (m < 0) m += static_cast<long long>(f.p());
                c.push_back(static_cast<std::uint64_t>(m));
            }
            if (c.size() != f.degree()) throw parse_error("extension scalar: wrong length");
            return Scalar::coeffs(f, std::move(c));
        }
    }
    throw error("unreachable");
}

json vec_to_json(const Vec& v) {
    json a = json::array();
    for (const Scalar& s : v) a.push_back(scalar_to_json(s));
    return a;
}

Vec vec_from_json(const FieldSpec& f, const json& j, int expect_len) {
    if (!j.is_array()) throw parse_error("vector: expected an array");
    Vec v;
    for (const auto& e : j) v.push_back(scalar_from_json(f, e));
    if (expect_len >= 0 && static_cast<int>(v.size()) != expect_len)
        throw parse_error("vector: wrong length");
    return v;
}

json subspace_to_json(const Subspace& s) {
    json a = json::array();
    for (int i = 0; i < s.dim(); ++i) a.push_back(vec_to_json(s.basis_row(i)));
    return a;
}

Subspace subspace_from_json(const FieldSpec& f, int ambient, const json& j) {
    if (!j.is_array()) throw parse_error("subspace: expected an array of vectors");
    std::vector<Vec> rows;
    for (const auto& e : j) rows.push_back(vec_from_json(f, e, ambient));
    return Subspace::span(f, ambient, rows);
}

json algebra_to_json(const LieAlgebra& L) {
    json j;
    j["field"] = field_to_json(L.field());
    j["dim"] = L.dim();
    if (!L.names().empty()) j["names"] = L.names();
    json brackets = json::array();
    for (int i = 0; i < L.dim(); ++i)
        for (int k = i + 1; k < L.dim(); ++k) {
            const Vec& v = L.c(i, k);
            if (vec_is_zero(v)) continue;
            json coeffs = json::object();
            for (int t = 0; t < L.dim(); ++t)
                if (!v[t].is_zero()) coeffs[std::to_string(t)] = scalar_to_json(v[t]);
            brackets.push_back(json{{"i", i}, {"j", k}, {"coeffs", coeffs}});
        }
    j["brackets"] = std::move(brackets);
    return j;
}

LieAlgebra algebra_from_json(const json& j) {
    if (!j.is_object()) throw parse_error("algebra: expected an object");
    if (!j.contains("field") || !j.contains("dim")) throw parse_error("algebra: missing field/dim");
    FieldSpec f = field_from_json(j["field"]);
    if (!j["dim"].is_number_integer() || j["dim"].get<long long>() < 0)
        throw parse_error("algebra: dim must be a non-negative integer");
    const int n = j["dim"].get<int>();
    if (n > 64) throw parse_error("algebra: dimension too large");
    BracketTable t(f, n);
    if (j.contains("brackets")) {
        if (!j["brackets"].is_array()) throw parse_error("algebra: brackets must be an array");
        for (const auto& b : j["brackets"]) {
            if (!b.contains("i") || !b.contains("j") || !b.contains("coeffs"))
                throw parse_error("algebra: bracket entries need i, j, coeffs");
            const int bi = b["i"], bj = b["j"];
            if (bi < 0 || bj < 0 || bi >= n || bj >= n)
                throw parse_error("algebra: bracket index out of range");
            Vec v = vec_zero(f, n);
            for (const auto& [key, val] : b["coeffs"].items()) {
                int k;
                try {
                    k = std::stoi(key);
                } catch (const std::exception&) {
                    throw parse_error("algebra: bad coefficient key \"" + key + "\"");
                }
                if (k < 0 || k >= n) throw parse_error("algebra: coefficient index out of range");
                v[k] = scalar_from_json(f, val);
            }
            t.set(bi, bj, v);
        }
    }
    std::vector<std::string> names;
    if (j.contains("names")) names = j["names"].get<std::vector<std::string>>();
    return LieAlgebra::make(t, std::move(names));
}

LieAlgebra load_algebra(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw parse_error("cannot open " + path);
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw parse_error("malformed JSON in " + path + ": " + e.what());
    }
    return algebra_from_json(j);
}

void save_json(const std::string& path, const json& j) {
    std::ofstream out(path);
    if (!out) throw error("cannot write " + path);
    out << j.dump(2) << "\n";
}

json decomposition_to_json(const TriangularDecomposition& t) {
    json j;
    json parts = json::array();
    for (const Subspace& a : t.parts) parts.push_back(subspace_to_json(a));
    j["A"] = std::move(parts);
    j["derived_length"] = t.derived_len;
    j["verified"] = t.verified;
    return j;
}

json certificate_to_json(const ACertificate& c) {
    json j;
    j["verdict"] = c.verdict;
    j["method"] = c.method;
    if (c.witness) j["witness"] = json::array({vec_to_json(c.witness->first),
                                               vec_to_json(c.witness->second)});
    if (c.q_space) j["q_set"] = subspace_to_json(*c.q_space);
    return j;
}

namespace {
json tagged_subspace(const Tagged<Subspace>& t) {
    json j;
    if (t.value) {
        j["basis"] = subspace_to_json(*t.value);
        j["method"] = t.tag;
    } else {
        j["absent"] = t.tag;
    }
    return j;
}
}  // namespace

json structure_report_to_json(const StructureReport& r) {
    json j;
    j["nilradical"] = tagged_subspace(r.nilrad);
    j["center"] = subspace_to_json(r.centre);
    j["abelian_socle"] = tagged_subspace(r.asoc);
    if (r.min_ideals.value) {
        json arr = json::array();
        for (const Subspace& a : *r.min_ideals.value) arr.push_back(subspace_to_json(a));
        j["minimal_ideals"] = json{{"basis_list", arr}, {"method", r.min_ideals.tag}};
    } else {
        j["minimal_ideals"] = json{{"absent", r.min_ideals.tag}};
    }
    j["monolith"] = tagged_subspace(r.mono);
    j["frattini"] = tagged_subspace(r.phi);
    if (r.phi_free.value)
        j["phi_free"] = json{{"value", *r.phi_free.value}, {"method", r.phi_free.tag}};
    else
        j["phi_free"] = json{{"absent", r.phi_free.tag}};
    j["solvable"] = r.solvable;
    j["strongly_solvable"] = r.strongly_solv;
    if (r.der_length) j["derived_length"] = *r.der_length;
    return j;
}

json theorem_report_to_json(const TheoremReport& r) {
    json j = json::object();
    for (const auto& [id, v] : r) {
        const char* status = v.kind == verdict_kind::pass
                                 ? "pass"
                                 : v.kind == verdict_kind::fail ? "fail" : "not_applicable";
        json e{{"status", status}};
        if (!v.detail.empty()) e["detail"] = v.detail;
        j[id] = std::move(e);
    }
    return j;
}

std::string subspace_jsonl(const std::vector<Subspace>& subs) {
    std::ostringstream os;
    for (const Subspace& s : subs) os << subspace_to_json(s).dump() << "\n";
    return os.str();
}

}  // namespace solvlie
