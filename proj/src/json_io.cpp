#include "semifield/json_io.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

namespace semifield {

namespace {

const Json& expect(const Json& j, const char* key) {
    auto it = j.find(key);
    if (it == j.end()) fail(Errc::ParseError, std::string("missing field \"") + key + "\"");
    return *it;
}

}  // namespace

Json field_to_json(const FieldCtx& f) {
    Json j;
    j["p"] = f.p();
    j["n"] = f.n();
    j["modulus"] = f.modulus();
    return j;
}

FieldCtx field_from_json(const Json& j) {
    try {
        int p = expect(j, "p").get<int>();
        int n = expect(j, "n").get<int>();
        std::vector<int> modulus = expect(j, "modulus").get<std::vector<int>>();
        return FieldCtx::create(p, n, modulus);
    } catch (const Json::exception& e) {
        fail(Errc::ParseError, std::string("bad field document: ") + e.what());
    }
}

Json carrier_to_json(const Carrier& c) {
    Json j;
    j["kind"] = (c.kind() == Carrier::Kind::Field) ? "field" : "pair";
    j["field"] = field_to_json(c.field());
    return j;
}

Carrier carrier_from_json(const Json& j) {
    try {
        std::string kind = expect(j, "kind").get<std::string>();
        FieldCtx f = field_from_json(expect(j, "field"));
        if (kind == "field") return Carrier::field_carrier(f);
        if (kind == "pair") return Carrier::pair_carrier(f);
        fail(Errc::ParseError, "carrier kind must be \"field\" or \"pair\"");
    } catch (const Json::exception& e) {
        fail(Errc::ParseError, std::string("bad carrier document: ") + e.what());
    }
}

Json presemifield_to_json(const Presemifield& s) {
    Json j;
    j["carrier"] = carrier_to_json(s.carrier());
    j["structure_constants"] = s.structure_constants();
    if (s.aij()) {
        const FieldCtx& f = s.carrier().field();
        Json rows = Json::array();
        for (const auto& row : *s.aij()) {
            Json r = Json::array();
            for (const FElem& v : row) r.push_back(f.enc(v));
            rows.push_back(std::move(r));
        }
        j["aij"] = std::move(rows);
    } else {
        j["aij"] = nullptr;
    }
    j["label"] = s.label();
    return j;
}

Presemifield presemifield_from_json(const Json& j, bool validate) {
    try {
        Carrier carrier = carrier_from_json(expect(j, "carrier"));
        std::vector<int> sc = expect(j, "structure_constants").get<std::vector<int>>();
        std::string label = expect(j, "label").get<std::string>();
        int n = carrier.dim();
        if (static_cast<long long>(sc.size()) != static_cast<long long>(n) * n * n) {
            fail(Errc::ParseError, "structure_constants must hold n^3 entries");
        }
        Presemifield s = Presemifield::from_structure_constants(carrier, std::move(sc), label, validate);
        const Json& aij = expect(j, "aij");
        if (!aij.is_null()) {
            if (carrier.kind() != Carrier::Kind::Field) {
                fail(Errc::ParseError, "aij is only valid for field carriers");
            }
            const FieldCtx& f = carrier.field();
            AijMatrix m(n, std::vector<FElem>(n, f.zero()));
            auto rows = aij.get<std::vector<std::vector<long long>>>();
            if (static_cast<int>(rows.size()) != n) fail(Errc::ParseError, "aij must be n x n");
            for (int i = 0; i < n; ++i) {
                if (static_cast<int>(rows[i].size()) != n) fail(Errc::ParseError, "aij must be n x n");
                for (int jj = 0; jj < n; ++jj) m[i][jj] = f.from_enc(rows[i][jj]);
            }
            Presemifield via_aij = Presemifield::from_aij(carrier, m, label, false);
            if (via_aij.structure_constants() != s.structure_constants()) {
                fail(Errc::ParseError, "aij disagrees with structure_constants");
            }
            return via_aij;
        }
        return s;
    } catch (const Json::exception& e) {
        fail(Errc::ParseError, std::string("bad presemifield document: ") + e.what());
    }
}

Json linmap_to_json(const LinMap& m, const FieldCtx* qpoly_field) {
    Json j;
    Json rows = Json::array();
    for (int r = 0; r < m.n; ++r) {
        Json row = Json::array();
        for (int c = 0; c < m.n; ++c) row.push_back(m.at(r, c));
        rows.push_back(std::move(row));
    }
    j["matrix"] = std::move(rows);
    if (m.qpoly && qpoly_field) {
        Json q = Json::array();
        for (const FElem& v : *m.qpoly) q.push_back(qpoly_field->enc(v));
        j["qpoly"] = std::move(q);
    } else {
        j["qpoly"] = nullptr;
    }
    return j;
}

Json mapspace_to_json(const MapSpace& s) {
    Json j;
    Json basis = Json::array();
    for (const LinMap& m : s.basis()) basis.push_back(linmap_to_json(m));
    j["basis"] = std::move(basis);
    return j;
}

Json orders_to_json(const NucleiOrders& o) {
    Json j;
    j["left"] = o.left;
    j["middle"] = o.middle;
    j["right"] = o.right;
    j["center"] = o.center;
    return j;
}

Json report_to_json(const NucleiReport& r) {
    Json j;
    j["orders"] = orders_to_json(r.orders);
    j["fingerprint"] = r.fingerprint;
    Json bases;
    bases["left"] = mapspace_to_json(r.left);
    bases["middle"] = mapspace_to_json(r.middle);
    bases["right"] = mapspace_to_json(r.right);
    bases["center"] = mapspace_to_json(r.center);
    j["bases"] = std::move(bases);
    return j;
}

Json fingerprint_to_json(const Fingerprint& f) {
    Json j;
    j["p"] = f.p;
    j["n"] = f.n;
    j["orders"] = orders_to_json(f.orders);
    j["commutative"] = f.commutative;
    return j;
}

std::string dump_json(const Json& j) { return j.dump(2) + "\n"; }

Json load_json(const std::string& path) {
    std::string text;
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        text = ss.str();
    } else {
        std::ifstream in(path);
        if (!in) fail(Errc::ParseError, "cannot read " + path);
        std::ostringstream ss;
        ss << in.rdbuf();
        text = ss.str();
    }
    try {
        return Json::parse(text);
    } catch (const Json::exception& e) {
        fail(Errc::ParseError, std::string("malformed JSON: ") + e.what());
    }
}

}  // namespace semifield
