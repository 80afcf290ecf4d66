#include "json_io.hpp"

#include <fstream>
#include <sstream>

namespace qcover {

namespace {

int vertex_from_file(const Json& v, int num_vertices) {
    if (!v.is_number_integer()) throw BadInput("vertex id must be an integer");
    long id = v.get<long>();
    if (id < 1 || id > num_vertices)
        throw BadInput("vertex id out of range: " + std::to_string(id));
    return int(id - 1);
}

int key_vertex_from_file(const std::string& key, int num_vertices) {
    size_t used = 0;
    long id = 0;
    try {
        id = std::stol(key, &used);
    } catch (const std::exception&) {
        throw BadInput("vertex key is not an integer: " + key);
    }
    if (used != key.size()) throw BadInput("vertex key is not an integer: " + key);
    if (id < 1 || id > num_vertices)
        throw BadInput("vertex id out of range: " + key);
    return int(id - 1);
}

}  // namespace

Json quiver_to_json(const QuiverDatum& q) {
    Json doc;
    if (!q.name.empty()) doc["name"] = q.name;
    Json verts = Json::array();
    for (int v = 0; v < q.num_vertices; ++v) verts.push_back(v + 1);
    doc["vertices"] = verts;
    Json edges = Json::array();
    for (auto [s, t] : q.edges) edges.push_back(Json::array({s + 1, t + 1}));
    doc["edges"] = edges;
    Json aut = Json::object();
    for (int v = 0; v < int(q.automorphism.size()); ++v)
        aut[std::to_string(v + 1)] = q.automorphism[size_t(v)] + 1;
    doc["automorphism"] = aut;
    if (!q.labels.empty()) {
        Json labels = Json::object();
        for (auto& [name, v] : q.labels) labels[name] = v + 1;
        doc["labels"] = labels;
    }
    if (!q.parity_override.empty()) {
        Json par = Json::object();
        for (auto [v, p] : q.parity_override) par[std::to_string(v + 1)] = p;
        doc["parity"] = par;
    }
    if (!q.order.empty()) {
        Json ord = Json::array();
        for (int v : q.order) ord.push_back(v + 1);
        doc["order"] = ord;
    }
    return doc;
}

QuiverDatum quiver_from_json(const Json& doc) {
    if (!doc.is_object()) throw BadInput("quiver document must be an object");
    QuiverDatum q;
    if (doc.contains("name")) q.name = doc.at("name").get<std::string>();

    if (!doc.contains("vertices") || !doc.at("vertices").is_array())
        throw BadInput("quiver document needs a vertices array");
    q.num_vertices = int(doc.at("vertices").size());
    {
        std::vector<char> seen(size_t(q.num_vertices), 0);
        for (const auto& v : doc.at("vertices")) {
            int id = vertex_from_file(v, q.num_vertices);
            if (seen[size_t(id)]++) throw BadInput("duplicate vertex id");
        }
    }

    if (doc.contains("edges")) {
        for (const auto& e : doc.at("edges")) {
            if (!e.is_array() || e.size() != 2)
                throw BadInput("each edge must be a [source, target] pair");
            q.edges.emplace_back(vertex_from_file(e.at(0), q.num_vertices),
                                 vertex_from_file(e.at(1), q.num_vertices));
        }
    }

    if (!doc.contains("automorphism") || !doc.at("automorphism").is_object())
        throw BadInput("quiver document needs an automorphism object");
    q.automorphism.assign(size_t(q.num_vertices), -1);
    for (const auto& [key, val] : doc.at("automorphism").items()) {
        int v = key_vertex_from_file(key, q.num_vertices);
        q.automorphism[size_t(v)] = vertex_from_file(val, q.num_vertices);
    }
    for (int img : q.automorphism)
        if (img < 0) throw BadInput("automorphism must list an image for every vertex");

    if (doc.contains("labels")) {
        for (const auto& [name, val] : doc.at("labels").items())
            q.labels[name] = vertex_from_file(val, q.num_vertices);
    }
    if (doc.contains("parity")) {
        for (const auto& [key, val] : doc.at("parity").items()) {
            int p = val.get<int>();
            if (p != 0 && p != 1) throw BadInput("parity must be 0 or 1");
            q.parity_override[key_vertex_from_file(key, q.num_vertices)] = p;
        }
    }
    if (doc.contains("order")) {
        for (const auto& v : doc.at("order"))
            q.order.push_back(vertex_from_file(v, q.num_vertices));
    }
    return q;
}

QuiverDatum load_quiver_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw BadInput("cannot open quiver file: " + path);
    Json doc;
    try {
        in >> doc;
    } catch (const Json::parse_error& e) {
        throw BadInput("invalid JSON in " + path + ": " + e.what());
    }
    return quiver_from_json(doc);
}

void save_quiver_file(const QuiverDatum& q, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw BadInput("cannot write quiver file: " + path);
    out << quiver_to_json(q).dump(2) << "\n";
}

Json laurent_json(const Laurent& x) {
    Json terms = Json::array();
    for (const auto& [e, c] : x.terms())
        terms.push_back(Json::array({e, c.get_str()}));
    return terms;
}

Json ratfunc_json(const RatFunc& x) {
    return Json{{"num", laurent_json(x.num())}, {"den", laurent_json(x.den())}};
}

Json pi_scalar_json(const PiScalar& x) {
    return Json{{"plus", ratfunc_json(x.plus)}, {"minus", ratfunc_json(x.minus)}};
}

Json pi_series_json(const PiSeries& s) {
    Json terms = Json::array();
    auto it0 = s.c0.begin();
    auto it1 = s.c1.begin();
    while (it0 != s.c0.end() || it1 != s.c1.end()) {
        int e0 = it0 != s.c0.end() ? it0->first : s.order + 1;
        int e1 = it1 != s.c1.end() ? it1->first : s.order + 1;
        int e = std::min(e0, e1);
        Rat a = e0 == e ? (it0++)->second : Rat(0);
        Rat b = e1 == e ? (it1++)->second : Rat(0);
        terms.push_back(Json::array({e, a.get_str(), b.get_str()}));
    }
    return Json{{"order", s.order}, {"terms", terms}};
}

Json weight_json(const RootDatum& rd, const Weight& w) {
    Json out = Json::object();
    for (int i = 0; i < rd.rank; ++i)
        if (w.mult[size_t(i)] != 0) out[rd.labels[size_t(i)]] = w.mult[size_t(i)];
    return out;
}

Json datum_json(const RootDatum& rd) {
    Json out;
    out["name"] = rd.name;
    out["rank"] = rd.rank;
    out["labels"] = rd.labels;
    out["parity"] = rd.parity;
    out["symmetrizers"] = rd.sym;
    out["cartan"] = rd.cartan;
    out["edge_orbit_counts"] = rd.dcount;
    return out;
}

Json char_series_json(const RootDatum& rd, const CharSeries& ch) {
    Json comps = Json::object();
    for (const auto& [word, s] : ch.comps)
        comps[word_str(rd, word)] = pi_series_json(s);
    return Json{{"order", ch.order}, {"components", comps}};
}

Json report_json(const QConditionReport& r) {
    return Json{{"ok", r.ok}, {"failures", r.failures}};
}

Json report_json(const RelationReport& r) {
    return Json{{"ok", r.ok}, {"checked", r.checks}, {"failures", r.failures}};
}

Json report_json(const PbwReport& r) {
    return Json{{"ok", r.ok}, {"count", r.count}, {"rank", r.rank}};
}

Json report_json(const NhReport& r) {
    Json out{{"ok", r.ok}, {"checked", r.checks}, {"failures", r.failures}};
    if (!r.detail.empty()) out["detail"] = r.detail;
    return out;
}

Json report_json(const GammaReport& r) {
    return Json{{"ok", r.ok}, {"checked", r.checks}, {"mismatches", r.mismatches}};
}

Json report_json(const GramRank& r) {
    return Json{{"dim", r.dim}, {"rank_plus", r.rank_plus},
                {"rank_minus", r.rank_minus}};
}

Json report_json(const CatSerreReport& r) {
    Json clauses{{"boundary", r.boundary},
                 {"interior", r.interior},
                 {"chain", r.chain},
                 {"parity", r.parity},
                 {"character", r.character}};
    Json out{{"ok", r.ok},
             {"clauses", clauses},
             {"checked", r.checks},
             {"boundary_signs", Json::array({r.boundary_first, r.boundary_last})},
             {"interior_combination", r.interior_combination},
             {"interior_signs", r.interior_signs}};
    if (!r.witness.empty()) out["witness"] = r.witness;
    if (!r.failures.empty()) out["failures"] = r.failures;
    return out;
}

Json report_json(const TypeMReport& r) {
    return Json{{"ok", r.ok},
                {"dim", r.dim},
                {"rank_plus", r.rank_plus},
                {"rank_minus", r.rank_minus}};
}

Word parse_word(const RootDatum& rd, const std::string& text) {
    Word w;
    if (text.find(',') != std::string::npos) {
        std::stringstream ss(text);
        std::string item;
        while (std::getline(ss, item, ',')) {
            if (item.empty()) continue;
            w.push_back(rd.index_of_label(item));
        }
        return w;
    }
    for (char c : text) w.push_back(rd.index_of_label(std::string(1, c)));
    return w;
}

}  // namespace qcover
