#include "qcover/acceptance.hpp"
#include "qcover/covering.hpp"
#include "qcover/fixtures.hpp"
#include "qcover/groth.hpp"
#include "qcover/json_io.hpp"
#include "qcover/nilhecke.hpp"
#include "qcover/parallel.hpp"
#include "qcover/polyrep.hpp"
#include "qcover/rootdata.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <string>

namespace {

using qcover::Json;

struct CommonOpts {
    std::string builtin;
    std::string datum_file;
    std::string out_path;
    std::string format = "json";
    int jobs = qcover::default_jobs();
};

void add_datum_flags(CLI::App* cmd, CommonOpts& opts) {
    auto* b = cmd->add_option("--builtin", opts.builtin, "name of a builtin datum");
    auto* f = cmd->add_option("--datum-file", opts.datum_file,
                              "path of a quiver description file");
    b->excludes(f);
}

void add_output_flags(CLI::App* cmd, CommonOpts& opts) {
    cmd->add_option("--out", opts.out_path, "write the report to this path");
    cmd->add_option("--format", opts.format, "output format")
        ->check(CLI::IsMember({"json", "tsv"}));
    cmd->add_option("--jobs", opts.jobs, "worker thread bound")
        ->check(CLI::PositiveNumber);
}

qcover::RootDatum resolve_datum(const CommonOpts& opts) {
    if (!opts.builtin.empty()) return qcover::builtin_datum(opts.builtin);
    if (!opts.datum_file.empty())
        return qcover::derive_root_datum(qcover::load_quiver_file(opts.datum_file));
    throw qcover::BadInput("either --builtin or --datum-file is required");
}

// Tab-separated rendering: one `path<TAB>value` line per leaf, depth first.
void flatten_tsv(const Json& doc, const std::string& path, std::ostream& out) {
    if (doc.is_object()) {
        for (const auto& [key, val] : doc.items())
            flatten_tsv(val, path.empty() ? key : path + "." + key, out);
    } else if (doc.is_array()) {
        for (size_t k = 0; k < doc.size(); ++k)
            flatten_tsv(doc[k], path + "[" + std::to_string(k) + "]", out);
    } else {
        out << path << "\t" << (doc.is_string() ? doc.get<std::string>() : doc.dump())
            << "\n";
    }
}

void emit(const Json& doc, const CommonOpts& opts) {
    std::ostream* out = &std::cout;
    std::ofstream file;
    if (!opts.out_path.empty()) {
        file.open(opts.out_path);
        if (!file) throw qcover::BadInput("cannot write " + opts.out_path);
        out = &file;
    }
    if (opts.format == "tsv")
        flatten_tsv(doc, "", *out);
    else
        *out << doc.dump(2) << "\n";
}

int node_index(const qcover::RootDatum& rd, const std::string& label) {
    return rd.index_of_label(label);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact workbench for covering half-algebras and their"
                 " polynomial actions"};
    app.require_subcommand(1);

    // validate ------------------------------------------------------------
    CommonOpts vo;
    auto* validate = app.add_subcommand(
        "validate", "derive a datum and check its polynomial matrix conditions");
    add_datum_flags(validate, vo);
    add_output_flags(validate, vo);

    // gram ----------------------------------------------------------------
    CommonOpts go;
    std::string gram_weight;
    auto* gram = app.add_subcommand(
        "gram", "pairing matrix and radical ranks of all words of a weight");
    add_datum_flags(gram, go);
    add_output_flags(gram, go);
    gram->add_option("--weight", gram_weight, "weight as label:count,...")
        ->required();

    // serre-check ----------------------------------------------------------
    CommonOpts so;
    std::string serre_i, serre_j;
    auto* serre = app.add_subcommand(
        "serre-check", "test that the deformed Serre element pairs to zero");
    add_datum_flags(serre, so);
    add_output_flags(serre, so);
    serre->add_option("--i", serre_i, "first node label")->required();
    serre->add_option("--j", serre_j, "second node label")->required();

    // nilhecke-dims ---------------------------------------------------------
    CommonOpts no;
    int nh_n = 2, nh_parity = 0, nh_cap = 20;
    long nh_sym = 1;
    auto* nhdims = app.add_subcommand(
        "nilhecke-dims", "rank-one dimension series against the closed form");
    add_output_flags(nhdims, no);
    nhdims->add_option("--n", nh_n, "number of strands")->check(CLI::PositiveNumber);
    nhdims->add_option("--parity", nh_parity, "node parity (0 or 1)")
        ->check(CLI::Range(0, 1));
    nhdims->add_option("--sym", nh_sym, "node symmetrizer")
        ->check(CLI::PositiveNumber);
    nhdims->add_option("--degree-cap", nh_cap, "series truncation order")
        ->check(CLI::PositiveNumber);

    // relations-verify -------------------------------------------------------
    CommonOpts ro;
    std::string rel_weight;
    long rel_height = 3, rel_cap = 12;
    auto* relations = app.add_subcommand(
        "relations-verify", "check the defining relations in the polynomial action");
    add_datum_flags(relations, ro);
    add_output_flags(relations, ro);
    relations->add_option("--weight", rel_weight, "single weight to check");
    relations->add_option("--height", rel_height,
                          "check all weights up to this height instead");
    relations->add_option("--degree-cap", rel_cap, "monomial degree cap")
        ->check(CLI::PositiveNumber);

    // pbw-verify -------------------------------------------------------------
    CommonOpts po;
    std::string pbw_weight;
    long pbw_height = 3, pbw_cap = 8;
    auto* pbw = app.add_subcommand(
        "pbw-verify", "check independence of the crossing-monomial spanning set");
    add_datum_flags(pbw, po);
    add_output_flags(pbw, po);
    pbw->add_option("--weight", pbw_weight, "single weight to check");
    pbw->add_option("--height", pbw_height,
                    "check all weights up to this height instead");
    pbw->add_option("--degree-cap", pbw_cap, "operator degree cap")
        ->check(CLI::PositiveNumber);

    // pair --------------------------------------------------------------------
    CommonOpts qo;
    std::string pair_left, pair_right;
    auto* pair = app.add_subcommand("pair", "pairing of two words");
    add_datum_flags(pair, qo);
    add_output_flags(pair, qo);
    pair->add_option("--left", pair_left, "left word (labels, comma separated)")
        ->required();
    pair->add_option("--right", pair_right, "right word")->required();

    // restrict ------------------------------------------------------------------
    CommonOpts xo;
    std::string restrict_word, restrict_mu;
    auto* restr = app.add_subcommand(
        "restrict", "two-block decomposition of the class of a word");
    add_datum_flags(restr, xo);
    add_output_flags(restr, xo);
    restr->add_option("--word", restrict_word, "word to restrict")->required();
    restr->add_option("--mu", restrict_mu, "left weight as label:count,...")
        ->required();

    // cat-serre -------------------------------------------------------------------
    CommonOpts co;
    std::string cat_i, cat_j;
    long cat_cap = 16;
    auto* cat = app.add_subcommand(
        "cat-serre", "split-sequence identities between neighbour classes");
    add_datum_flags(cat, co);
    add_output_flags(cat, co);
    cat->add_option("--i", cat_i, "repeated node label")->required();
    cat->add_option("--j", cat_j, "single node label")->required();
    cat->add_option("--degree-cap", cat_cap, "monomial degree cap")
        ->check(CLI::PositiveNumber);

    // type-m ------------------------------------------------------------------------
    CommonOpts to;
    std::string tm_weight;
    long tm_height = 4;
    auto* typem = app.add_subcommand(
        "type-m", "compare radical ranks at the two sign specializations");
    add_datum_flags(typem, to);
    add_output_flags(typem, to);
    typem->add_option("--weight", tm_weight, "single weight to check");
    typem->add_option("--height", tm_height,
                      "check all weights up to this height instead");

    // report-all -----------------------------------------------------------------------
    CommonOpts ao;
    auto* report = app.add_subcommand(
        "report-all", "run the whole release suite (progress on stderr)");
    add_output_flags(report, ao);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);
        Json err{{"error", {{"code", "UsageError"}, {"message", e.what()}}}};
        std::cerr << err.dump(2) << "\n";
        return 2;
    }

    try {
        if (validate->parsed()) {
            qcover::RootDatum rd = resolve_datum(vo);
            qcover::QConditionReport qr = qcover::check_q_conditions(rd);
            Json doc{{"datum", qcover::datum_json(rd)},
                     {"conditions", qcover::report_json(qr)},
                     {"ok", qr.ok}};
            emit(doc, vo);
            return qr.ok ? 0 : 1;
        }

        if (gram->parsed()) {
            qcover::RootDatum rd = resolve_datum(go);
            qcover::Weight w = qcover::parse_weight(rd, gram_weight);
            qcover::CoveringForm form(rd);
            auto matrix = qcover::gram_matrix(form, w);
            qcover::GramRank ranks = qcover::radical_rank(form, w);
            Json words = Json::array();
            for (const auto& word : qcover::enumerate_sequences(w))
                words.push_back(qcover::word_str(rd, word));
            Json rows = Json::array();
            for (const auto& row : matrix) {
                Json cells = Json::array();
                for (const auto& cell : row) cells.push_back(qcover::pi_scalar_json(cell));
                rows.push_back(cells);
            }
            Json doc{{"weight", qcover::weight_json(rd, w)},
                     {"words", words},
                     {"rank_plus", ranks.rank_plus},
                     {"rank_minus", ranks.rank_minus},
                     {"gram", rows}};
            emit(doc, go);
            return 0;
        }

        if (serre->parsed()) {
            qcover::RootDatum rd = resolve_datum(so);
            int i = node_index(rd, serre_i);
            int j = node_index(rd, serre_j);
            if (i == j) throw qcover::BadInput("the two nodes must differ");
            qcover::CoveringForm form(rd);
            bool ok = qcover::in_radical(form, qcover::serre_element(rd, i, j));
            Json doc{{"datum", rd.name},
                     {"i", serre_i},
                     {"j", serre_j},
                     {"in_radical", ok}};
            emit(doc, so);
            return ok ? 0 : 1;
        }

        if (nhdims->parsed()) {
            qcover::PiSeries counted =
                qcover::nilhecke_count_series(nh_n, nh_parity, nh_sym, nh_cap);
            qcover::PiScalar closed =
                qcover::nilhecke_closed_dim(nh_n, nh_parity, nh_sym);
            bool agree = qcover::PiSeries::expand(closed, nh_cap) == counted;
            Json doc{{"n", nh_n},
                     {"parity", nh_parity},
                     {"sym", nh_sym},
                     {"D", nh_cap},
                     {"closed_form", qcover::pi_scalar_json(closed)},
                     {"series", qcover::pi_series_json(counted)},
                     {"agreement", agree}};
            emit(doc, no);
            return agree ? 0 : 1;
        }

        if (relations->parsed()) {
            qcover::RootDatum rd = resolve_datum(ro);
            std::vector<qcover::Weight> weights;
            if (!rel_weight.empty())
                weights.push_back(qcover::parse_weight(rd, rel_weight));
            else
                weights = qcover::weights_up_to_height(rd.rank, rel_height);
            long checked = 0;
            std::vector<std::string> failures;
            for (const auto& w : weights) {
                qcover::PolySpace sp(rd, w);
                qcover::RelationReport r = qcover::verify_relations(sp, rel_cap);
                checked += r.checks;
                failures.insert(failures.end(), r.failures.begin(), r.failures.end());
            }
            Json doc{{"datum", rd.name},
                     {"D", rel_cap},
                     {"checked", checked},
                     {"failures", Json(failures)},
                     {"ok", failures.empty()}};
            if (!rel_weight.empty())
                doc["weight"] = qcover::weight_json(rd, weights.front());
            else
                doc["height"] = rel_height;
            emit(doc, ro);
            return failures.empty() ? 0 : 1;
        }

        if (pbw->parsed()) {
            qcover::RootDatum rd = resolve_datum(po);
            std::vector<qcover::Weight> weights;
            if (!pbw_weight.empty())
                weights.push_back(qcover::parse_weight(rd, pbw_weight));
            else
                weights = qcover::weights_up_to_height(rd.rank, pbw_height);
            long checked = 0;
            std::vector<std::string> failures;
            for (const auto& w : weights) {
                qcover::PolySpace sp(rd, w);
                qcover::PbwReport r = qcover::pbw_independence(sp, pbw_cap);
                checked += r.count;
                if (!r.ok) {
                    std::string tag;
                    for (int k = 0; k < rd.rank; ++k) {
                        if (k) tag += ",";
                        tag += std::to_string(w.mult[size_t(k)]);
                    }
                    failures.push_back("weight [" + tag + "]: rank " +
                                       std::to_string(r.rank) + " of " +
                                       std::to_string(r.count));
                }
            }
            Json doc{{"datum", rd.name},
                     {"D", pbw_cap},
                     {"checked", checked},
                     {"failures", Json(failures)},
                     {"ok", failures.empty()}};
            if (!pbw_weight.empty())
                doc["weight"] = qcover::weight_json(rd, weights.front());
            else
                doc["height"] = pbw_height;
            emit(doc, po);
            return failures.empty() ? 0 : 1;
        }

        if (pair->parsed()) {
            qcover::RootDatum rd = resolve_datum(qo);
            qcover::Word left = qcover::parse_word(rd, pair_left);
            qcover::Word right = qcover::parse_word(rd, pair_right);
            qcover::CoveringForm form(rd);
            Json doc{{"datum", rd.name},
                     {"left", qcover::word_str(rd, left)},
                     {"right", qcover::word_str(rd, right)},
                     {"value", qcover::pi_scalar_json(form.words(left, right))}};
            emit(doc, qo);
            return 0;
        }

        if (restr->parsed()) {
            qcover::RootDatum rd = resolve_datum(xo);
            qcover::Word word = qcover::parse_word(rd, restrict_word);
            qcover::Weight mu = qcover::parse_weight(rd, restrict_mu);
            qcover::Weight total = qcover::word_weight(rd, word);
            qcover::Weight nu;
            nu.mult.assign(size_t(rd.rank), 0);
            for (int k = 0; k < rd.rank; ++k) {
                long rest = total.mult[size_t(k)] - mu.mult[size_t(k)];
                if (rest < 0)
                    throw qcover::BadInput("--mu exceeds the weight of the word");
                nu.mult[size_t(k)] = rest;
            }
            Json summands = Json::array();
            for (const auto& s : qcover::restrict_decomposition(rd, word, mu, nu))
                summands.push_back(Json{{"left", qcover::word_str(rd, s.ui)},
                                        {"right", qcover::word_str(rd, s.uj)},
                                        {"qshift", s.qshift},
                                        {"pishift", s.pishift}});
            Json doc{{"datum", rd.name},
                     {"word", qcover::word_str(rd, word)},
                     {"mu", qcover::weight_json(rd, mu)},
                     {"nu", qcover::weight_json(rd, nu)},
                     {"summands", summands}};
            emit(doc, xo);
            return 0;
        }

        if (cat->parsed()) {
            qcover::RootDatum rd = resolve_datum(co);
            int i = node_index(rd, cat_i);
            int j = node_index(rd, cat_j);
            if (i == j) throw qcover::BadInput("the two nodes must differ");
            qcover::CatSerreReport rep =
                qcover::categorical_serre(rd, i, j, cat_cap, co.jobs);
            Json doc = qcover::report_json(rep);
            doc["datum"] = rd.name;
            doc["i"] = cat_i;
            doc["j"] = cat_j;
            doc["D"] = cat_cap;
            emit(doc, co);
            return rep.ok ? 0 : 1;
        }

        if (typem->parsed()) {
            qcover::RootDatum rd = resolve_datum(to);
            std::vector<qcover::Weight> weights;
            if (!tm_weight.empty())
                weights.push_back(qcover::parse_weight(rd, tm_weight));
            else
                weights = qcover::weights_up_to_height(rd.rank, tm_height);
            qcover::CoveringForm form(rd);
            bool all_ok = true;
            Json results = Json::array();
            for (const auto& w : weights) {
                qcover::TypeMReport r = qcover::type_m_check(form, w);
                all_ok = all_ok && r.ok;
                Json entry = qcover::report_json(r);
                entry["weight"] = qcover::weight_json(rd, w);
                results.push_back(entry);
            }
            Json doc{{"datum", rd.name}, {"results", results}, {"ok", all_ok}};
            emit(doc, to);
            return all_ok ? 0 : 1;
        }

        if (report->parsed()) {
            auto results = qcover::run_acceptance(ao.jobs, std::cerr);
            Json list = Json::array();
            for (const auto& r : results)
                list.push_back(Json{{"index", r.index},
                                    {"name", r.name},
                                    {"pass", r.pass},
                                    {"detail", r.detail}});
            bool ok = qcover::all_passed(results);
            Json doc{{"criteria", list}, {"ok", ok}};
            emit(doc, ao);
            return ok ? 0 : 1;
        }
    } catch (const qcover::Error& e) {
        bool input_side =
            dynamic_cast<const qcover::BadInput*>(&e) != nullptr ||
            dynamic_cast<const qcover::IncompatibleAutomorphism*>(&e) != nullptr ||
            dynamic_cast<const qcover::C4Violation*>(&e) != nullptr ||
            dynamic_cast<const qcover::C6Violation*>(&e) != nullptr ||
            dynamic_cast<const qcover::GcdNotOne*>(&e) != nullptr ||
            dynamic_cast<const qcover::WeightMismatch*>(&e) != nullptr ||
            dynamic_cast<const qcover::TruncationTooSmall*>(&e) != nullptr;
        Json err{{"error", {{"code", e.code()}, {"message", e.what()}}}};
        std::cerr << err.dump(2) << "\n";
        return input_side ? 2 : 1;
    } catch (const std::exception& e) {
        Json err{{"error", {{"code", "Internal"}, {"message", e.what()}}}};
        std::cerr << err.dump(2) << "\n";
        return 2;
    }
    return 2;
}
