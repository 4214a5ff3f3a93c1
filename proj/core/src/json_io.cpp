#include "leechkit/json_io.hpp"

#include <fstream>

namespace leechkit {

Json to_json(const Int& x) { return x.get_str(); }

Json to_json(const Rat& x) {
    if (x.get_den() == 1) return x.get_num().get_str();
    return x.get_num().get_str() + "/" + x.get_den().get_str();
}

Json to_json(const IntVec& v) {
    Json a = Json::array();
    for (const Int& x : v) a.push_back(to_json(x));
    return a;
}

Json to_json(const RatVec& v) {
    Json a = Json::array();
    for (const Rat& x : v) a.push_back(to_json(x));
    return a;
}

Json to_json(const IntMat& m) {
    Json a = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) a.push_back(to_json(m.row(i)));
    return a;
}

Json to_json(const RatMat& m) {
    Json a = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) a.push_back(to_json(m.row(i)));
    return a;
}

Int int_from_json(const Json& j) {
    if (!j.is_string()) throw MalformedInput("expected integer-as-string");
    try {
        return Int(j.get<std::string>());
    } catch (const std::invalid_argument&) {
        throw MalformedInput("bad integer literal: " + j.get<std::string>());
    }
}

Rat rat_from_json(const Json& j) {
    if (!j.is_string()) throw MalformedInput("expected rational-as-string");
    std::string s = j.get<std::string>();
    try {
        auto slash = s.find('/');
        Rat r;
        if (slash == std::string::npos) {
            r = Rat(Int(s));
        } else {
            Int num(s.substr(0, slash));
            Int den(s.substr(slash + 1));
            if (den == 0) throw MalformedInput("zero denominator: " + s);
            r = Rat(num) / Rat(den);
        }
        r.canonicalize();
        return r;
    } catch (const std::invalid_argument&) {
        throw MalformedInput("bad rational literal: " + s);
    }
}

IntVec intvec_from_json(const Json& j) {
    if (!j.is_array()) throw MalformedInput("expected array of integers");
    IntVec v;
    for (const Json& x : j) v.push_back(int_from_json(x));
    return v;
}

RatVec ratvec_from_json(const Json& j) {
    if (!j.is_array()) throw MalformedInput("expected array of rationals");
    RatVec v;
    for (const Json& x : j) v.push_back(rat_from_json(x));
    return v;
}

IntMat intmat_from_json(const Json& j) {
    if (!j.is_array()) throw MalformedInput("expected matrix");
    std::vector<IntVec> rows;
    for (const Json& r : j) rows.push_back(intvec_from_json(r));
    for (const IntVec& r : rows)
        if (r.size() != rows[0].size()) throw MalformedInput("ragged matrix");
    return IntMat::from_rows(std::move(rows));
}

Json lattice_to_json(const Lattice& l) {
    Json j;
    j["label"] = l.label();
    j["ambient_gram"] = to_json(l.ambient_gram());
    j["basis"] = to_json(l.basis());
    return j;
}

Lattice lattice_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("ambient_gram") || !j.contains("basis"))
        throw MalformedInput("lattice document needs ambient_gram and basis");
    std::string label = j.value("label", std::string("lattice"));
    IntMat ambient = intmat_from_json(j["ambient_gram"]);
    IntMat basis = intmat_from_json(j["basis"]);
    try {
        return Lattice(std::move(ambient), std::move(basis), std::move(label));
    } catch (const Error& e) {
        throw MalformedInput(std::string("invalid lattice document: ") + e.what());
    }
}

Json group_to_json(const GroupAction& g) {
    Json j;
    Json gens = Json::array();
    for (const IntMat& m : g.generators) gens.push_back(to_json(m));
    j["generators"] = gens;
    return j;
}

GroupAction group_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("generators"))
        throw MalformedInput("group document needs generators");
    GroupAction g;
    for (const Json& m : j["generators"]) g.generators.push_back(intmat_from_json(m));
    return g;
}

Json short_vector_report_to_json(const ShortVectorReport& r, std::size_t max_vectors) {
    Json j;
    j["bound"] = static_cast<long>(r.bound.get_si());
    j["count_pairs"] = r.vectors.size();
    j["complete"] = r.complete;
    bool truncated = r.vectors.size() > max_vectors;
    j["truncated"] = truncated;
    Json vs = Json::array();
    std::size_t limit = truncated ? max_vectors : r.vectors.size();
    for (std::size_t i = 0; i < limit; ++i) vs.push_back(to_json(r.vectors[i]));
    j["vectors"] = vs;
    return j;
}

Json discriminant_report_to_json(const DiscriminantForm& d) {
    Json j;
    j["invariant_factors"] = to_json(d.invariant_factors);
    j["ell"] = d.length();
    j["order"] = to_json(d.order());
    j["q_values"] = to_json(d.q_values);
    j["pairing"] = to_json(d.pairing);
    j["generator_lifts"] = to_json(d.generator_lifts);
    return j;
}

Json pair_report_to_json(const LeechPairReport& r) {
    Json j;
    j["even"] = r.even;
    j["positive_definite"] = r.positive_definite;
    j["rootless"] = r.rootless;
    j["isometries"] = r.isometries;
    j["discriminant_trivial"] = r.discriminant_trivial;
    j["invariant_trivial"] = r.invariant_trivial;
    j["verdict"] = r.verdict;
    return j;
}

Json weyl_check_to_json(const WeylCheck& c) {
    Json j;
    j["ok"] = c.ok;
    j["diagnosis"] = c.diagnosis;
    return j;
}

Json conway_report_to_json(const ConwaySampleReport& r) {
    Json j;
    j["samples"] = r.samples;
    j["passed"] = r.passed;
    j["notes"] = r.notes;
    return j;
}

Json certificate_to_json(const EmbeddingCertificate& c) {
    Json j;
    j["target_rank"] = c.target_rank;
    j["target_det"] = to_json(c.target_det);
    j["target_even"] = c.target_even;
    j["target_rootless"] = c.target_rootless;
    j["image_saturation_index"] = to_json(c.image_saturation_index);
    j["gram_preserved"] = c.gram_preserved;
    j["complement_disc_consistent"] = c.complement_disc_consistent;
    j["valid"] = c.valid();
    return j;
}

Json search_result_to_json(const WeylSearchResult& r) {
    Json j;
    j["status"] = r.status == SearchStatus::found ? "found" : "exhausted";
    j["candidates_tested"] = to_json(r.candidates_tested);
    j["height_bound_used"] = to_json(r.height_bound_used);
    if (r.w) j["w"] = to_json(*r.w);
    return j;
}

Json pipeline_result_to_json(const PipelineResult& r) {
    Json j;
    switch (r.status) {
        case PipelineStatus::certificate_valid: j["status"] = "certificate_valid"; break;
        case PipelineStatus::check_failed: j["status"] = "check_failed"; break;
        case PipelineStatus::search_exhausted: j["status"] = "search_exhausted"; break;
    }
    j["pair_report"] = pair_report_to_json(r.pair_report);
    j["condition1"] = {{"value", to_json(r.condition1.value)}, {"holds", r.condition1.holds}};
    if (r.attach) {
        j["attach"] = {{"v", to_json(r.attach->v)}, {"alpha", to_json(r.attach->alpha)}};
    }
    if (r.search) j["search"] = search_result_to_json(*r.search);
    if (r.extraction) {
        j["certificate"] = certificate_to_json(r.extraction->cert);
        j["embedding_matrix"] = to_json(r.extraction->emb.matrix);
        j["target_gram"] = to_json(r.extraction->target.gram());
    }
    if (r.extended_action.checked) {
        Json gens = Json::array();
        for (const auto& p : r.extended_action.per_generator)
            gens.push_back({{"integral", p.integral},
                            {"isometry", p.isometry},
                            {"fixes_w", p.fixes_w},
                            {"fixes_complement", p.fixes_complement}});
        j["extended_action"] = {{"all_ok", r.extended_action.all_ok()}, {"generators", gens}};
    }
    j["warnings"] = r.warnings;
    return j;
}

Json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw MalformedInput("cannot open file: " + path);
    try {
        return Json::parse(in);
    } catch (const Json::parse_error& e) {
        throw MalformedInput("JSON parse error in " + path + ": " + e.what());
    }
}

void write_json_file(const std::string& path, const Json& j) {
    std::ofstream out(path);
    if (!out) throw Error("cannot write file: " + path);
    out << j.dump(2) << "\n";
}

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw Error("cannot write file: " + path);
    out << text;
}

}  // namespace leechkit
