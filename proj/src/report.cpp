#include "hfdlab/report.hpp"

#include <sstream>

#include "hfdlab/text.hpp"

namespace hfdlab {

namespace {

Json counts_json(const std::vector<int>& counts) {
    Json out = Json::object();
    for (std::size_t i = 0; i < counts.size(); ++i) {
        if (counts[i] > 0) out[std::to_string(i)] = counts[i];
    }
    return out;
}

Json elements_json(const std::vector<GroupElement>& elements) {
    Json out = Json::array();
    for (const auto& g : elements) out.push_back(format_element(g));
    return out;
}

std::string csv_quote(const std::string& field) {
    std::string out = "\"";
    for (char c : field) {
        if (c == '"') out += "\"\"";
        out.push_back(c);
    }
    return out + "\"";
}

} // namespace

Json group_json(const FiniteAbelianGroup& group) {
    Json out = Json::object();
    out["moduli"] = group.moduli();
    return out;
}

Json sequence_json(const ZeroSumSequence& s, const ClassSubset& cs) {
    Json seq = Json::object();
    for (std::size_t i = 0; i < s.mult.size(); ++i) {
        if (s.mult[i] > 0) seq[format_element(cs.classes()[i])] = s.mult[i];
    }
    Json out = Json::object();
    out["seq"] = std::move(seq);
    return out;
}

Json relation_json(const Relation& rel) {
    Json out = Json::object();
    out["lhs"] = counts_json(rel.lhs.counts);
    out["rhs"] = counts_json(rel.rhs.counts);
    out["lengths"] = Json::array({rel.lhs.length(), rel.rhs.length()});
    out["irredundant"] = true;
    return out;
}

Json localized_relation_json(const LocalizedRelation& rel) {
    Json out = Json::object();
    out["lhs"] = counts_json(rel.lhs.counts);
    out["rhs"] = counts_json(rel.rhs.counts);
    out["lengths"] = Json::array({rel.lhs_length, rel.rhs_length});
    out["irredundant"] = true;
    return out;
}

Json analysis_json(const AnalysisResult& result) {
    Json out = Json::object();
    out["schema"] = kReportSchema;
    out["group"] = group_json(result.cs.group());
    out["classes"] = elements_json(result.cs.classes());

    Json atoms = Json::array();
    for (const auto& atom : result.atoms.atoms()) {
        Json entry = sequence_json(atom, result.cs);
        entry["literal"] = format_sequence(atom, result.cs);
        entry["length"] = atom.total_length();
        atoms.push_back(std::move(entry));
    }
    out["atoms"] = std::move(atoms);

    Json relations = Json::array();
    for (const auto& rel : result.relations) relations.push_back(relation_json(rel));
    out["relations"] = std::move(relations);

    Json classification = Json::object();
    classification["good"] = result.classification.good_indices();
    classification["bad"] = result.classification.bad_indices();
    Json witness = Json::object();
    for (std::size_t a = 0; a < result.classification.size(); ++a) {
        if (result.classification.bad[a]) {
            witness[std::to_string(a)] = result.classification.witness[a];
        }
    }
    classification["witness"] = std::move(witness);
    Json per_r = Json::object();
    for (const auto& [r, flags] : result.classification.r_bad) {
        Json block = Json::object();
        Json good = Json::array();
        Json bad = Json::array();
        for (std::size_t a = 0; a < flags.size(); ++a) {
            (flags[a] ? bad : good).push_back(a);
        }
        block["good"] = std::move(good);
        block["bad"] = std::move(bad);
        per_r[std::to_string(r)] = std::move(block);
    }
    classification["r"] = std::move(per_r);
    out["classification"] = std::move(classification);

    const AnalysisReport& report = result.report;
    Json verdicts = Json::object();
    verdicts["is_hfd"] = report.is_hfd;
    Json r_chfd = Json::object();
    for (const auto& [r, v] : report.r_chfd) r_chfd[std::to_string(r)] = v;
    verdicts["r_chfd"] = std::move(r_chfd);
    verdicts["distance_witnesses"] = report.distance_witnesses;
    Json coverage = Json::object();
    coverage["covered"] = elements_json(report.coverage.covered_classes);
    coverage["uncovered"] = elements_json(report.coverage.uncovered_classes);
    coverage["all_covered"] = report.coverage.all_covered;
    coverage["equivalence_holds"] = report.coverage.equivalence_holds;
    verdicts["coverage"] = std::move(coverage);
    verdicts["is_factorial"] = report.is_factorial;
    verdicts["ohfd"] = report.ohfd;
    verdicts["ohfd_bound"] = report.ohfd_bound;
    out["analysis"] = std::move(verdicts);
    return out;
}

Json localization_json(const LocalizationSetup& setup,
                       const std::vector<LocalizedRelation>& relations,
                       const NagataCheck& nagata,
                       const std::vector<ClaimStarResult>& claim_star) {
    Json out = Json::object();
    out["s_generators"] = setup.s_generators;
    out["B"] = setup.B;
    out["C"] = setup.C;

    Json rels = Json::array();
    for (const auto& rel : relations) rels.push_back(localized_relation_json(rel));
    out["relations"] = std::move(rels);

    auto transfer_json = [](const TransferCheck& tc) {
        Json block = Json::object();
        block["localized"] = tc.localized;
        block["base"] = tc.base;
        block["consistent"] = tc.consistent;
        return block;
    };
    Json transfer = Json::object();
    transfer["hfd"] = transfer_json(nagata.hfd);
    Json per_r = Json::object();
    for (const auto& [r, tc] : nagata.r_chfd) per_r[std::to_string(r)] = transfer_json(tc);
    transfer["r"] = std::move(per_r);
    out["nagata"] = std::move(transfer);

    Json stars = Json::array();
    for (const auto& cs : claim_star) {
        Json entry = Json::object();
        entry["atom"] = cs.atom;
        entry["found"] = cs.witness.has_value();
        entry["bound"] = cs.bound;
        if (cs.witness) {
            entry["s_factors"] = cs.witness->s_factors;
            entry["mixed_factors"] = cs.witness->mixed_factors;
        } else {
            entry["diagnostic"] = cs.diagnostic;
        }
        stars.push_back(std::move(entry));
    }
    out["claim_star"] = std::move(stars);
    return out;
}

Json survey_json(const SurveyResult& result) {
    Json out = Json::object();
    out["schema"] = kReportSchema;
    Json survey = Json::object();
    survey["max_order"] = result.max_order;
    survey["checks"] = result.checks;
    survey["rs"] = result.rs;
    survey["instances"] = result.instances;
    Json ces = Json::array();
    for (const auto& ce : result.counterexamples) {
        Json entry = Json::object();
        entry["check"] = ce.check;
        entry["moduli"] = ce.moduli;
        entry["classes"] = elements_json(ce.classes);
        entry["generators"] = ce.generators;
        entry["r"] = ce.r;
        entry["detail"] = ce.detail;
        ces.push_back(std::move(entry));
    }
    survey["counterexamples"] = std::move(ces);
    out["survey"] = std::move(survey);
    return out;
}

Json equality_json(const EqualityReport& report) {
    Json out = Json::object();
    out["equal"] = report.equal;
    out["all_atoms"] = report.all_atoms;
    out["lengths"] = Json::array({report.lhs_length, report.rhs_length});
    out["balanced"] = report.balanced;
    out["irredundant"] = report.irredundant;
    return out;
}

Json polynomial_identity_json(const PolynomialIdentityReport& report) {
    Json out = Json::object();
    out["product_equal"] = report.product_equal;
    out["factors_are_atoms"] = report.factors_are_atoms;
    out["irredundant"] = report.irredundant;
    out["lengths"] = Json::array({report.lhs_length, report.rhs_length});
    out["unbalanced"] = report.unbalanced;
    out["two_is_bad"] = report.two_is_bad;
    return out;
}

std::string atoms_csv(const AnalysisResult& result) {
    std::ostringstream out;
    out << "index,atom,length,good";
    std::vector<int> rs;
    for (const auto& [r, flags] : result.classification.r_bad) rs.push_back(r);
    for (int r : rs) out << ",r" << r << "_good";
    out << "\n";
    for (std::size_t a = 0; a < result.atoms.size(); ++a) {
        const auto& atom = result.atoms.atom(static_cast<int>(a));
        out << a << ',' << csv_quote(format_sequence(atom, result.cs)) << ','
            << atom.total_length() << ',' << (result.classification.bad[a] ? "false" : "true");
        for (int r : rs) {
            out << ',' << (result.classification.r_bad.at(r)[a] ? "false" : "true");
        }
        out << "\n";
    }
    return out.str();
}

std::string render(const Json& document) { return document.dump(2) + "\n"; }

} // namespace hfdlab
