// Canonical report emission. Field order is fixed and big integers are
// serialized as decimal strings, so identical configs produce byte-identical
// documents (timing, which varies, goes to a separate channel).

#pragma once

#include <degsum/claims.hpp>
#include <degsum/sweep.hpp>

#include <json.hpp>

namespace degsum {

inline constexpr const char* kToolVersion = "degsum 1.0.0";

// plain nlohmann::json keeps object keys sorted, which is exactly the
// canonical form the report contract asks for
using Json = nlohmann::json;

inline Json claim_to_json(const ClaimRecord& rec, bool with_cells) {
    Json j;
    j["id"] = rec.id;
    j["statement"] = rec.statement;
    j["range"] = rec.range;
    j["verdict"] = verdict_name(rec.verdict);
    j["holding_cells"] = rec.holding_cells();
    j["total_cells"] = rec.cells.size();
    j["note"] = rec.note;
    if (with_cells) {
        Json cells = Json::array();
        for (const auto& c : rec.cells) {
            Json jc;
            jc["point"] = c.point;
            jc["outcome"] = c.outcome > 0 ? "holds" : c.outcome < 0 ? "fails" : "undecided";
            jc["expected"] = c.expected;
            jc["witness"] = c.witness;
            cells.push_back(std::move(jc));
        }
        j["cells"] = std::move(cells);
    }
    return j;
}

inline Json exception_to_json(const ExceptionRecord& e) {
    Json j;
    j["canonical"] = e.canonical;
    j["p"] = e.p;
    j["sigma"] = e.sigma.to_decimal();
    j["index"] = e.index.to_decimal();
    Json members = Json::array();
    for (const auto& m : e.members) {
        Json jm;
        jm["group"] = m.spec.label();
        jm["family"] = m.family_tag;
        jm["case"] = m.case_tag;
        members.push_back(std::move(jm));
    }
    j["members"] = std::move(members);
    return j;
}

inline Json sweep_to_json(const SweepConfig& cfg, const SweepReport& rep) {
    Json j;
    j["tool"] = kToolVersion;
    Json jcfg;
    jcfg["alt_max_n"] = cfg.alt_max_n;
    jcfg["psl2_max_q"] = cfg.psl2_max_q;
    jcfg["sp4_max_q"] = cfg.sp4_max_q;
    Json decl = Json::array();
    for (const auto& d : cfg.declared_undecided)
        decl.push_back(d.family + " param=" + std::to_string(d.param) +
                       " p=" + std::to_string(d.p));
    jcfg["declared_undecided"] = std::move(decl);
    j["config"] = std::move(jcfg);
    j["cells"] = rep.cells.size();
    j["matches_expected"] = rep.matches_expected;
    j["undecided_declared"] = rep.undecided_declared;
    j["undecided_undeclared"] = rep.undecided_undeclared;
    Json exc = Json::array();
    for (const auto& e : rep.exceptions) exc.push_back(exception_to_json(e));
    j["exceptions"] = std::move(exc);
    j["mismatches"] = rep.mismatches;
    return j;
}

inline std::string claims_to_csv(const std::vector<ClaimRecord>& recs) {
    std::string out = "claim,point,outcome,expected,witness\n";
    auto csv_quote = [](const std::string& s) {
        std::string r = "\"";
        for (char c : s) { if (c == '"') r += '"'; r += c; }
        return r + "\"";
    };
    for (const auto& rec : recs)
        for (const auto& c : rec.cells)
            out += rec.id + "," + csv_quote(c.point) + "," +
                   (c.outcome > 0 ? "holds" : c.outcome < 0 ? "fails" : "undecided") + "," +
                   (c.expected ? "yes" : "no") + "," + csv_quote(c.witness) + "\n";
    return out;
}

inline std::string exceptions_to_csv(const SweepReport& rep) {
    std::string out = "family,group,canonical,p,case,sigma,index\n";
    for (const auto& e : rep.exceptions)
        for (const auto& m : e.members)
            out += m.family_tag + "," + m.spec.label() + "," + e.canonical + "," +
                   std::to_string(e.p) + "," + m.case_tag + "," + e.sigma.to_decimal() + "," +
                   e.index.to_decimal() + "\n";
    return out;
}

} // namespace degsum
