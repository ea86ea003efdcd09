// degsum command line: exact character degree sums, claim verification, and
// classification sweeps.
//
// Exit codes: 0 success, 1 claim failure or sweep mismatch, 2 usage error,
// 3 resource cap exceeded.

#include <degsum/report.hpp>

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>

using namespace degsum;

namespace {

std::filesystem::path data_dir_from(const std::string& flag_value) {
    if (!flag_value.empty()) return flag_value;
    if (const char* env = std::getenv("DEGSUM_DATA_DIR")) return env;
    return DEGSUM_DEFAULT_DATA_DIR;
}

void print_sigma(const std::string& what, const SigmaResult& r) {
    std::cout << what << " = " << r.value.to_string() << "  ["
              << (r.kind == SigmaKind::exact ? "exact" : "upper bound") << "; " << r.source
              << "]\n";
}

int cmd_charsum(const std::string& family, std::uint64_t n, std::uint64_t q, bool bound_only) {
    if (family == "sym") {
        std::cout << "Sigma(Sym(" << n << ")) = " << sigma_sym(n).to_decimal()
                  << "  [exact; involution count]\n";
    } else if (family == "gl") {
        std::cout << "Sigma(GL(" << n << "," << q << ")) = " << sigma_gl(n, q).to_decimal()
                  << "  [exact]\n";
    } else if (family == "gu") {
        std::cout << "Sigma(GU(" << n << "," << q << ")) = " << sigma_gu(n, q).to_decimal()
                  << "  [exact]\n";
    } else if (family == "go") {
        std::cout << "Sigma(GO(" << 2 * n + 1 << "," << q << ")) = "
                  << sigma_go_odd(n, q).to_decimal() << "  [exact]\n";
    } else if (family == "psl2") {
        print_sigma("Sigma(PSL(2," + std::to_string(q) + "))",
                    {QuadInt{Rat(Int(sigma_small_lie(GroupSpec{Family::LinearPSL, 2, q, {}})))},
                     SigmaKind::exact, "closed form"});
    } else if (family == "pgl2" || family == "pgl3" || family == "pgu3") {
        Family f = family == "pgu3" ? Family::UnitaryPGU : Family::LinearPGL;
        std::uint64_t nn = family == "pgl2" ? 2 : 3;
        print_sigma("Sigma(" + std::string(family == "pgu3" ? "PGU" : "PGL") + "(" +
                        std::to_string(nn) + "," + std::to_string(q) + "))",
                    {QuadInt{Rat(Int(sigma_small_lie(GroupSpec{f, nn, q, {}})))},
                     SigmaKind::exact, "closed form"});
    } else if (family == "2f4") {
        std::cout << "Sigma(2F4(" << q << ")) = " << sigma_2f4_exact(q).to_decimal()
                  << "  [exact; degree-sum polynomial]\n";
    } else {
        throw CLI::ValidationError("charsum", "unknown family " + family);
    }
    (void)bound_only;
    return 0;
}

int cmd_charsum_exc(const std::string& family, std::uint64_t q) {
    static const std::map<std::string, Family> fams = {
        {"2B2", Family::Suzuki2B2}, {"3D4", Family::Triality3D4}, {"G2", Family::G2},
        {"2G2", Family::Ree2G2},    {"F4", Family::F4},           {"2F4", Family::Ree2F4},
        {"E6", Family::E6},         {"2E6", Family::Twisted2E6},  {"E7", Family::E7},
        {"E8", Family::E8},
    };
    auto it = fams.find(family);
    if (it == fams.end()) throw CLI::ValidationError("charsum", "unknown exceptional family " + family);
    GroupSpec s{it->second, 0, q, {}};
    print_sigma("C(" + s.label() + ")", sigma_exceptional_bound(s));
    return 0;
}

int cmd_verify(const std::vector<std::string>& ids, bool all, const std::string& format,
               bool with_cells) {
    std::vector<std::string> run_ids = ids;
    if (all) {
        run_ids.clear();
        for (const auto& c : claim_registry()) run_ids.push_back(c.id);
    }
    if (run_ids.empty()) throw CLI::ValidationError("verify", "no claim ids given (or use --all)");

    std::vector<ClaimRecord> recs;
    bool ok = true;
    for (const auto& id : run_ids) {
        recs.push_back(run_claim(id));
        ok = ok && recs.back().verdict == Verdict::HOLDS;
    }
    if (format == "json") {
        Json doc;
        doc["tool"] = kToolVersion;
        Json arr = Json::array();
        for (const auto& r : recs) arr.push_back(claim_to_json(r, with_cells));
        doc["claims"] = std::move(arr);
        std::cout << doc.dump(2) << "\n";
    } else if (format == "csv") {
        std::cout << claims_to_csv(recs);
    } else {
        for (const auto& r : recs) {
            std::cout << r.id << ": " << verdict_name(r.verdict) << "  (" << r.holding_cells()
                      << "/" << r.cells.size() << " cells hold)\n";
            std::cout << "    " << r.statement << "\n";
            if (!r.note.empty()) std::cout << "    note: " << r.note << "\n";
            if (with_cells)
                for (const auto& c : r.cells)
                    std::cout << "    " << c.point << ": "
                              << (c.outcome > 0 ? "holds" : c.outcome < 0 ? "FAILS" : "undecided")
                              << (c.expected ? "" : "  << unexpected") << "\n";
        }
    }
    return ok ? 0 : 1;
}

int cmd_classify(const SweepConfig& cfg, const std::string& expected_file,
                 const std::filesystem::path& data_dir, const std::string& format) {
    ExpectedList expected = load_expected_list(
        expected_file.empty() ? data_dir / "expected_exceptions.pred" : std::filesystem::path(expected_file));
    TableCatalog tables(data_dir);
    SweepReport rep = run_sweep(cfg, expected, &tables);
    if (format == "json") {
        std::cout << sweep_to_json(cfg, rep).dump(2) << "\n";
    } else if (format == "csv") {
        std::cout << exceptions_to_csv(rep);
    } else {
        std::cout << "cells: " << rep.cells.size() << ", exceptions: " << rep.exceptions.size()
                  << ", declared undecided: " << rep.undecided_declared << "\n";
        for (const auto& e : rep.exceptions) {
            std::cout << "  " << e.canonical << " p=" << e.p << "  Sigma="
                      << e.sigma.to_decimal() << " >= index=" << e.index.to_decimal();
            for (const auto& m : e.members)
                std::cout << "  [" << m.spec.label() << " case " << m.case_tag << "]";
            std::cout << "\n";
        }
        for (const auto& m : rep.mismatches) std::cout << "  MISMATCH: " << m << "\n";
        std::cout << (rep.matches_expected ? "expected list: MATCH" : "expected list: MISMATCH")
                  << "\n";
    }
    return rep.matches_expected ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact character-degree-sum verification toolkit"};
    app.set_version_flag("--version", kToolVersion);
    app.set_config("--config");
    app.require_subcommand(1);
    std::string data_dir_flag;
    app.add_option("--data-dir", data_dir_flag,
                   "directory with degree tables and expected lists "
                   "(default: $DEGSUM_DATA_DIR or the bundled data/)");

    // charsum
    auto* sc_char = app.add_subcommand("charsum", "print a character degree sum or bound");
    std::string kind;
    std::uint64_t n = 0, q = 0;
    bool bound_only = false;
    sc_char->add_option("kind", kind,
                        "sym|gl|gu|go|psl2|pgl2|pgl3|pgu3|2f4|exc")->required();
    sc_char->add_option("-n,--n", n, "degree / dimension / m parameter");
    sc_char->add_option("-q,--q", q, "field parameter (prime power)");
    std::string exc_family;
    sc_char->add_option("--family", exc_family, "exceptional family tag for 'exc'");
    sc_char->add_flag("--bound", bound_only, "print the C bound (exc only)");

    // verify
    auto* sc_verify = app.add_subcommand("verify", "re-run registered claims");
    std::vector<std::string> ids;
    bool all = false, with_cells = false;
    std::string format = "text";
    sc_verify->add_option("ids", ids, "claim ids (C1..C11)");
    sc_verify->add_flag("--all", all, "run every registered claim");
    sc_verify->add_option("--format", format, "text|json|csv")
        ->check(CLI::IsMember({"text", "json", "csv"}));
    sc_verify->add_flag("--cells", with_cells, "include per-cell outcomes");

    // classify
    auto* sc_classify = app.add_subcommand("classify", "run the classification sweeps");
    SweepConfig cfg;
    std::string expected_file;
    std::string cls_format = "text";
    std::vector<std::string> undecided_flags;
    sc_classify->add_option("--max-n", cfg.alt_max_n, "Alt box: 5..max-n (0 disables)");
    sc_classify->add_option("--max-q", cfg.psl2_max_q, "PSL2 box: 4..max-q (0 disables)");
    sc_classify->add_option("--sp4-max-q", cfg.sp4_max_q, "Sp4 box: 2..max (0 disables)");
    sc_classify->add_option("--expected", expected_file, "expected-list predicate file");
    sc_classify->add_option("--declare-undecided", undecided_flags,
                            "family:param:p cells excluded from the comparison");
    sc_classify->add_option("--threads", cfg.threads, "worker threads");
    sc_classify->add_option("--format", cls_format, "text|json|csv")
        ->check(CLI::IsMember({"text", "json", "csv"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    std::filesystem::path data_dir = data_dir_from(data_dir_flag);
    try {
        if (sc_char->parsed()) {
            if (kind == "exc") return cmd_charsum_exc(exc_family, q);
            return cmd_charsum(kind, n, q, bound_only);
        }
        if (sc_verify->parsed()) return cmd_verify(ids, all, format, with_cells);
        if (sc_classify->parsed()) {
            if (!undecided_flags.empty()) cfg.declared_undecided.clear();
            for (const auto& s : undecided_flags) {
                UndecidedDeclaration d;
                auto c1 = s.find(':'), c2 = s.rfind(':');
                if (c1 == std::string::npos || c2 == c1)
                    throw CLI::ValidationError("classify", "--declare-undecided wants family:param:p");
                d.family = s.substr(0, c1);
                d.param = std::stoull(s.substr(c1 + 1, c2 - c1 - 1));
                d.p = std::stoull(s.substr(c2 + 1));
                cfg.declared_undecided.push_back(d);
            }
            return cmd_classify(cfg, expected_file, data_dir, cls_format);
        }
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::length_error& e) {
        std::cerr << "resource cap: " << e.what() << "\n";
        return 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
