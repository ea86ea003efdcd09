// Bounded classification sweeps over the Alt, PSL2 and Sp4/PSp4 boxes, with
// a deterministic cell order, optional concurrent evaluation, and comparison
// of the computed exception set against an expected-list predicate file.
//
// Undecided cells are first-class: a cell the engine cannot decide must be
// declared in the config to be excluded from the comparison, otherwise the
// sweep reports a mismatch rather than silently skipping it.

#pragma once

#include <degsum/classify.hpp>
#include <degsum/predicate.hpp>

#include <atomic>
#include <thread>

namespace degsum {

struct UndecidedDeclaration {
    std::string family;   // "Alt" | "PSL2" | "Sp4"
    std::uint64_t param;  // n or q
    std::uint64_t p;
};

struct SweepConfig {
    std::uint64_t alt_max_n = 18;    // 0 disables the box
    std::uint64_t psl2_max_q = 1024;
    std::uint64_t sp4_max_q = 5;
    std::vector<UndecidedDeclaration> declared_undecided = {{"Sp4", 5, 2}};
    unsigned threads = 1;

    static constexpr std::uint64_t kMaxAltN = 64;
    static constexpr std::uint64_t kMaxQ = 4096;

    void check_limits() const {
        if (alt_max_n > kMaxAltN || psl2_max_q > kMaxQ || sp4_max_q > kMaxQ)
            throw std::length_error("sweep: box exceeds the configured resource caps");
    }
};

struct SweepCell {
    std::string family_tag;
    GroupSpec spec;
    std::uint64_t p = 0;
    ClassifyResult result;
    std::vector<std::string> expected_cases;
    bool declared_undecided = false;

    std::string point() const {
        return spec.label() + " p=" + std::to_string(p);
    }
};

// One abstract simple group at one prime. Isomorphic cells from different
// family sweeps merge into a single record (members keeps every naming), and
// the merge cross-checks that both routes produced identical witnesses.
struct ExceptionRecord {
    struct Member {
        std::string family_tag;
        GroupSpec spec;
        std::string case_tag;
    };
    std::string canonical;
    std::uint64_t p = 0;
    Nat sigma;
    Nat index;
    std::vector<Member> members;

    bool has_family(const std::string& tag) const {
        for (const auto& m : members)
            if (m.family_tag == tag) return true;
        return false;
    }
};

struct SweepReport {
    std::vector<SweepCell> cells;
    std::vector<ExceptionRecord> exceptions;
    std::vector<std::string> mismatches;
    std::size_t undecided_declared = 0;
    std::size_t undecided_undeclared = 0;
    bool matches_expected = false;
};

namespace sweep_detail {

inline PredicateEnv env_of(const std::string& family, const GroupSpec& s, std::uint64_t p) {
    PredicateEnv e;
    e.n = static_cast<std::int64_t>(s.n_or_rank);
    e.q = static_cast<std::int64_t>(s.q);
    e.p = static_cast<std::int64_t>(p);
    if (family != "Alt") {
        auto pp = as_prime_power(s.q);
        e.ell = pp ? static_cast<std::int64_t>(pp->p) : 0;
    }
    return e;
}

inline std::vector<SweepCell> make_cells(const SweepConfig& cfg) {
    std::vector<SweepCell> cells;
    for (std::uint64_t n = 5; n <= cfg.alt_max_n; ++n) {
        GroupSpec s{Family::Alt, n, 0, {}};
        for (std::uint64_t p : primes_upto(n))
            cells.push_back({"Alt", s, p, {}, {}, false});
    }
    for (std::uint64_t q = 4; q <= cfg.psl2_max_q; ++q) {
        if (!as_prime_power(q)) continue;
        GroupSpec s{Family::LinearPSL, 2, q, {}};
        Nat S = order(s).simple_order;
        for (std::uint64_t p : prime_divisors(S))
            cells.push_back({"PSL2", s, p, {}, {}, false});
    }
    for (std::uint64_t q = 2; q <= cfg.sp4_max_q; ++q) {
        if (!as_prime_power(q)) continue;
        GroupSpec s{Family::SympPSp, 2, q, {}};
        Nat S = simple_order_of_cell(s);
        for (std::uint64_t p : prime_divisors(S))
            cells.push_back({"Sp4", s, p, {}, {}, false});
    }
    return cells;
}

} // namespace sweep_detail

inline SweepReport run_sweep(const SweepConfig& cfg, const ExpectedList& expected,
                             const TableCatalog* tables) {
    cfg.check_limits();
    SweepReport rep;
    rep.cells = sweep_detail::make_cells(cfg);

    // concurrent cell evaluation; the cell order itself fixes the output order
    const unsigned nthreads = std::max(1u, cfg.threads);
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (;;) {
            std::size_t i = next.fetch_add(1);
            if (i >= rep.cells.size()) return;
            SweepCell& cell = rep.cells[i];
            cell.result = classify(cell.spec, cell.p, tables);
            cell.expected_cases =
                expected.matching(cell.family_tag,
                                  sweep_detail::env_of(cell.family_tag, cell.spec, cell.p));
            for (const auto& d : cfg.declared_undecided)
                if (d.family == cell.family_tag && d.p == cell.p &&
                    d.param == (cell.family_tag == "Alt" ? cell.spec.n_or_rank : cell.spec.q))
                    cell.declared_undecided = true;
        }
    };
    if (nthreads == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < nthreads; ++t) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }

    // deterministic aggregation
    for (const SweepCell& cell : rep.cells) {
        const bool expected_exception = !cell.expected_cases.empty();
        switch (cell.result.verdict) {
            case ClassifyVerdict::EXCEPTION: {
                ExceptionRecord::Member member{cell.family_tag, cell.spec, {}};
                if (expected_exception) {
                    for (const auto& id : cell.expected_cases)
                        member.case_tag += (member.case_tag.empty() ? "" : "+") + id;
                } else {
                    member.case_tag = "unmatched";
                    rep.mismatches.push_back("unexpected exception at " + cell.point() +
                                             " sigma=" + cell.result.sigma_exact->to_decimal() +
                                             " index=" + cell.result.index.to_decimal());
                }
                std::string canonical = expected.canonical_label(cell.spec.label());
                ExceptionRecord* merged = nullptr;
                for (auto& er : rep.exceptions)
                    if (er.canonical == canonical && er.p == cell.p) merged = &er;
                if (merged) {
                    // same abstract group reached through another family: the
                    // witnesses must agree exactly
                    if (merged->sigma != *cell.result.sigma_exact ||
                        merged->index != cell.result.index)
                        rep.mismatches.push_back("witness disagreement across isomorphic "
                                                 "cells at " + cell.point());
                    merged->members.push_back(std::move(member));
                } else {
                    ExceptionRecord er;
                    er.canonical = canonical;
                    er.p = cell.p;
                    er.sigma = *cell.result.sigma_exact;
                    er.index = cell.result.index;
                    er.members.push_back(std::move(member));
                    rep.exceptions.push_back(std::move(er));
                }
                break;
            }
            case ClassifyVerdict::LESS:
                if (expected_exception)
                    rep.mismatches.push_back("expected exception missing at " + cell.point());
                break;
            case ClassifyVerdict::DEFINING:
                // defining-characteristic cells are outside the p != ell statement
                break;
            case ClassifyVerdict::UNDECIDED:
                if (cell.declared_undecided) {
                    ++rep.undecided_declared;
                } else {
                    ++rep.undecided_undeclared;
                    rep.mismatches.push_back("undeclared undecided cell at " + cell.point() +
                                             " (" + cell.result.trace + ")");
                }
                break;
        }
    }
    rep.matches_expected = rep.mismatches.empty();
    return rep;
}

} // namespace degsum
