#include "pqblocks/cli.hpp"

#include <algorithm>
#include <fstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "pqblocks/errors.hpp"
#include "pqblocks/oracle.hpp"
#include "pqblocks/records.hpp"
#include "pqblocks/sweep.hpp"

namespace pqblocks {

namespace {

using nlohmann::json;

struct PointArgs {
    std::string family;
    int n = 0;
    std::int64_t p = 0, q = 0;
    std::int64_t field = 0;
    int epsilon = 1;
    bool json = false;
};

struct Outcome {
    json record;
    std::string label;
    std::string summary;  // one human-readable line
};

void add_point_options(CLI::App* cmd, PointArgs& a) {
    cmd->add_option("family", a.family, "sym, alt, typea or typebc")->required();
    cmd->add_option("-n", a.n, "rank or degree")->required();
    cmd->add_option("-p", a.p, "first prime")->required();
    cmd->add_option("-q", a.q, "second prime")->required();
    cmd->add_option("--field", a.field, "field size Q (Lie families)");
    cmd->add_option("--epsilon", a.epsilon, "+1 for SL_n(Q), -1 for SU_n(Q)");
    cmd->add_flag("--json", a.json, "print JSON");
}

Outcome build_witness(const PointArgs& a) {
    Outcome o;
    Family f = parse_family(a.family);
    if (f == Family::TypeA || f == Family::TypeBC) require(a.field != 0, "--field is required for Lie families");
    switch (f) {
        case Family::Sym: {
            auto w = witness_symmetric(a.n, a.p, a.q);
            o.record = sym_record(a.n, a.p, a.q, w);
            o.label = oracle_label(w);
            o.summary = "S_" + std::to_string(a.n) + ": " + w.partition.to_string() + " (case " +
                        to_string(w.case_tag) + ", degree " + o.record["degree"].get<std::string>() + ")";
            break;
        }
        case Family::Alt: {
            auto w = witness_alternating(a.n, a.p, a.q);
            o.record = alt_record(a.n, a.p, a.q, w);
            o.label = oracle_label(w);
            o.summary = "A_" + std::to_string(a.n) + ": " + w.partition.to_string() + " " + to_string(w.constituent) +
                        " (case " + to_string(w.case_tag) + ", degree " + w.degree.get_str() + ")";
            break;
        }
        case Family::TypeA: {
            auto ctx = TypeAContext::make(a.n, a.field, a.epsilon, a.p, a.q);
            auto w = witness_typeA(ctx);
            o.record = typeA_record(ctx, w);
            o.label = oracle_label(w);
            o.summary = std::string(a.epsilon == 1 ? "SL_" : "SU_") + std::to_string(a.n) + "(" +
                        std::to_string(a.field) + "): " + w.partition.to_string() + " (case " +
                        to_string(w.case_tag) + ")";
            break;
        }
        case Family::TypeBC: {
            auto ctx = TypeBCContext::make(a.n, a.field, a.p, a.q);
            auto w = witness_typeBC(ctx);
            o.record = typeBC_record(ctx, w);
            o.label = oracle_label(w);
            std::string sub = w.subcase == BCSubcase::None ? "" : std::string(", subcase ") + to_string(w.subcase);
            o.summary = "BC_" + std::to_string(a.n) + "(" + std::to_string(a.field) + "): " + w.symbol.to_string() +
                        " (case " + to_string(w.case_tag) + sub + ")";
            break;
        }
    }
    return o;
}

IntersectionReport build_report(const PointArgs& a) {
    switch (parse_family(a.family)) {
        case Family::Sym: return oracle::intersection_sym(a.n, a.p, a.q);
        case Family::Alt: return oracle::intersection_alt(a.n, a.p, a.q);
        case Family::TypeA: return oracle::intersection_typeA(a.n, a.field, a.epsilon, a.p, a.q);
        case Family::TypeBC: return oracle::intersection_typeBC(a.n, a.field, a.p, a.q);
    }
    throw InvalidArgument("unknown family");
}

std::string trivial_label(const PointArgs& a) {
    if (parse_family(a.family) == Family::TypeBC) return trivial_symbol(a.n).to_string();
    return Partition::row(a.n).to_string();
}

int cmd_witness(const PointArgs& a, std::ostream& out) {
    auto o = build_witness(a);
    out << (a.json ? o.record.dump() : o.summary) << "\n";
    return kExitOk;
}

int cmd_verify(const PointArgs& a, std::ostream& out) {
    auto rep = build_report(a);
    auto o = build_witness(a);
    bool contains = rep.contains(o.label);
    bool nontrivial = rep.labels != std::vector<std::string>{trivial_label(a)};
    if (a.json) {
        json j = {{"witness", o.record},
                  {"intersection", to_json(rep)},
                  {"in_intersection", contains},
                  {"nontrivial", nontrivial}};
        out << j.dump() << "\n";
    } else {
        out << o.summary << "\n";
        out << "intersection (" << rep.size() << "):";
        for (const auto& l : rep.labels) out << " " << l;
        out << "\n" << (contains && nontrivial ? "ok" : "FAILED") << "\n";
    }
    return contains && nontrivial ? kExitOk : kExitVerification;
}

struct SweepArgs {
    std::string family;
    int n_min = 0, n_max = 0;
    std::int64_t prime_bound = 0;
    std::vector<std::int64_t> fields{2};
    std::vector<int> epsilons{1};
    std::string out = "-";
    std::string csv;
    int jobs = 1;
    bool oracle = false;
};

int cmd_sweep(const SweepArgs& a, std::ostream& out) {
    SweepConfig cfg;
    cfg.family = parse_family(a.family);
    cfg.n_min = a.n_min;
    cfg.n_max = a.n_max;
    cfg.prime_bound = a.prime_bound;
    cfg.fields = a.fields;
    cfg.epsilons = a.epsilons;
    cfg.oracle = a.oracle;
    cfg.jobs = a.jobs;
    auto res = run_sweep(cfg);

    std::ofstream file;
    if (a.out != "-") {
        file.open(a.out);
        require(file.good(), "cannot open " + a.out);
    }
    std::ostream& sink = a.out == "-" ? out : file;
    for (const auto& row : res.rows) sink << row.record.dump() << "\n";
    sink << res.summary().dump() << "\n";
    if (!a.csv.empty()) {
        std::ofstream csv(a.csv);
        require(csv.good(), "cannot open " + a.csv);
        csv << kCsvHeader << "\n";
        for (const auto& row : res.rows) csv << row.csv << "\n";
    }
    if (a.out != "-") out << res.summary().dump() << "\n";
    return res.failures == 0 ? kExitOk : kExitVerification;
}

int cmd_classify(int max_n, bool as_json, std::ostream& out) {
    require(max_n >= 4 && max_n <= 60, "classify: --max-n must be in [4, 60]");
    auto triples = classify_triples(max_n);
    // Literal set comparison against the exhaustive intersections where they are affordable.
    std::vector<std::string> mismatches;
    for (int n = 4; n <= std::min(max_n, oracle::kMaxIntersection); ++n) {
        oracle::SymmetricTable table(n);
        auto primes = primes_up_to(n);
        for (std::size_t i = 0; i < primes.size(); ++i) {
            for (std::size_t j = i + 1; j < primes.size(); ++j) {
                auto q = primes[i], p = primes[j];
                auto rep = table.sym(p, q);
                std::vector<std::string> linear_labels{Partition::column(n).to_string(), Partition::row(n).to_string()};
                std::sort(linear_labels.begin(), linear_labels.end());
                bool linear = rep.labels == linear_labels;
                bool claimed = classify_small_intersection(n, p, q) == SmallIntersection::LinearOnly;
                if (linear != claimed) {
                    mismatches.push_back(std::to_string(n) + "," + std::to_string(p) + "," + std::to_string(q));
                }
            }
        }
    }
    if (as_json) {
        json rows = json::array();
        for (auto [n, p] : triples) rows.push_back({{"n", n}, {"p", p}, {"q", 2}});
        out << json{{"max_n", max_n}, {"triples", rows}, {"oracle_checked_up_to", std::min(max_n, 30)},
                    {"mismatches", mismatches}}
                   .dump()
            << "\n";
    } else {
        for (auto [n, p] : triples) out << "n=" << n << " p=" << p << " q=2\n";
        for (const auto& m : mismatches) out << "oracle mismatch at (n,p,q)=(" << m << ")\n";
    }
    return mismatches.empty() ? kExitOk : kExitVerification;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Witness characters in principal blocks for two primes"};
    app.name("pqblocks");
    app.require_subcommand(1);

    PointArgs wargs, vargs;
    auto* witness = app.add_subcommand("witness", "construct and check a witness character");
    add_point_options(witness, wargs);
    auto* verify = app.add_subcommand("verify", "compare a witness with the exhaustive intersection");
    add_point_options(verify, vargs);

    SweepArgs sargs;
    auto* sweep = app.add_subcommand("sweep", "run witnesses over a parameter grid");
    sweep->add_option("--family", sargs.family, "sym, alt, typea or typebc")->required();
    sweep->add_option("--n-min", sargs.n_min, "smallest n")->required();
    sweep->add_option("--n-max", sargs.n_max, "largest n")->required();
    sweep->add_option("--prime-bound", sargs.prime_bound, "only primes up to this bound");
    sweep->add_option("--fields", sargs.fields, "comma separated Q values")->delimiter(',');
    sweep->add_option("--epsilons", sargs.epsilons, "comma separated signs for type A")->delimiter(',');
    sweep->add_option("--out", sargs.out, "JSON lines output, '-' for stdout");
    sweep->add_option("--csv", sargs.csv, "CSV summary output");
    sweep->add_option("-j,--jobs", sargs.jobs, "worker threads");
    sweep->add_flag("--oracle", sargs.oracle, "check containment in the exhaustive intersection");

    int max_n = 0;
    bool classify_json = false;
    auto* classify = app.add_subcommand("classify", "list (n, p, 2) whose S_n intersection is linear only");
    classify->add_option("--max-n", max_n, "largest n")->required();
    classify->add_flag("--json", classify_json, "print JSON");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err) == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*witness) return cmd_witness(wargs, out);
        if (*verify) return cmd_verify(vargs, out);
        if (*sweep) return cmd_sweep(sargs, out);
        if (*classify) return cmd_classify(max_n, classify_json, out);
    } catch (const InvalidArgument& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const VerificationFailure& e) {
        err << "verification failed: " << e.what() << "\n";
        return kExitVerification;
    }
    return kExitUsage;
}

}  // namespace pqblocks
