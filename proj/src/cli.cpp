#include "icosa/cli.hpp"

#include <algorithm>
#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "icosa/expr.hpp"
#include "icosa/frobsim.hpp"
#include "icosa/identities.hpp"
#include "icosa/isobaric.hpp"
#include "icosa/rescalc.hpp"
#include "icosa/serial.hpp"
#include "icosa/verify.hpp"

namespace icosa {

namespace {

// Character-table display: nine canonical labels where they apply, otherwise
// the plain integer.
std::string class_value_str(const GoldenInt& v) { return in_A(v) ? a_label(v) : v.str(); }

long r_as_long(const GoldenRational& v) {
    // Every table entry is a rational integer.
    return v.num.a.convert_to<long>();
}

int cmd_rtable(const std::string& format) {
    RFunctional r;
    if (format == "json") {
        ordered_json out = ordered_json::array();
        for (long i = 0; i <= RFunctional::kMaxDegree; ++i)
            for (long j = 0; i + j <= RFunctional::kMaxDegree; ++j)
                out.push_back({{"i", i}, {"j", j}, {"r", r_as_long(r.r_monomial(i, j))}});
        std::cout << out.dump(2) << "\n";
        return 0;
    }
    if (format == "csv") {
        std::cout << "i,j,r\n";
        for (long i = 0; i <= RFunctional::kMaxDegree; ++i)
            for (long j = 0; i + j <= RFunctional::kMaxDegree; ++j)
                std::cout << i << "," << j << "," << r_as_long(r.r_monomial(i, j)) << "\n";
        return 0;
    }
    std::cout << "i\\j";
    for (long j = 0; j <= 8; ++j) std::printf("%4ld", j);
    std::cout << "\n---+------------------------------------\n";
    for (long i = 0; i <= 8; ++i) {
        std::printf("%2ld |", i);
        for (long j = 0; i + j <= 8; ++j) std::printf("%4ld", r_as_long(r.r_monomial(i, j)));
        std::cout << "\n";
    }
    return 0;
}

int cmd_r(const std::string& expr, const std::string& format) {
    static const RFunctional kR;
    GoldenRational v = kR.r_poly(parse_poly(expr));
    if (format == "json") {
        ordered_json out{{"expr", expr}, {"value", golden_to_json(v)}, {"text", v.str()}};
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << v.str() << "\n";
    }
    return 0;
}

int cmd_identities(const std::string& only, const std::string& format) {
    std::vector<const IdentityRecord*> todo;
    for (const auto& rec : identity_ledger())
        if (only.empty() || rec.id == only) todo.push_back(&rec);
    if (todo.empty()) throw UnknownIdentity("no ledger entry named '" + only + "'");
    bool all = true;
    ordered_json rows = ordered_json::array();
    for (const auto* rec : todo) {
        IdentityReport rep = rec->run();
        all = all && rep.pass;
        if (format == "json") {
            rows.push_back({{"id", rec->id}, {"pass", rep.pass}, {"location", rec->location}});
        } else {
            std::cout << rec->id << " " << (rep.pass ? "PASS" : "FAIL") << "  " << rec->location
                      << "\n";
            if (!rep.pass) std::cout << "   " << rep.detail << "\n";
        }
    }
    if (format == "json") std::cout << (only.empty() ? rows : rows.at(0)).dump(2) << "\n";
    return all ? 0 : 1;
}

int cmd_chartable(const std::string& format) {
    const auto& table = group_table();
    std::vector<std::string> header{""}, sizes{"size"};
    for (int c = 0; c < 9; ++c) {
        header.push_back(table.cls(c).rep.str());
        sizes.push_back(std::to_string(table.cls(c).size));
    }
    std::vector<std::vector<std::string>> rows;
    for (int i = 0; i < 9; ++i) {
        std::vector<std::string> row{"chi_" + std::to_string(i)};
        ClassFunction values = char_from_h(i);
        for (int c = 0; c < 9; ++c) row.push_back(class_value_str(values[c].num));
        rows.push_back(std::move(row));
    }
    if (format == "json") {
        ordered_json classes = ordered_json::array();
        for (int c = 0; c < 9; ++c)
            classes.push_back(
                {{"rep", table.cls(c).rep.str()}, {"size", table.cls(c).size}});
        ordered_json chars = ordered_json::array();
        for (const auto& row : rows) {
            ordered_json values = ordered_json::array();
            for (std::size_t c = 1; c < row.size(); ++c) values.push_back(row[c]);
            chars.push_back({{"name", row[0]}, {"values", values}});
        }
        std::cout << ordered_json{{"classes", classes}, {"characters", chars}}.dump(2) << "\n";
        return 0;
    }
    if (format == "csv") {
        auto emit = [](const std::vector<std::string>& row) {
            for (std::size_t c = 0; c < row.size(); ++c)
                std::cout << row[c] << (c + 1 < row.size() ? "," : "\n");
        };
        emit(header);
        emit(sizes);
        for (const auto& row : rows) emit(row);
        return 0;
    }
    std::vector<std::size_t> width(10, 0);
    auto widen = [&width](const std::vector<std::string>& row) {
        for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
    };
    widen(header);
    widen(sizes);
    for (const auto& row : rows) widen(row);
    auto emit = [&width](const std::vector<std::string>& row) {
        for (std::size_t c = 0; c < row.size(); ++c) {
            std::cout << std::string(width[c] - row[c].size() + (c ? 2 : 0), ' ') << row[c];
        }
        std::cout << "\n";
    };
    emit(header);
    emit(sizes);
    for (const auto& row : rows) emit(row);
    return 0;
}

ordered_json mult_row(long k) {
    auto m = multiplicities(k);
    return {{"k", k}, {"m", m}, {"degree", k + 1}};
}

int cmd_mult(long k, long upto, bool have_k) {
    if (have_k) {
        std::cout << mult_row(k).dump(2) << "\n";
        return 0;
    }
    ordered_json rows = ordered_json::array();
    for (long kk = 0; kk <= upto; ++kk) rows.push_back(mult_row(kk));
    std::cout << rows.dump(2) << "\n";
    return 0;
}

int cmd_pik(long k) {
    IsobaricRep rep = build_Pi(k);
    ordered_json atoms = ordered_json::array();
    for (const auto& atom : atom_table()) atoms.push_back(atom.label);
    ordered_json out{{"k", k}, {"mult", rep.mult}, {"degree", rep.degree()}, {"atoms", atoms}};
    std::cout << out.dump(2) << "\n";
    return 0;
}

int cmd_densities(const std::string& format) {
    auto dens = all_densities();
    if (format == "json") {
        ordered_json out;
        for (int i = 0; i < 9; ++i) out[a_label(a_set()[i])] = dens[i].str();
        std::cout << out.dump(2) << "\n";
        return 0;
    }
    std::printf("%-8s %-7s %s\n", "alpha", "exact", "decimal");
    for (int i = 0; i < 9; ++i)
        std::printf("%-8s %-7s %.6f\n", a_label(a_set()[i]).c_str(), dens[i].str().c_str(),
                    dens[i].to_double());
    return 0;
}

int cmd_simulate(std::uint64_t x, std::uint64_t seed, const std::vector<std::string>& fexprs,
                 unsigned threads, const std::string& format) {
    std::vector<std::pair<std::string, BiPoly>> targets;
    if (fexprs.empty()) {
        targets = default_targets();
    } else {
        for (const auto& text : fexprs) targets.emplace_back(text, parse_poly(text));
    }
    SimReport rep = run_report(x, seed, targets, threads);
    if (format == "json") {
        std::cout << report_to_json(rep).dump(2) << "\n";
        return 0;
    }
    std::cout << "x       " << rep.x << "\n";
    std::cout << "seed    " << rep.seed << "\n";
    std::cout << "pi(x)   " << rep.pi_x << "\n\n";
    std::printf("%-8s %8s %10s %10s\n", "alpha", "count", "density", "target");
    auto targets_exact = all_densities();
    for (int i = 0; i < 9; ++i)
        std::printf("%-8s %8ld %10.6f %10.6f\n", a_label(a_set()[i]).c_str(), rep.counts[i],
                    rep.densities[i], targets_exact[i].to_double());
    std::cout << "\n";
    std::size_t fw = 1;
    for (const auto& row : rep.partial_sums) fw = std::max(fw, row.label.size());
    std::printf("%-*s %10s %10s\n", static_cast<int>(fw), "f", "ratio", "target");
    for (const auto& row : rep.partial_sums)
        std::printf("%-*s %10.6f %10.6f\n", static_cast<int>(fw), row.label.c_str(), row.ratio,
                    row.target);
    std::printf("\nruntime %.1f ms\n", rep.runtime_ms);
    return 0;
}

int cmd_verify_all(std::uint64_t x, std::uint64_t seed, unsigned threads) {
    VerifyReport rep = verify_all(x, seed, threads);
    ordered_json out;
    for (const auto& section : rep.sections) out[section.name] = section.pass;
    out["all_pass"] = rep.all_pass;
    std::cout << out.dump(2) << "\n";
    if (!rep.all_pass)
        for (const auto& section : rep.sections)
            if (!section.pass) std::cerr << section.name << ": " << section.detail << "\n";
    return rep.all_pass ? 0 : 1;
}

}  // namespace

int run_cli(int argc, char** argv) {
    CLI::App app{"Exact arithmetic over Z[phi]: residue functional, identity ledger,\n"
                 "SL2(F5) character theory, isobaric multiplicities, and a seeded\n"
                 "equidistribution simulator."};
    app.require_subcommand(1);
    auto format_check = CLI::IsMember({"text", "csv", "json"});
    auto format2_check = CLI::IsMember({"text", "json"});

    auto* rtable = app.add_subcommand("rtable", "Print the 45-entry table r(x^i y^j), i+j <= 8");
    std::string rtable_format = "text";
    rtable->add_option("--format", rtable_format, "text, csv or json")->check(format_check);

    auto* rcmd = app.add_subcommand("r", "Evaluate the residue functional on an expression");
    std::string r_expr, r_format = "text";
    rcmd->add_option("expr", r_expr, "polynomial in x, y over Z[phi]")->required();
    rcmd->add_option("--format", r_format, "text or json")->check(format2_check);

    auto* ident = app.add_subcommand("identities", "Check the polynomial identity ledger I1..I12");
    std::string ident_only, ident_format = "text";
    ident->add_option("--only", ident_only, "check a single ledger entry by id");
    ident->add_option("--format", ident_format, "text or json")->check(format2_check);

    auto* chartab = app.add_subcommand("chartable", "Print the SL2(F5) character table");
    std::string chartab_format = "text";
    chartab->add_option("--format", chartab_format, "text, csv or json")->check(format_check);

    auto* mult = app.add_subcommand("mult", "Multiplicities of the irreducibles in P_k(chi)");
    long mult_k = 0, mult_upto = 0;
    auto* mult_k_opt = mult->add_option("--k", mult_k, "single row k");
    auto* mult_upto_opt = mult->add_option("--upto", mult_upto, "all rows 0..K");
    mult_k_opt->excludes(mult_upto_opt);
    mult_upto_opt->excludes(mult_k_opt);

    auto* pik = app.add_subcommand("pik", "The isobaric decomposition attached to P_k");
    long pik_k = 0;
    pik->add_option("--k", pik_k, "symmetric-power index")->required();

    auto* dens = app.add_subcommand("densities", "The nine exact trace-value densities");
    std::string dens_format = "text";
    dens->add_option("--format", dens_format, "text or json")->check(format2_check);

    auto* sim = app.add_subcommand("simulate", "Seeded equidistribution simulation up to x");
    std::uint64_t sim_x = 1000000, sim_seed = 42;
    unsigned sim_threads = 0;
    std::vector<std::string> sim_f;
    std::string sim_format = "text";
    sim->add_option("--x", sim_x, "prime cutoff (default 1000000)");
    sim->add_option("--seed", sim_seed, "stream seed (default 42)");
    sim->add_option("--f", sim_f, "partial-sum target expression (repeatable)");
    sim->add_option("--threads", sim_threads, "worker threads (0 = hardware)");
    sim->add_option("--format", sim_format, "text or json")->check(format2_check);

    auto* verify = app.add_subcommand("verify-all", "Run every section check; JSON pass flags");
    std::uint64_t verify_x = 1000000, verify_seed = 42;
    unsigned verify_threads = 0;
    verify->add_option("--x", verify_x, "simulation cutoff (default 1000000)");
    verify->add_option("--seed", verify_seed, "simulation seed (default 42)");
    verify->add_option("--threads", verify_threads, "worker threads (0 = hardware)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (rtable->parsed()) return cmd_rtable(rtable_format);
        if (rcmd->parsed()) return cmd_r(r_expr, r_format);
        if (ident->parsed()) return cmd_identities(ident_only, ident_format);
        if (chartab->parsed()) return cmd_chartable(chartab_format);
        if (mult->parsed()) {
            if (mult_k_opt->count() == 0 && mult_upto_opt->count() == 0) {
                std::cerr << "mult: one of --k or --upto is required\n";
                return 2;
            }
            return cmd_mult(mult_k, mult_upto, mult_k_opt->count() > 0);
        }
        if (pik->parsed()) return cmd_pik(pik_k);
        if (dens->parsed()) return cmd_densities(dens_format);
        if (sim->parsed()) return cmd_simulate(sim_x, sim_seed, sim_f, sim_threads, sim_format);
        if (verify->parsed()) return cmd_verify_all(verify_x, verify_seed, verify_threads);
    } catch (const SyntaxError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const UnknownIdentity& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;  // unreachable with require_subcommand(1)
}

}  // namespace icosa
