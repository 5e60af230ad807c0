// Command-line front end: partition queries, abacus displays, block
// partitions, parameter tables, and the criterion-vs-oracle verifier.
//
// Exit codes: 0 success, 1 verification mismatch or internal inconsistency,
// 2 usage error.

#include <cstdlib>
#include <iostream>
#include <optional>
#include <random>
#include <string>

#include <CLI11.hpp>

#include "partblocks/json_io.hpp"
#include "partblocks/oracle.hpp"
#include "partblocks/util.hpp"

namespace pb = partblocks;

namespace {

pb::Partition parse_partition(const std::string& text) {
    std::vector<int> parts;
    std::string token;
    for (char c : text) {
        if (c == ',' || c == ' ') {
            if (!token.empty()) parts.push_back(std::stoi(token));
            token.clear();
        } else if (c != '[' && c != ']' && c != '(' && c != ')') {
            token += c;
        }
    }
    if (!token.empty() && token != "-") parts.push_back(std::stoi(token));
    return pb::Partition::of(std::move(parts));
}

int oracle_bound_from_env() {
    const char* env = std::getenv("PARTBLOCKS_ORACLE_MAX_N");
    if (!env) return pb::kDefaultOracleMaxN;
    return std::atoi(env);
}

void emit(const pb::Json& j) { std::cout << j.dump(2) << "\n"; }

struct CommonOpts {
    std::string lambda_text;
    int n = 0;
    int p = 2;
    long long delta = 1;
    bool as_json = false;
};

int cmd_core(const CommonOpts& opt) {
    pb::Partition lam = parse_partition(opt.lambda_text);
    pb::Partition core = pb::p_core(lam, opt.p);
    int b = std::max(lam.degree(), 1);
    pb::Abacus before = pb::abacus_of(lam, opt.p, b);
    pb::Abacus after = pb::abacus_of(core, opt.p, b);
    if (opt.as_json) {
        pb::Json j;
        j["lambda"] = pb::to_json(lam);
        j["p"] = opt.p;
        j["core"] = pb::to_json(core);
        j["abacus"] = pb::to_json(before);
        j["core_abacus"] = pb::to_json(after);
        emit(j);
    } else {
        std::cout << core.to_string() << "\n";
        std::cout << "abacus of " << lam.to_string() << ":\n" << pb::render_ascii(before);
        std::cout << "abacus of the core:\n" << pb::render_ascii(after);
    }
    return 0;
}

int cmd_abacus(const CommonOpts& opt, std::optional<int> delta, std::optional<int> b_opt) {
    pb::Partition lam = parse_partition(opt.lambda_text);
    int b = b_opt.value_or(lam.degree());
    if (delta) {
        pb::MarkedAbacus m = pb::marked_abacus(lam, opt.p, *delta, b);
        if (opt.as_json)
            emit(pb::to_json(m));
        else
            std::cout << pb::render_ascii(m);
    } else {
        pb::Abacus a = pb::abacus_of(lam, opt.p, b);
        if (opt.as_json)
            emit(pb::to_json(a));
        else
            std::cout << pb::render_ascii(a);
    }
    return 0;
}

int cmd_orbit(const CommonOpts& opt) {
    pb::Partition lam = parse_partition(opt.lambda_text);
    int delta = static_cast<int>(opt.delta);
    auto orbit = pb::charp_orbit(lam, opt.n, opt.p, delta);
    pb::Partition mini = pb::orbit_min(lam, opt.p, delta);
    if (opt.as_json) {
        pb::Json j;
        j["lambda"] = pb::to_json(lam);
        j["n"] = opt.n;
        j["p"] = opt.p;
        j["delta"] = delta;
        pb::Json members = pb::Json::array();
        for (const auto& mu : orbit) members.push_back(pb::to_json(mu));
        j["orbit"] = std::move(members);
        j["min"] = pb::to_json(mini);
        emit(j);
    } else {
        for (const auto& mu : orbit)
            std::cout << mu.to_string() << (mu == mini ? "  <- minimal" : "") << "\n";
    }
    return 0;
}

int cmd_blocks(const CommonOpts& opt, bool char0, bool limiting) {
    pb::BlockPartition blocks;
    if (char0)
        blocks = pb::char0_blocks(opt.n, opt.delta);
    else if (limiting)
        blocks = pb::limiting_blocks(opt.n, opt.p, static_cast<int>(opt.delta));
    else
        blocks = pb::charp_blocks(opt.n, opt.p, static_cast<int>(opt.delta));
    if (opt.as_json) {
        emit(pb::to_json(blocks));
    } else {
        for (const auto& cls : blocks.classes) {
            for (size_t i = 0; i < cls.size(); ++i)
                std::cout << (i ? " " : "") << cls[i].to_string();
            std::cout << "\n";
        }
    }
    return 0;
}

int cmd_tables(const CommonOpts& opt, bool have_p) {
    pb::Json rows = pb::Json::array();
    if (have_p) {
        for (int d = 1; d <= opt.p - 1; ++d) {
            pb::Json row;
            row["p"] = opt.p;
            row["delta"] = d;
            row["blocks"] = pb::to_json(pb::charp_blocks(opt.n, opt.p, d));
            rows.push_back(std::move(row));
        }
    } else {
        for (long long d = 1; d <= 2 * opt.n - 1; ++d) {
            pb::Json row;
            row["delta"] = d;
            row["blocks"] = pb::to_json(pb::char0_blocks(opt.n, d));
            rows.push_back(std::move(row));
        }
    }
    pb::Json j;
    j["n"] = opt.n;
    j["mode"] = have_p ? "char_p" : "char_0";
    j["entries"] = std::move(rows);
    if (opt.as_json) {
        emit(j);
    } else {
        for (const auto& row : j["entries"]) {
            std::cout << "delta = " << row["delta"] << ": "
                      << row["blocks"]["classes"].size() << " classes\n";
        }
    }
    return 0;
}

int cmd_verify(const CommonOpts& opt, bool char0, const std::string& delta_ext, int seed,
               int oracle_max_n) {
    pb::VerifyConfig config;
    config.n = opt.n;
    config.oracle_max_n = oracle_max_n;
    if (char0) {
        config.field = pb::Field::rationals();
        config.delta = pb::FieldScalar::integer(config.field, opt.delta);
    } else if (!delta_ext.empty()) {
        config.field = pb::Field::prime_square(opt.p);
        auto comma = delta_ext.find(',');
        if (comma == std::string::npos)
            throw std::invalid_argument("--delta-ext expects two integers a,b");
        config.delta =
            pb::FieldScalar::extension(config.field, std::stoll(delta_ext.substr(0, comma)),
                                       std::stoll(delta_ext.substr(comma + 1)));
    } else {
        config.field = pb::Field::prime(opt.p);
        config.delta = pb::FieldScalar::integer(config.field, opt.delta);
    }
    if (config.n > oracle_max_n)
        throw std::invalid_argument(
            "verify: n exceeds the oracle bound (override with PARTBLOCKS_ORACLE_MAX_N)");

    pb::VerifyOutcome outcome = pb::run_verify(config);
    pb::Json report = pb::to_json(outcome, config);

    // Randomized combinatorial spot checks alongside the oracle run.
    std::mt19937 rng(static_cast<unsigned>(seed));
    int samples = 25;
    bool spot_ok = true;
    if (config.field.kind() != pb::Field::Kind::rationals && config.delta.in_prime_subfield()) {
        int p = config.field.p();
        int d = static_cast<int>(config.delta.residue());
        for (int trial = 0; trial < samples && spot_ok; ++trial) {
            std::uniform_int_distribution<int> deg(0, 8);
            std::vector<int> parts;
            int remaining = deg(rng), cap = std::max(remaining, 1);
            while (remaining > 0) {
                std::uniform_int_distribution<int> pick(1, std::min(cap, remaining));
                int v = pick(rng);
                parts.push_back(v);
                cap = v;
                remaining -= v;
            }
            pb::Partition lam = pb::Partition::of(std::move(parts));
            pb::Partition mini = pb::orbit_min(lam, p, d);
            int b = lam.degree();
            spot_ok = pb::gamma_delta(lam, p, d, b) == pb::gamma_delta(mini, p, d, b);
        }
    }
    report["spot_checks"] = pb::Json{{"seed", seed}, {"samples", samples}, {"passed", spot_ok}};
    emit(report);
    return (outcome.match && spot_ok) ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"block decompositions of partition algebras"};
    app.require_subcommand(1);

    CommonOpts opt;
    std::optional<int> abacus_delta, abacus_b;
    bool char0 = false, limiting = false;
    std::string delta_ext;
    int seed = 2024;
    int oracle_max_n = oracle_bound_from_env();

    auto* core = app.add_subcommand("core", "p-core of a partition with abacus display");
    core->add_option("--lambda", opt.lambda_text, "partition, e.g. 5,4")->required();
    core->add_option("--p", opt.p, "prime")->required();
    core->add_flag("--json", opt.as_json, "emit JSON");

    auto* abacus = app.add_subcommand("abacus", "James abacus / delta-marked abacus");
    abacus->add_option("--lambda", opt.lambda_text)->required();
    abacus->add_option("--p", opt.p)->required();
    abacus->add_option("--delta", abacus_delta, "marks the abacus when given");
    abacus->add_option("--b", abacus_b, "bead count (defaults to |lambda|)");
    abacus->add_flag("--json", opt.as_json);

    auto* orbit = app.add_subcommand("orbit", "marked-abacus orbit and its minimal element");
    orbit->add_option("--lambda", opt.lambda_text)->required();
    orbit->add_option("--n", opt.n)->required();
    orbit->add_option("--p", opt.p)->required();
    orbit->add_option("--delta", opt.delta)->required();
    orbit->add_flag("--json", opt.as_json);

    auto* blocks = app.add_subcommand("blocks", "block partition of the labels up to n");
    blocks->add_option("--n", opt.n)->required();
    blocks->add_option("--p", opt.p);
    blocks->add_option("--delta", opt.delta)->required();
    blocks->add_flag("--char0", char0, "characteristic zero (delta an integer)");
    blocks->add_flag("--limiting", limiting, "limiting blocks (stable range)");
    blocks->add_flag("--json", opt.as_json);

    auto* tables = app.add_subcommand("tables", "block tables over a delta range");
    tables->add_option("--n", opt.n)->required();
    auto* tables_p = tables->add_option("--p", opt.p, "tabulate over F_p instead of char 0");
    tables->add_flag("--json", opt.as_json);

    auto* structure = app.add_subcommand("structure", "diagram-basis structure constants as JSON");
    structure->add_option("--n", opt.n)->required()->check(CLI::Range(0, 3));

    auto* verify = app.add_subcommand("verify", "diagram-algebra oracle vs combinatorial criterion");
    verify->add_option("--n", opt.n)->required();
    verify->add_option("--p", opt.p);
    verify->add_option("--delta", opt.delta);
    verify->add_flag("--char0", char0);
    verify->add_option("--delta-ext", delta_ext, "a,b for delta = a + b x in F_{p^2}");
    verify->add_option("--seed", seed, "seed for randomized spot checks");
    verify->add_option("--oracle-max-n", oracle_max_n, "override the oracle size bound");

    try {
        app.parse(argc, argv);
        if (core->parsed()) return cmd_core(opt);
        if (abacus->parsed()) return cmd_abacus(opt, abacus_delta, abacus_b);
        if (orbit->parsed()) return cmd_orbit(opt);
        if (blocks->parsed()) return cmd_blocks(opt, char0, limiting);
        if (structure->parsed()) {
            emit(pb::structure_constants_json(opt.n));
            return 0;
        }
        if (tables->parsed()) return cmd_tables(opt, tables_p->count() > 0);
        if (verify->parsed()) return cmd_verify(opt, char0, delta_ext, seed, oracle_max_n);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::logic_error& e) {
        std::cerr << "internal consistency failure: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
