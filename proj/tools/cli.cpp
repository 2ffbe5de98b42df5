#include "cli.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <mutex>
#include <set>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "ansig/ansig.hpp"

namespace ansig::cli {

namespace fs = std::filesystem;

namespace {

constexpr const char* kExitTable = R"(Exit codes:
  0   resolved (actual, verified, vector found)
  1   certificate failed verification
  2   signature is not potential
  3   signature is not actual (nonexistence proved)
  4   unresolved within budget
  64  usage or signature syntax error
  65  malformed certificate file
  66  infeasible search request

AN_SIG_SEED overrides the default seed.)";

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::uint64_t default_seed()
{
    if (const char* env = std::getenv("AN_SIG_SEED")) {
        try {
            std::size_t used = 0;
            const auto v = std::stoull(env, &used);
            if (used == std::string(env).size())
                return v;
        } catch (const std::exception&) {
        }
        throw UsageError(std::string("AN_SIG_SEED is not an unsigned integer: '") + env + "'");
    }
    return 1;
}

Signature parse_or_usage(const std::string& text)
{
    try {
        return parse_signature(text);
    } catch (const ParseError& e) {
        std::ostringstream os;
        os << "invalid signature \"" << text << "\": " << e.what() << "\n  " << text << "\n  "
           << std::string(std::min(e.position(), text.size()), ' ') << '^';
        throw UsageError(os.str());
    }
}

void print_certificate_text(std::ostream& out, const Certificate& c)
{
    out << "method " << to_string(c.method) << ", route " << to_string(c.report.route) << ", genus " << c.sigma.str();
    if (c.seed)
        out << ", seed " << *c.seed;
    out << '\n';
    for (std::size_t i = 0; i < c.vector.a.size(); ++i) {
        out << "  a" << i + 1 << " = " << c.vector.a[i].to_string() << '\n';
        out << "  b" << i + 1 << " = " << c.vector.b[i].to_string() << '\n';
    }
    for (std::size_t j = 0; j < c.vector.c.size(); ++j)
        out << "  c" << j + 1 << " = " << c.vector.c[j].to_string() << '\n';
}

int exit_for(Outcome o)
{
    switch (o) {
    case Outcome::actual:
        return ok;
    case Outcome::not_potential:
        return not_potential;
    case Outcome::non_actual:
        return non_actual;
    case Outcome::unresolved:
        return unresolved;
    }
    return unresolved;
}

void write_atomically(const fs::path& path, const std::string& text)
{
    const fs::path tmp = path.string() + ".tmp";
    {
        std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
        if (!f)
            throw std::runtime_error("cannot write " + tmp.string());
        f << text;
    }
    fs::rename(tmp, path);
}

std::string cell_file_name(int n, const Signature& s)
{
    std::string r = render(s);
    std::replace(r.begin(), r.end(), ';', '_');
    std::replace(r.begin(), r.end(), ',', '-');
    return "n" + std::to_string(n) + "_" + r + ".json";
}

// -- classify ---------------------------------------------------------------

struct ClassifyArgs {
    int n = 0;
    std::string signature;
    std::optional<std::uint64_t> seed;
    std::string format = "text";
    bool no_table = false;
    std::uint64_t budget = 0;
    unsigned workers = 1;
};

int cmd_classify(const ClassifyArgs& a, std::ostream& out)
{
    const Signature s = parse_or_usage(a.signature);
    ClassifyOptions opts;
    opts.seed = a.seed ? *a.seed : default_seed();
    opts.use_table = !a.no_table;
    opts.workers = a.workers;
    if (a.budget)
        opts.random_budget = a.budget;
    const ClassifyResult res = classify(a.n, s, opts);
    if (a.format == "json") {
        out << to_json(a.n, s, res, false);
    } else {
        out << "A_" << a.n << ' ' << pretty(s) << ": " << to_string(res.outcome) << " (" << res.reason << ")\n";
        if (res.certificate)
            print_certificate_text(out, *res.certificate);
        if (res.proof)
            out << "  searched " << res.proof->space_size.str() << " states, " << res.proof->hits << " hits\n";
    }
    return exit_for(res.outcome);
}

// -- verify -----------------------------------------------------------------

int cmd_verify(const std::string& file, const std::string& format, std::ostream& out, std::ostream& err)
{
    std::ifstream in(file, std::ios::binary);
    if (!in) {
        err << "cannot open " << file << '\n';
        return bad_input;
    }
    std::stringstream buf;
    buf << in.rdbuf();
    CertificateFile cf;
    try {
        cf = parse_certificate(buf.str());
    } catch (const Error& e) {
        err << file << ": " << e.what() << '\n';
        return bad_input;
    }

    VerificationReport rep;
    try {
        rep = verify_vector(cf.degree, cf.signature, cf.vector);
    } catch (const PreconditionError& e) {
        err << file << ": " << e.what() << '\n';
        return bad_input;
    }
    std::vector<std::string> diagnostics = rep.diagnostics;
    bool pass = rep.all_pass();
    if (!cf.sigma) {
        diagnostics.push_back("sigma: field missing");
        pass = false;
    } else if (*cf.sigma != rep.sigma.str()) {
        diagnostics.push_back("sigma: file says " + *cf.sigma + ", recomputed " + rep.sigma.str());
        pass = false;
    }

    if (format == "json") {
        out << "{\"pass\": " << (pass ? "true" : "false") << ", \"shape_ok\": " << rep.shape_ok
            << ", \"orders_match\": " << rep.orders_match << ", \"product_is_identity\": " << rep.product_is_identity
            << ", \"generates\": " << rep.generates << ", \"route\": \"" << to_string(rep.route)
            << "\", \"sigma_ok\": " << rep.sigma_ok << "}\n";
    } else {
        auto yes = [](bool b) { return b ? "ok" : "FAIL"; };
        out << "shape               " << yes(rep.shape_ok) << '\n'
            << "orders_match        " << yes(rep.orders_match) << '\n'
            << "product_is_identity " << yes(rep.product_is_identity) << '\n'
            << "generates           " << yes(rep.generates) << " (route " << to_string(rep.route) << ")\n"
            << "sigma               " << yes(rep.sigma_ok && cf.sigma && *cf.sigma == rep.sigma.str()) << ' '
            << rep.sigma.str() << '\n';
    }
    for (const auto& d : diagnostics)
        err << d << '\n';
    out << (pass ? "PASS" : "FAIL") << '\n';
    return pass ? ok : verify_failed;
}

// -- table ------------------------------------------------------------------

struct TableArgs {
    std::string n_range = "5..8";
    int max_periods = 2;
    std::string out_dir = "an-sig-table";
    std::optional<std::uint64_t> seed;
    unsigned workers = 1;
};

std::pair<int, int> parse_range(const std::string& text)
{
    const auto dots = text.find("..");
    try {
        if (dots == std::string::npos) {
            const int v = std::stoi(text);
            return {v, v};
        }
        return {std::stoi(text.substr(0, dots)), std::stoi(text.substr(dots + 2))};
    } catch (const std::exception&) {
        throw UsageError("invalid range '" + text + "', expected A..B");
    }
}

struct Cell {
    int n;
    Signature s;
};

std::vector<Cell> coverage_cells(int n, int max_periods)
{
    std::vector<Cell> cells;
    const auto& os = order_set(n).orders;
    for (long long k : os)
        cells.push_back({n, Signature{1, {k}}});
    if (max_periods >= 2) {
        for (long long k : os)
            if (k % 2 == 0)
                cells.push_back({n, Signature{1, {k, k}}});
        for (auto i = os.begin(); i != os.end(); ++i)
            for (auto j = std::next(i); j != os.end(); ++j)
                cells.push_back({n, Signature{1, {*i, *j}}});
    }
    return cells;
}

struct IndexRow {
    std::string outcome;
    std::string method;
    std::string file;
};

int cmd_table(const TableArgs& a, std::ostream& out, std::ostream& err)
{
    const auto [lo, hi] = parse_range(a.n_range);
    if (lo < 5 || hi > 16 || lo > hi)
        throw UsageError("table supports degrees within 5..16");
    const std::uint64_t seed = a.seed ? *a.seed : default_seed();
    const fs::path dir(a.out_dir);
    fs::create_directories(dir);
    const fs::path index_path = dir / "index.tsv";

    // key: "n\tsignature"
    std::map<std::pair<int, std::string>, IndexRow> index;
    if (std::ifstream in(index_path); in) {
        std::string line;
        std::getline(in, line);  // header
        while (std::getline(in, line)) {
            std::istringstream ls(line);
            std::string n, sig;
            IndexRow row;
            if (std::getline(ls, n, '\t') && std::getline(ls, sig, '\t') && std::getline(ls, row.outcome, '\t') &&
                std::getline(ls, row.method, '\t') && std::getline(ls, row.file) && fs::exists(dir / row.file))
                index[{std::stoi(n), sig}] = row;
        }
    }

    std::vector<Cell> todo;
    for (int n = lo; n <= hi; ++n)
        for (auto& c : coverage_cells(n, a.max_periods))
            if (!index.count({c.n, render(c.s)}))
                todo.push_back(std::move(c));

    std::mutex mu;
    std::atomic<std::size_t> next{0};
    std::atomic<bool> failed{false};
    std::string failure;
    auto worker = [&] {
        for (std::size_t i; (i = next++) < todo.size();) {
            if (failed)
                return;
            const Cell& c = todo[i];
            try {
                ClassifyOptions opts;
                opts.seed = seed;
                const ClassifyResult res = classify(c.n, c.s, opts);
                const std::string file = cell_file_name(c.n, c.s);
                write_atomically(dir / file, to_json(c.n, c.s, res, false));
                std::lock_guard<std::mutex> lock(mu);
                index[{c.n, render(c.s)}] = {to_string(res.outcome),
                                             res.certificate ? to_string(res.certificate->method) : "-", file};
            } catch (const std::exception& e) {
                std::lock_guard<std::mutex> lock(mu);
                failed = true;
                failure = "A_" + std::to_string(c.n) + " " + pretty(c.s) + ": " + e.what();
            }
        }
    };
    std::vector<std::thread> pool;
    for (unsigned w = 1; w < std::max(1U, a.workers); ++w)
        pool.emplace_back(worker);
    worker();
    for (auto& t : pool)
        t.join();

    std::ostringstream idx;
    idx << "n\tsignature\toutcome\tmethod\tfile\n";
    for (const auto& [key, row] : index)
        idx << key.first << '\t' << key.second << '\t' << row.outcome << '\t' << row.method << '\t' << row.file << '\n';
    write_atomically(index_path, idx.str());

    if (failed) {
        err << "table sweep stopped: " << failure << '\n';
        return unresolved;
    }

    std::map<std::string, int> counts;
    std::vector<std::string> negative;
    bool any_unresolved = false;
    for (const auto& [key, row] : index) {
        if (key.first < lo || key.first > hi)
            continue;
        ++counts[row.outcome];
        if (row.outcome == to_string(Outcome::non_actual))
            negative.push_back("A_" + std::to_string(key.first) + " " + pretty(parse_signature(key.second)));
        any_unresolved = any_unresolved || row.outcome == to_string(Outcome::unresolved);
    }
    out << "degrees " << lo << ".." << hi << ", " << todo.size() << " cells computed, index " << index_path.string()
        << '\n';
    for (const auto& [outcome, count] : counts)
        out << "  " << outcome << ": " << count << '\n';
    out << "non-actual cells:";
    if (negative.empty())
        out << " none";
    for (const auto& c : negative)
        out << "\n  " << c;
    out << '\n';
    return any_unresolved ? unresolved : ok;
}

// -- oracle -----------------------------------------------------------------

struct OracleArgs {
    int n = 0;
    std::string signature;
    bool exhaustive = false;
    std::optional<std::uint64_t> seed;
    std::uint64_t budget = 0;
    unsigned workers = 1;
    std::string shard = "0/1";
    bool no_timing = false;
};

int cmd_oracle(const OracleArgs& a, std::ostream& out, std::ostream& err)
{
    if (a.exhaustive && a.n > kMaxExhaustiveDegree) {
        err << "exhaustive search supports n <= " << kMaxExhaustiveDegree << '\n';
        return infeasible;
    }
    if (!a.exhaustive && a.n > 16) {
        err << "randomized search supports n <= 16\n";
        return infeasible;
    }
    if (a.signature.empty())
        throw UsageError("--signature is required");
    const Signature s = parse_or_usage(a.signature);
    if (const auto p = is_potential(a.n, s); !p) {
        err << pretty(s) << " is not potential: " << p.reason << '\n';
        return not_potential;
    }

    SearchBudget budget;
    budget.mode = a.exhaustive ? SearchMode::exhaustive : SearchMode::randomized;
    budget.workers = a.workers;
    budget.seed = a.seed ? *a.seed : default_seed();
    if (a.budget)
        budget.max_states = a.budget;
    const auto slash = a.shard.find('/');
    try {
        if (slash == std::string::npos)
            throw std::invalid_argument("shard");
        budget.shard = std::stoull(a.shard.substr(0, slash));
        budget.shards = std::stoull(a.shard.substr(slash + 1));
    } catch (const std::exception&) {
        throw UsageError("invalid --shard '" + a.shard + "', expected i/k");
    }
    if (budget.shards == 0 || budget.shard >= budget.shards)
        throw UsageError("invalid --shard '" + a.shard + "'");

    if (a.exhaustive) {
        try {
            out << to_json(prove_nonexistence(a.n, s, a.workers, budget.max_states), !a.no_timing);
            return non_actual;
        } catch (const NonexistenceRefuted& e) {
            out << to_json(make_certificate(a.n, s, e.vector(), Method::oracle));
            return ok;
        } catch (const InfeasibleSearch& e) {
            err << e.what() << '\n';
            return infeasible;
        }
    }
    SearchResult res;
    try {
        res = search_vector(a.n, s, budget);
    } catch (const InfeasibleSearch& e) {
        err << e.what() << '\n';
        return infeasible;
    }
    if (res.status == SearchStatus::found) {
        out << to_json(make_certificate(a.n, s, *res.vector, Method::oracle, budget.seed));
        return ok;
    }
    err << "no vector in " << res.states << " trials (seed " << budget.seed << ", shard " << budget.shard << '/'
        << budget.shards << ")\n";
    return unresolved;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Generating vectors and signatures for alternating groups", "an-sig"};
    app.footer(kExitTable);
    app.require_subcommand(1);

    ClassifyArgs ca;
    auto* classify_cmd = app.add_subcommand("classify", "Decide whether a signature is actual for A_n");
    classify_cmd->add_option("--n", ca.n, "Degree")->required()->check(CLI::Range(5, kMaxOrderDegree));
    classify_cmd->add_option("--signature", ca.signature, "Signature, e.g. \"1;5,7\" or \"2;-\"")->required();
    classify_cmd->add_option("--seed", ca.seed, "Seed for randomized steps");
    classify_cmd->add_option("--format", ca.format, "Output format")->check(CLI::IsMember({"text", "json"}));
    classify_cmd->add_flag("--no-table", ca.no_table, "Re-derive known exceptions instead of using the table");
    classify_cmd->add_option("--budget", ca.budget, "Randomized trial budget");
    classify_cmd->add_option("--workers", ca.workers, "Worker threads for exhaustive sweeps");

    std::string verify_file;
    std::string verify_format = "text";
    auto* verify_cmd = app.add_subcommand("verify", "Re-check a certificate file from scratch");
    verify_cmd->add_option("file", verify_file, "Certificate JSON")->required();
    verify_cmd->add_option("--format", verify_format, "Output format")->check(CLI::IsMember({"text", "json"}));

    TableArgs ta;
    auto* table_cmd = app.add_subcommand("table", "Sweep the small-degree coverage set");
    table_cmd->add_option("--n-range", ta.n_range, "Degrees, e.g. 5..8");
    table_cmd->add_option("--max-periods", ta.max_periods, "Largest r per cell (1 or 2)")->check(CLI::Range(1, 2));
    table_cmd->add_option("--out", ta.out_dir, "Output directory");
    table_cmd->add_option("--seed", ta.seed, "Seed for randomized steps");
    table_cmd->add_option("--workers", ta.workers, "Cells classified in parallel");

    OracleArgs oa;
    auto* oracle_cmd = app.add_subcommand("oracle", "Run the ground-truth search directly");
    oracle_cmd->add_option("--n", oa.n, "Degree")->required()->check(CLI::Range(5, kMaxOrderDegree));
    oracle_cmd->add_option("--signature", oa.signature, "Signature");
    oracle_cmd->add_flag("--exhaustive", oa.exhaustive, "Exhaustive sweep with a nonexistence proof on failure");
    oracle_cmd->add_option("--seed", oa.seed, "Seed for randomized mode");
    oracle_cmd->add_option("--budget", oa.budget, "State or trial budget");
    oracle_cmd->add_option("--workers", oa.workers, "Worker threads");
    oracle_cmd->add_option("--shard", oa.shard, "Randomized shard i/k");
    oracle_cmd->add_flag("--no-timing", oa.no_timing, "Omit elapsed_ms from proof records");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return ok;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return ok;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return usage;
    }

    try {
        if (classify_cmd->parsed())
            return cmd_classify(ca, out);
        if (verify_cmd->parsed())
            return cmd_verify(verify_file, verify_format, out, err);
        if (table_cmd->parsed())
            return cmd_table(ta, out, err);
        if (oracle_cmd->parsed())
            return cmd_oracle(oa, out, err);
    } catch (const UsageError& e) {
        err << e.what() << '\n';
        return usage;
    } catch (const PreconditionError& e) {
        err << e.what() << '\n';
        return usage;
    }
    return usage;
}

}  // namespace ansig::cli
