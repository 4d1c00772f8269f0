#include "bnsl/commands.hpp"

#include <CLI11.hpp>

#include <charconv>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>

#include "bnsl/bif.hpp"
#include "bnsl/cpdag.hpp"
#include "bnsl/csv.hpp"
#include "bnsl/errors.hpp"
#include "bnsl/search.hpp"

namespace bnsl {

namespace {

namespace fs = std::filesystem;

std::string shortest(double v) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, ptr);
}

std::string fixed(double v, int significant) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*g", significant, v);
    return buf;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw InputError("cannot write '" + path + "'");
    out << content;
    if (!out) throw InputError("failed writing '" + path + "'");
}

void emit(const std::string& path, const std::string& content, std::ostream& out) {
    if (path.empty())
        out << content;
    else
        write_file(path, content);
}

bool is_bif_path(const std::string& path) {
    std::string ext = fs::path(path).extension().string();
    for (char& c : ext) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    return ext == ".bif";
}

Structure load_structure(const std::string& path) {
    const std::string text = read_file(path);
    if (is_bif_path(path)) {
        const Bn bn = parse_bif(text);
        std::vector<std::string> names;
        for (const auto& v : bn.variables()) names.push_back(v.name());
        return {names, bn.dag()};
    }
    return parse_structure(text);
}

Dataset load_dataset(const std::string& path, const std::string& schema_path,
                     const std::optional<std::vector<Variable>>& fallback_schema, std::ostream& err) {
    std::optional<std::vector<Variable>> schema = fallback_schema;
    if (!schema_path.empty()) schema = parse_schema(read_file(schema_path));
    CsvDataset loaded = read_csv_dataset(read_file(path), schema);
    for (const auto& w : loaded.warnings) err << "warning: " << w << "\n";
    return std::move(loaded.data);
}

/// Re-expresses `s` over the node order of `names`.
Dag align(const Structure& s, const std::vector<std::string>& names, const std::string& what) {
    if (s.names.size() != names.size())
        throw InputError(what + " has " + std::to_string(s.names.size()) + " nodes, expected " +
                         std::to_string(names.size()));
    std::map<std::string, NodeId> index;
    for (NodeId i = 0; i < names.size(); ++i) index.emplace(names[i], i);
    std::vector<NodeId> map(s.names.size());
    for (NodeId i = 0; i < s.names.size(); ++i) {
        auto it = index.find(s.names[i]);
        if (it == index.end()) throw InputError(what + " mentions unknown variable '" + s.names[i] + "'");
        map[i] = it->second;
    }
    std::vector<Arc> arcs;
    for (const Arc& a : s.dag.arcs()) arcs.push_back({map[a.from], map[a.to]});
    return Dag(names.size(), arcs);
}

std::vector<std::string> names_of(const std::vector<Variable>& variables) {
    std::vector<std::string> out;
    for (const auto& v : variables) out.push_back(v.name());
    return out;
}

std::optional<std::vector<Variable>> bif_schema(const std::string& structure_path) {
    if (!is_bif_path(structure_path)) return std::nullopt;
    return parse_bif(read_file(structure_path)).variables();
}

std::vector<double> parse_double_list(std::string_view text, const std::string& what) {
    std::vector<double> out;
    for (const auto& field : split_fields(text)) {
        if (field.empty()) continue;
        double v = 0.0;
        auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), v);
        if (ec != std::errc() || ptr != field.data() + field.size())
            throw InputError("bad number '" + field + "' in " + what);
        out.push_back(v);
    }
    return out;
}

template <typename T>
T parse_integer(const std::string& text, const std::string& key) {
    T v{};
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (ec != std::errc() || ptr != text.data() + text.size())
        throw InputError("'" + key + "' expects a non-negative integer, got '" + text + "'");
    return v;
}

std::string parents_label(const Dag& dag, NodeId node, const std::vector<std::string>& names) {
    std::string out;
    for (NodeId p : dag.parents(node)) out += (out.empty() ? "" : ";") + names[p];
    return out;
}

// ---------------------------------------------------------------------------

struct ScoreOptions {
    std::string data, schema, structure, score = "bdeu:1", prior = "u", out;
};

int cmd_score(const ScoreOptions& o, std::ostream& out, std::ostream& err) {
    const ScoreKind kind = parse_score_kind(o.score);
    const PriorKind prior = parse_prior_kind(o.prior);
    const Dataset data = load_dataset(o.data, o.schema, o.schema.empty() ? bif_schema(o.structure) : std::nullopt, err);
    const auto names = names_of(data.variables());
    const Dag dag = align(load_structure(o.structure), names, "structure");

    const auto locals = node_scores(dag, data, kind);
    double total = 0.0;
    for (double s : locals) total += s;
    const double lp = log_prior(prior, dag);

    out << "score " << to_string(kind) << ", prior " << to_string(prior) << ", " << data.row_count() << " rows\n";
    for (NodeId i = 0; i < names.size(); ++i)
        out << "  " << names[i] << " | " << parents_label(dag, i, names) << "  " << fixed(locals[i], 12) << "\n";
    out << "total log score  " << fixed(total, 15) << "\n";
    out << "score            " << fixed(std::exp(total), 4) << "\n";
    out << "log prior        " << fixed(lp, 15) << "\n";
    out << "log posterior    " << fixed(total + lp, 15) << "\n";

    if (!o.out.empty()) {
        std::string csv = "# bnsl score v1\nnode,parents,log_score\n";
        for (NodeId i = 0; i < names.size(); ++i)
            csv += names[i] + "," + parents_label(dag, i, names) + "," + shortest(locals[i]) + "\n";
        csv += "total,," + shortest(total) + "\n";
        csv += "log_prior,," + shortest(lp) + "\n";
        csv += "log_posterior,," + shortest(total + lp) + "\n";
        write_file(o.out, csv);
    }
    return kExitOk;
}

// ---------------------------------------------------------------------------

struct LearnOptions {
    std::string data, schema, score = "bdeu:1", prior = "u", out, trace, bif, start;
    std::optional<std::size_t> max_parents;
    std::size_t max_iterations = 10000;
    double fit_alpha = 1.0;
};

std::string write_trace(const SearchTrace& trace, const std::vector<std::string>& names) {
    std::string csv = "# bnsl trace v1\niteration,move,from,to,delta,log_posterior\n";
    for (const auto& step : trace)
        csv += std::to_string(step.iteration) + "," + to_string(step.move.kind) + "," + names[step.move.from] + "," +
               names[step.move.to] + "," + shortest(step.delta) + "," + shortest(step.log_posterior) + "\n";
    return csv;
}

int cmd_learn(const LearnOptions& o, std::ostream& out, std::ostream& err) {
    const ScoreKind kind = parse_score_kind(o.score);
    const PriorKind prior = parse_prior_kind(o.prior);
    const Dataset data = load_dataset(o.data, o.schema, std::nullopt, err);
    const auto names = names_of(data.variables());

    LearnConfig config;
    config.max_parents = o.max_parents;
    config.max_iterations = o.max_iterations;
    if (!o.start.empty()) config.start = align(load_structure(o.start), names, "start structure");
    const LearnResult result = hill_climb(data, kind, prior, config);
    if (result.iteration_limit_reached) err << "warning: iteration limit reached before a local optimum\n";

    emit(o.out, write_structure(result.dag, names), out);
    if (!o.out.empty())
        out << "learned " << result.dag.arc_count() << " arcs in " << result.trace.size()
            << " moves, log posterior " << fixed(result.log_posterior, 15) << "\n";
    if (!o.trace.empty()) write_file(o.trace, write_trace(result.trace, names));
    if (!o.bif.empty()) {
        const Bn fitted = fit(result.dag, data, o.fit_alpha);
        write_file(o.bif, emit_bif(Bn(fitted.dag(), fitted.variables(), fitted.cpts(), "learned")));
    }
    return kExitOk;
}

// ---------------------------------------------------------------------------

struct SimulateOptions {
    std::string config_file, reference, name, ratios, out;
    std::vector<std::string> strategies;
    std::optional<std::size_t> replicates, test_size, threads, max_parents;
    std::optional<std::uint64_t> seed;
    std::optional<double> fit_alpha;
    bool no_timing = false;
};

int cmd_simulate(const SimulateOptions& o, std::ostream& out, std::ostream&) {
    SimulationFile file;
    if (!o.config_file.empty()) {
        file = parse_simulation_file(read_file(o.config_file));
        if (!file.reference.empty() && fs::path(file.reference).is_relative())
            file.reference = (fs::path(o.config_file).parent_path() / file.reference).string();
    }
    SimulationConfig& c = file.config;
    if (!o.reference.empty()) file.reference = o.reference;
    if (file.reference.empty()) throw InputError("simulate needs a reference network (--reference or config)");
    if (!o.ratios.empty()) c.ratios = parse_double_list(o.ratios, "--ratios");
    if (!o.strategies.empty()) {
        c.strategies.clear();
        for (const auto& s : o.strategies) c.strategies.push_back(parse_strategy(s));
    }
    if (o.replicates) c.replicates = *o.replicates;
    if (o.test_size) c.test_set_size = *o.test_size;
    if (o.threads) c.threads = *o.threads;
    if (o.max_parents) c.max_parents = *o.max_parents;
    if (o.seed) c.seed = *o.seed;
    if (o.fit_alpha) c.fit_alpha = *o.fit_alpha;
    if (o.no_timing) c.record_timing = false;

    const Bn reference = parse_bif(read_file(file.reference));
    if (!o.name.empty())
        c.network_name = o.name;
    else if (o.config_file.empty() || c.network_name == "network")
        c.network_name = reference.name();
    try {
        validate(c);
    } catch (const std::invalid_argument& e) {
        throw InputError(e.what());
    }
    emit(o.out, write_results_csv(run_simulation(reference, c)), out);
    return kExitOk;
}

// ---------------------------------------------------------------------------

struct BfcurveOptions {
    std::string data, schema, plus, minus, alphas, out;
};

int cmd_bfcurve(const BfcurveOptions& o, std::ostream& out, std::ostream& err) {
    const Dataset data = load_dataset(o.data, o.schema, std::nullopt, err);
    const auto names = names_of(data.variables());
    const Dag plus = align(load_structure(o.plus), names, "G+ structure");
    const Dag minus = align(load_structure(o.minus), names, "G- structure");
    std::vector<NodeId> differing;
    for (NodeId i = 0; i < names.size(); ++i)
        if (plus.parents(i) != minus.parents(i)) differing.push_back(i);
    if (differing.empty()) throw InputError("G+ and G- have identical parent sets");

    const std::vector<double> grid = o.alphas.empty() ? default_alpha_grid() : parse_double_list(o.alphas, "--alphas");
    if (grid.empty()) throw InputError("empty alpha grid");
    for (double a : grid)
        if (!(a > 0.0) || !std::isfinite(a)) throw InputError("alpha values must be positive");

    std::vector<FamilyCounts> plus_counts, minus_counts;
    for (NodeId i : differing) {
        plus_counts.push_back(count_family(data, i, plus.parents(i)));
        minus_counts.push_back(count_family(data, i, minus.parents(i)));
    }

    std::string csv = "# bnsl bfcurve v1\nalpha,log_bds_over_bdeu,bds_over_bdeu,log_bf_bdeu,bf_bdeu,log_bf_bds,bf_bds\n";
    for (double a : grid) {
        double ratio = 0.0, bf_bdeu = 0.0, bf_bds = 0.0;
        for (std::size_t k = 0; k < differing.size(); ++k) {
            const double pe = local_bdeu(plus_counts[k], a);
            const double ps = local_bds(plus_counts[k], a);
            ratio += ps - pe;
            bf_bdeu += pe - local_bdeu(minus_counts[k], a);
            bf_bds += ps - local_bds(minus_counts[k], a);
        }
        csv += shortest(a) + "," + shortest(ratio) + "," + shortest(std::exp(ratio)) + "," + shortest(bf_bdeu) + "," +
               shortest(std::exp(bf_bdeu)) + "," + shortest(bf_bds) + "," + shortest(std::exp(bf_bds)) + "\n";
    }
    emit(o.out, csv, out);
    return kExitOk;
}

// ---------------------------------------------------------------------------

int cmd_shd(const std::string& a_path, const std::string& b_path, bool dag_level, std::ostream& out) {
    const Structure a = load_structure(a_path);
    const Dag b = align(load_structure(b_path), a.names, "second structure");
    out << (dag_level ? shd_dag(a.dag, b) : shd(to_cpdag(a.dag), to_cpdag(b))) << "\n";
    return kExitOk;
}

int cmd_sample(const std::string& bif, std::size_t n, std::uint64_t seed, const std::string& out_path,
               const std::string& schema_out, std::ostream& out) {
    const Bn bn = parse_bif(read_file(bif));
    emit(out_path, write_csv_dataset(sample(bn, n, seed)), out);
    if (!schema_out.empty()) write_file(schema_out, write_schema(bn.variables()));
    return kExitOk;
}

int cmd_predict(const std::string& bif, const std::string& data_path, bool mean, std::ostream& out,
                std::ostream& err) {
    const Bn bn = parse_bif(read_file(bif));
    const Dataset raw = load_dataset(data_path, "", bn.variables(), err);
    // Reorder columns into network order.
    std::vector<std::vector<Level>> columns;
    for (const auto& v : bn.variables()) {
        const auto idx = raw.index_of(v.name());
        if (!idx) throw InputError("test data has no column '" + v.name() + "'");
        const auto col = raw.column(*idx);
        columns.emplace_back(col.begin(), col.end());
    }
    const Dataset test = Dataset::from_columns(bn.variables(), std::move(columns));
    const double total = predictive_loglik(bn, test);
    out << fixed(mean ? (test.row_count() ? total / static_cast<double>(test.row_count()) : 0.0) : total, 10) << "\n";
    return kExitOk;
}

int cmd_synth(const SyntheticSpec& spec, const std::string& out_path, std::ostream& out) {
    Bn bn = [&] {
        try {
            return make_synthetic_reference(spec);
        } catch (const std::invalid_argument& e) {
            throw InputError(e.what());
        }
    }();
    emit(out_path, emit_bif(bn), out);
    return kExitOk;
}

std::string trim_copy(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return std::string(s.substr(first, last - first + 1));
}

}  // namespace

std::vector<double> default_alpha_grid() {
    std::vector<double> grid;
    for (int k = -12; k <= 16; ++k) grid.push_back(std::pow(10.0, k / 2.0));
    return grid;
}

SimulationFile parse_simulation_file(std::string_view text) {
    SimulationFile file;
    SimulationConfig& c = file.config;
    std::istringstream in{std::string(text)};
    std::string raw;
    std::size_t line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        if (const auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
        const std::string line = trim_copy(raw);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw InputError("config line " + std::to_string(line_no) + ": expected 'key = value'");
        const std::string key = trim_copy(std::string_view(line).substr(0, eq));
        const std::string value = trim_copy(std::string_view(line).substr(eq + 1));
        const std::string where = "config line " + std::to_string(line_no) + ": ";
        if (value.empty()) throw InputError(where + "empty value for '" + key + "'");
        if (key == "reference") {
            file.reference = value;
        } else if (key == "name") {
            c.network_name = value;
        } else if (key == "ratios") {
            c.ratios = parse_double_list(value, "ratios");
        } else if (key == "replicates") {
            c.replicates = parse_integer<std::size_t>(value, key);
        } else if (key == "strategy") {
            c.strategies.push_back(parse_strategy(value));
        } else if (key == "test_size") {
            c.test_set_size = parse_integer<std::size_t>(value, key);
        } else if (key == "seed") {
            c.seed = parse_integer<std::uint64_t>(value, key);
        } else if (key == "threads") {
            c.threads = parse_integer<std::size_t>(value, key);
        } else if (key == "max_parents") {
            c.max_parents = parse_integer<std::size_t>(value, key);
        } else if (key == "fit_alpha") {
            const auto v = parse_double_list(value, key);
            if (v.size() != 1) throw InputError(where + "fit_alpha expects one number");
            c.fit_alpha = v.front();
        } else if (key == "timing") {
            if (value == "true")
                c.record_timing = true;
            else if (value == "false")
                c.record_timing = false;
            else
                throw InputError(where + "timing expects true or false");
        } else {
            throw InputError(where + "unknown key '" + key + "'");
        }
    }
    return file;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Discrete Bayesian network structure learning", "bnsl"};
    app.require_subcommand(1);

    ScoreOptions score_o;
    auto* score = app.add_subcommand("score", "Per-node log scores, log prior and total for a structure");
    score->add_option("--data", score_o.data, "CSV data file")->required();
    score->add_option("--structure", score_o.structure, "Structure file or BIF network")->required();
    score->add_option("--schema", score_o.schema, "Level schema for the CSV");
    score->add_option("--score", score_o.score, "bdeu:A, bds:A, k2, jeffreys, bic, loglik")->capture_default_str();
    score->add_option("--prior", score_o.prior, "u, mu:BETA, mu-sparse:C")->capture_default_str();
    score->add_option("--out", score_o.out, "Also write the breakdown as CSV");

    LearnOptions learn_o;
    std::size_t learn_max_parents = 0;
    auto* learn = app.add_subcommand("learn", "Hill-climbing structure search");
    learn->add_option("--data", learn_o.data, "CSV data file")->required();
    learn->add_option("--schema", learn_o.schema, "Level schema for the CSV");
    learn->add_option("--score", learn_o.score, "Score")->capture_default_str();
    learn->add_option("--prior", learn_o.prior, "Graph prior")->capture_default_str();
    auto* learn_mp = learn->add_option("--max-parents", learn_max_parents, "Parent-set size limit");
    learn->add_option("--max-iterations", learn_o.max_iterations, "Move limit")->capture_default_str();
    learn->add_option("--start", learn_o.start, "Initial structure (default empty)");
    learn->add_option("--out", learn_o.out, "Structure output file (default stdout)");
    learn->add_option("--trace", learn_o.trace, "Search trace CSV");
    learn->add_option("--bif", learn_o.bif, "Fitted network output (BIF)");
    learn->add_option("--fit-alpha", learn_o.fit_alpha, "Imaginary sample size for fitting")->capture_default_str();

    SimulateOptions sim_o;
    std::size_t sim_replicates = 0, sim_test = 0, sim_threads = 0, sim_mp = 0;
    std::uint64_t sim_seed = 0;
    double sim_fit_alpha = 0.0;
    auto* simulate = app.add_subcommand("simulate", "Sample, learn and evaluate against a reference network");
    simulate->add_option("--config", sim_o.config_file, "key = value configuration file");
    simulate->add_option("--reference", sim_o.reference, "Reference network (BIF)");
    simulate->add_option("--name", sim_o.name, "Network label in the results");
    simulate->add_option("--ratios", sim_o.ratios, "Comma-separated n/p ratios");
    simulate->add_option("--strategy", sim_o.strategies, "SCORE/PRIOR, repeatable");
    auto* sim_rep_opt = simulate->add_option("--replicates", sim_replicates, "Replicates per ratio");
    auto* sim_test_opt = simulate->add_option("--test-size", sim_test, "Test sample size");
    auto* sim_threads_opt = simulate->add_option("--threads", sim_threads, "Worker threads");
    auto* sim_mp_opt = simulate->add_option("--max-parents", sim_mp, "Parent-set size limit");
    auto* sim_seed_opt = simulate->add_option("--seed", sim_seed, "Master seed");
    auto* sim_fit_opt = simulate->add_option("--fit-alpha", sim_fit_alpha, "Imaginary sample size for fitting");
    simulate->add_flag("--no-timing", sim_o.no_timing, "Write 0 in the seconds column");
    simulate->add_option("--out", sim_o.out, "Results CSV (default stdout)");

    BfcurveOptions bf_o;
    auto* bfcurve = app.add_subcommand("bfcurve", "BDeu and BDs Bayes factors of G+ vs G- over an alpha grid");
    bfcurve->add_option("--data", bf_o.data, "CSV data file")->required();
    bfcurve->add_option("--schema", bf_o.schema, "Level schema for the CSV");
    bfcurve->add_option("--plus", bf_o.plus, "Structure G+")->required();
    bfcurve->add_option("--minus", bf_o.minus, "Structure G-")->required();
    bfcurve->add_option("--alphas", bf_o.alphas, "Comma-separated alpha values");
    bfcurve->add_option("--out", bf_o.out, "Output CSV (default stdout)");

    std::string shd_a, shd_b;
    bool shd_dag_level = false;
    auto* shd_cmd = app.add_subcommand("shd", "Structural Hamming distance between two structures");
    shd_cmd->add_option("a", shd_a, "First structure")->required();
    shd_cmd->add_option("b", shd_b, "Second structure")->required();
    shd_cmd->add_flag("--dag-level", shd_dag_level, "Compare DAGs instead of equivalence classes");

    std::string sample_bif, sample_out, sample_schema;
    std::size_t sample_n = 0;
    std::uint64_t sample_seed = 1;
    auto* sample_cmd = app.add_subcommand("sample", "Draw rows from a network");
    sample_cmd->add_option("--bif", sample_bif, "Network (BIF)")->required();
    sample_cmd->add_option("-n,--rows", sample_n, "Number of rows")->required();
    sample_cmd->add_option("--seed", sample_seed, "Seed")->capture_default_str();
    sample_cmd->add_option("--out", sample_out, "Output CSV (default stdout)");
    sample_cmd->add_option("--schema-out", sample_schema, "Write the level schema here");

    std::string predict_bif, predict_data;
    bool predict_mean = false;
    auto* predict = app.add_subcommand("predict", "Log-likelihood of a data set under a network");
    predict->add_option("--bif", predict_bif, "Network (BIF)")->required();
    predict->add_option("--data", predict_data, "CSV data file")->required();
    predict->add_flag("--mean", predict_mean, "Report the per-row average");

    SyntheticSpec synth_spec;
    std::string synth_out;
    auto* synth = app.add_subcommand("synth", "Generate a random reference network");
    synth->add_option("--nodes", synth_spec.nodes)->capture_default_str();
    synth->add_option("--arcs", synth_spec.arcs)->capture_default_str();
    synth->add_option("--min-levels", synth_spec.min_levels)->capture_default_str();
    synth->add_option("--max-levels", synth_spec.max_levels)->capture_default_str();
    synth->add_option("--max-parents", synth_spec.max_parents)->capture_default_str();
    synth->add_option("--seed", synth_spec.seed)->capture_default_str();
    synth->add_option("--out", synth_out, "Output BIF (default stdout)");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitInput;
    }

    try {
        if (*score) return cmd_score(score_o, out, err);
        if (*learn) {
            if (learn_mp->count()) learn_o.max_parents = learn_max_parents;
            return cmd_learn(learn_o, out, err);
        }
        if (*simulate) {
            if (sim_rep_opt->count()) sim_o.replicates = sim_replicates;
            if (sim_test_opt->count()) sim_o.test_size = sim_test;
            if (sim_threads_opt->count()) sim_o.threads = sim_threads;
            if (sim_mp_opt->count()) sim_o.max_parents = sim_mp;
            if (sim_seed_opt->count()) sim_o.seed = sim_seed;
            if (sim_fit_opt->count()) sim_o.fit_alpha = sim_fit_alpha;
            return cmd_simulate(sim_o, out, err);
        }
        if (*bfcurve) return cmd_bfcurve(bf_o, out, err);
        if (*shd_cmd) return cmd_shd(shd_a, shd_b, shd_dag_level, out);
        if (*sample_cmd) return cmd_sample(sample_bif, sample_n, sample_seed, sample_out, sample_schema, out);
        if (*predict) return cmd_predict(predict_bif, predict_data, predict_mean, out, err);
        if (*synth) return cmd_synth(synth_spec, synth_out, out);
    } catch (const InputError& e) {
        err << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitComputation;
    }
    return kExitInput;
}

}  // namespace bnsl
