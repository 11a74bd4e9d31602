// Copyright 2026 The qcab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qcab/cli.h"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "CLI11.hpp"
#include "qcab/bqca.h"
#include "qcab/json_io.h"
#include "qcab/qtm_compiler.h"

namespace qcab {

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Globals {
    double tolerance_norm = Tolerance{}.eps_norm;
    double tolerance_unitary = Tolerance{}.eps_unitary;
    std::string out_path;
    std::string format;

    Tolerance tolerance() const {
        Tolerance tol;
        tol.eps_norm = tolerance_norm;
        tol.eps_unitary = tolerance_unitary;
        try {
            tol.validate();
        } catch (const std::invalid_argument &e) {
            throw UsageError(e.what());
        }
        return tol;
    }

    /// `allowed` lists the formats the subcommand supports; the first is the
    /// default.
    std::string pick_format(std::initializer_list<const char *> allowed) const {
        if (format.empty()) {
            return *allowed.begin();
        }
        for (const char *f : allowed) {
            if (format == f) {
                return format;
            }
        }
        throw UsageError("format '" + format + "' is not supported by this subcommand");
    }
};

// Converts argument-level engine errors into usage errors.
template <typename F>
auto as_usage(F &&f) -> decltype(f()) {
    try {
        return f();
    } catch (const std::invalid_argument &e) {
        throw UsageError(e.what());
    } catch (const std::out_of_range &e) {
        throw UsageError(e.what());
    }
}

std::vector<std::string> split_list(const std::string &s) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == ',') {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    if (!cur.empty() || !out.empty()) {
        out.push_back(cur);
    }
    return out;
}

Json certificate_json(const WindowCertificate &c) {
    Json j = Json::object();
    j["ok"] = c.ok;
    j["window"] = c.window;
    j["domain_size"] = c.domain_size;
    j["worst_deviation"] = c.worst_deviation;
    j["witness"] = c.witness ? Json::array({c.witness->first, c.witness->second}) : Json(nullptr);
    return j;
}

Json trace_json(const std::vector<Superposition> &trace) {
    Json j = Json::array();
    for (const auto &s : trace) {
        j.push_back(to_json(s));
    }
    return j;
}

// A QCA configuration given either as "i:s,..." with state indices or as
// "i:(a,b,c),..." with PQCA sub-state names.
QcaConfig parse_pqca_config(const std::string &text, const PqcaSpec &spec) {
    std::map<long long, int> cells;
    size_t pos = 0;
    while (pos < text.size()) {
        size_t colon = text.find(':', pos);
        if (colon == std::string::npos) {
            throw UsageError("malformed configuration '" + text + "'");
        }
        long long i = as_usage([&] { return std::stoll(text.substr(pos, colon - pos)); });
        size_t end;
        int state;
        if (colon + 1 < text.size() && text[colon + 1] == '(') {
            size_t close = text.find(')', colon);
            if (close == std::string::npos) {
                throw UsageError("unbalanced parenthesis in '" + text + "'");
            }
            auto names = split_list(text.substr(colon + 2, close - colon - 2));
            state = as_usage([&] { return spec.compose_named(names); });
            end = close + 1;
        } else {
            end = text.find(',', colon);
            if (end == std::string::npos) {
                end = text.size();
            }
            state = as_usage([&] { return std::stoi(text.substr(colon + 1, end - colon - 1)); });
            if (state < 0 || state >= spec.num_states()) {
                throw UsageError("cell state out of range in '" + text + "'");
            }
        }
        cells[i] = state;
        if (end < text.size() && text[end] != ',') {
            throw UsageError("malformed configuration '" + text + "'");
        }
        pos = end + 1;
    }
    return QcaConfig(cells, spec.quiescent());
}

Superposition initial_state(const std::string &init, const std::string &init_file,
                            const std::function<QcaConfig(const std::string &)> &parse_label) {
    if (!init_file.empty()) {
        return superposition_from_json(read_json_file(init_file));
    }
    return basis_state(parse_label(init));
}

std::vector<std::vector<bool>> rows_to_bits(const std::vector<std::string> &rows) {
    std::vector<std::vector<bool>> bits;
    for (const auto &r : rows) {
        std::vector<bool> b;
        for (char c : r) {
            b.push_back(c != '.');
        }
        bits.push_back(std::move(b));
    }
    return bits;
}

std::vector<std::string> lines_of(const std::string &text) {
    std::vector<std::string> out;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        out.push_back(line);
    }
    return out;
}

PeriodicConfig grid_from_rows(const std::vector<std::string> &rows) {
    if (rows.empty() || rows[0].empty()) {
        throw UsageError("grid pattern is empty");
    }
    const size_t w = rows[0].size();
    std::vector<int> cells;
    for (const auto &r : rows) {
        if (r.size() != w) {
            throw UsageError("grid rows must have equal length");
        }
        for (char c : r) {
            if (c == '.' || c == '0') {
                cells.push_back(0);
            } else if (c == '#') {
                cells.push_back(1);
            } else if (c >= '1' && c <= '9') {
                cells.push_back(c - '0');
            } else {
                throw UsageError(std::string("unexpected grid character '") + c + "'");
            }
        }
    }
    return PeriodicConfig({static_cast<long long>(w), static_cast<long long>(rows.size())}, std::move(cells));
}

PeriodicConfig builtin_pattern(const std::string &name) {
    if (name == "blinker") {
        return grid_from_rows({".....", ".....", ".###.", ".....", "....."});
    }
    if (name == "glider") {
        return grid_from_rows({".#....", "..#...", "###...", "......", "......", "......"});
    }
    if (name == "block") {
        return grid_from_rows({"....", ".##.", ".##.", "...."});
    }
    std::ifstream in(name);
    if (!in) {
        throw UsageError("unknown pattern '" + name + "' (expected blinker, glider, block or a file)");
    }
    std::stringstream buf;
    buf << in.rdbuf();
    return grid_from_rows(lines_of(buf.str()));
}

class Cli {
   public:
    Cli(std::ostream &out, std::ostream &err) : out_(out), err_(err) {
    }

    int run(int argc, const char *const *argv);

   private:
    void emit(const std::string &text) {
        if (g_.out_path.empty()) {
            out_ << text;
            return;
        }
        std::ofstream f(g_.out_path, std::ios::binary);
        if (!f) {
            throw UsageError("cannot write '" + g_.out_path + "'");
        }
        f << text;
    }

    int cmd_eca();
    int cmd_ca2d();
    int cmd_qca_run();
    int cmd_qca_check();
    int cmd_pqca_run();
    int cmd_pqca_epr();
    int cmd_bqca_run();
    int cmd_qtm_run();
    int cmd_qtm_check();
    int cmd_compile_qtm();
    int cmd_equiv();
    int cmd_interferometer();
    int cmd_gates_demo();

    std::ostream &out_;
    std::ostream &err_;
    Globals g_;

    // Subcommand arguments.
    int rule_ = 0;
    int steps_ = 0;
    std::string seed_ = "single";
    bool ring_ = false;
    int ring_check_ = 0;
    std::string ca_rule_ = "life";
    std::string pattern_ = "blinker";
    std::string spec_path_;
    std::string init_;
    std::string init_file_;
    bool flatten_ = false;
    int window_ = 3;
    int n_ = 0;
    std::string schedule_path_;
    std::string trace_path_;
    std::string machine_path_;
    std::string input_;
    std::optional<long long> k_;
    std::string accept_;
    bool obstacle_ = false;
    bool single_ = false;
    std::string gate_file_;
};

int Cli::cmd_eca() {
    std::string fmt = g_.pick_format({"text", "pbm", "json"});
    EcaRule rule = as_usage([&] { return EcaRule(rule_); });
    if (ring_check_ > 0) {
        RingReversibility r = is_reversible_on_ring(rule, ring_check_);
        Json j = Json::object();
        j["rule"] = rule.number();
        j["ring_size"] = r.ring_size;
        j["bijective"] = r.bijective;
        if (r.collision) {
            j["collision"] = Json::array({render_grid(r.collision->first), render_grid(r.collision->second)});
            for (auto &c : j["collision"]) {
                std::string s = c.get<std::string>();
                s.erase(std::remove(s.begin(), s.end(), '\n'), s.end());
                c = s;
            }
        }
        emit(dump_json(j));
        return r.bijective ? kExitOk : kExitFailure;
    }
    std::vector<std::string> rows;
    if (ring_) {
        std::string row = seed_;
        if (seed_ == "single") {
            row = std::string(static_cast<size_t>(2 * steps_ + 1), '.');
            row[static_cast<size_t>(steps_)] = '#';
        }
        PeriodicConfig c = as_usage([&] { return PeriodicConfig::from_row(row); });
        for (const auto &x : run_trace(c, rule, steps_)) {
            std::string line = render_grid(x);
            line.erase(std::remove(line.begin(), line.end(), '\n'), line.end());
            rows.push_back(line);
        }
    } else {
        FiniteConfig c = as_usage([&] {
            return seed_ == "single" ? FiniteConfig(0, {{Coord{0, 0}, 1}}) : FiniteConfig::from_row(seed_);
        });
        long long len = seed_ == "single" ? 1 : static_cast<long long>(seed_.size());
        for (const auto &x : run_trace(c, rule, steps_)) {
            rows.push_back(render_row(x, -steps_, len - 1 + steps_));
        }
    }
    if (fmt == "pbm") {
        std::ostringstream s;
        write_pbm(s, rows_to_bits(rows));
        emit(s.str());
    } else if (fmt == "json") {
        emit(dump_json(Json(rows)));
    } else {
        std::string s;
        for (const auto &r : rows) {
            s += r + "\n";
        }
        emit(s);
    }
    return kExitOk;
}

int Cli::cmd_ca2d() {
    std::string fmt = g_.pick_format({"text", "pbm"});
    CaSpec spec = ca_rule_ == "life" ? life_spec() : ca_spec_from_json(read_json_file(ca_rule_));
    if (spec.dim() != 2) {
        throw UsageError("ca2d needs a two-dimensional rule");
    }
    PeriodicConfig c = builtin_pattern(pattern_);
    auto trace = run_trace(c, spec, steps_);
    if (fmt == "pbm") {
        std::ostringstream s;
        write_pbm(s, rows_to_bits(lines_of(render_grid(trace.back()))));
        emit(s.str());
        return kExitOk;
    }
    std::string s;
    for (size_t t = 0; t < trace.size(); t++) {
        if (t > 0) {
            s += "\n";
        }
        s += render_grid(trace[t]);
    }
    emit(s);
    return kExitOk;
}

int Cli::cmd_qca_run() {
    g_.pick_format({"json"});
    Tolerance tol = g_.tolerance();
    QcaSpec spec = qca_spec_from_json(read_json_file(spec_path_));
    Superposition s = initial_state(init_, init_file_, [&](const std::string &label) {
        QcaConfig c = as_usage([&] { return QcaConfig::from_label(label); });
        for (const auto &[i, q] : c.cells()) {
            if (q < 0 || q >= spec.num_states()) {
                throw UsageError("initial configuration names an unknown state");
            }
        }
        return c;
    });
    std::vector<Superposition> trace{s};
    for (int t = 0; t < steps_; t++) {
        trace.push_back(evolve(trace.back(), spec, tol));
    }
    emit(dump_json(trace_json(trace)));
    return kExitOk;
}

int Cli::cmd_qca_check() {
    g_.pick_format({"json"});
    Tolerance tol = g_.tolerance();
    QcaSpec spec = flatten_ ? as_qca(pqca_spec_from_json(read_json_file(spec_path_)))
                            : qca_spec_from_json(read_json_file(spec_path_));
    LocalProbabilityReport lp = check_local_probability(spec, tol);
    bool stable = check_quiescent_stability(spec);
    Json j = Json::object();
    Json lpj = Json::object();
    lpj["ok"] = lp.ok;
    Json tuple = Json::array();
    for (int s : lp.worst_tuple) {
        tuple.push_back(spec.state_names()[static_cast<size_t>(s)]);
    }
    lpj["worst_tuple"] = tuple;
    lpj["worst_sum"] = lp.worst_sum;
    j["local_probability"] = lpj;
    j["quiescent_stability"] = stable;
    bool ok = lp.ok && stable;
    Json witnesses = Json::object();
    if (!lp.ok) {
        witnesses["local_probability"] = tuple;
    }
    if (stable) {
        // The window checks enumerate successors, which needs a stable
        // quiescent state.
        WindowCertificate wf = check_well_formed_window(spec, window_, tol);
        WindowCertificate un = check_unitary_window(spec, window_, tol);
        j["well_formed_window"] = certificate_json(wf);
        j["unitary_window"] = certificate_json(un);
        ok = ok && wf.ok && un.ok;
        if (wf.witness) {
            witnesses["well_formed_window"] = Json::array({wf.witness->first, wf.witness->second});
        }
        if (un.witness) {
            witnesses["unitary_window"] = Json::array({un.witness->first, un.witness->second});
        }
    } else {
        j["well_formed_window"] = nullptr;
        j["unitary_window"] = nullptr;
    }
    j["witnesses"] = witnesses;
    emit(dump_json(j));
    return ok ? kExitOk : kExitFailure;
}

int Cli::cmd_pqca_run() {
    g_.pick_format({"json"});
    Tolerance tol = g_.tolerance();
    PqcaSpec spec = pqca_spec_from_json(read_json_file(spec_path_));
    Superposition s =
        initial_state(init_, init_file_, [&](const std::string &label) { return parse_pqca_config(label, spec); });
    std::vector<Superposition> trace{s};
    for (int t = 0; t < steps_; t++) {
        trace.push_back(pqca_step(trace.back(), spec, tol));
    }
    emit(dump_json(trace_json(trace)));
    return kExitOk;
}

int Cli::cmd_pqca_epr() {
    g_.pick_format({"json"});
    Tolerance tol = g_.tolerance();
    PqcaSpec spec = epr_spec();
    Superposition s = basis_state(epr_initial_config(spec));
    std::vector<Superposition> trace;
    for (int t = 0; t < steps_; t++) {
        s = pqca_step(s, spec, tol);
        trace.push_back(s);
    }
    emit(dump_json(trace_json(trace)));
    return kExitOk;
}

int Cli::cmd_bqca_run() {
    g_.pick_format({"json"});
    Tolerance tol = g_.tolerance();
    std::vector<Gate> schedule = schedule_from_json(read_json_file(schedule_path_));
    BqcaSpec spec = make_bqca_spec(n_, std::move(schedule), steps_, tol);
    std::string bits = init_.empty() ? std::string(static_cast<size_t>(n_), '0') : init_;
    if (static_cast<int>(bits.size()) != n_) {
        throw UsageError("initial bit string must have n characters");
    }
    QubitRegister reg = as_usage([&] { return QubitRegister::basis(bits); });
    ScheduleRun run = run_schedule(reg, spec, tol);
    Json j = Json::object();
    j["final"] = to_json(run.final_state.state());
    if (n_ <= kMaxOracleQubits) {
        QubitRegister oracle = circuit_oracle(reg, spec, tol);
        j["oracle_max_difference"] = max_amplitude_difference(run.final_state.state(), oracle.state());
    }
    if (!trace_path_.empty()) {
        Json t = Json::array();
        for (const auto &r : run.trace) {
            t.push_back(to_json(r.state()));
        }
        std::ofstream f(trace_path_, std::ios::binary);
        if (!f) {
            throw UsageError("cannot write '" + trace_path_ + "'");
        }
        f << dump_json(t);
    }
    emit(dump_json(j));
    return kExitOk;
}

int Cli::cmd_qtm_run() {
    g_.pick_format({"json"});
    Tolerance tol = g_.tolerance();
    QtmSpec spec = qtm_spec_from_json(read_json_file(machine_path_));
    std::vector<int> input = as_usage([&] { return spec.parse_input(input_); });
    Superposition s = Superposition::basis(initial_config(spec, input).label());
    Json trace = Json::array({to_json(s)});
    for (int t = 0; t < steps_; t++) {
        s = qtm_step(s, spec, tol);
        trace.push_back(to_json(s));
    }
    Json j = Json::object();
    j["trace"] = trace;
    if (k_) {
        std::set<int> accept;
        for (const auto &a : split_list(accept_)) {
            accept.insert(as_usage([&] { return spec.symbol_index(a); }));
        }
        j["acceptance"] = acceptance_probability(spec, input, steps_, *k_, accept, tol);
    }
    emit(dump_json(j));
    return kExitOk;
}

int Cli::cmd_qtm_check() {
    g_.pick_format({"json"});
    Tolerance tol = g_.tolerance();
    QtmSpec spec = qtm_spec_from_json(read_json_file(machine_path_));
    QtmWindowReport r = check_well_formed_window(spec, window_, steps_, tol);
    Json j = Json::object();
    j["unidirectional"] = is_unidirectional(spec);
    Json w = Json::object();
    w["ok"] = r.ok;
    w["window"] = r.window;
    w["domain_size"] = r.domain_size;
    w["worst_deviation"] = r.worst_deviation;
    w["max_norm_drift"] = r.max_norm_drift;
    w["witness"] = r.witness ? Json::array({r.witness->first, r.witness->second}) : Json(nullptr);
    j["well_formed_window"] = w;
    emit(dump_json(j));
    return r.ok ? kExitOk : kExitFailure;
}

int Cli::cmd_compile_qtm() {
    g_.pick_format({"json"});
    Tolerance tol = g_.tolerance();
    QtmSpec spec = qtm_spec_from_json(read_json_file(machine_path_));
    CompiledPqca compiled = compile(spec, tol);
    emit(dump_json(to_json(compiled.spec)));
    return kExitOk;
}

int Cli::cmd_equiv() {
    g_.pick_format({"json"});
    Tolerance tol = g_.tolerance();
    QtmSpec spec = qtm_spec_from_json(read_json_file(machine_path_));
    std::vector<int> input = as_usage([&] { return spec.parse_input(input_); });
    std::set<int> accept;
    for (const auto &a : split_list(accept_)) {
        accept.insert(as_usage([&] { return spec.symbol_index(a); }));
    }
    EquivalenceReport r = equivalence_check(spec, input, steps_, k_.value_or(0), accept, tol);
    Json j = Json::object();
    j["p_qtm"] = r.p_qtm;
    j["p_pqca"] = r.p_pqca;
    j["delta"] = r.delta;
    j["qtm_steps"] = r.qtm_steps;
    j["pqca_steps"] = r.pqca_steps;
    j["embedding"] = "tape square h is cell h; a right-entered head state sits in the right slot of cell h-1, "
                     "a left-entered one in the left slot of cell h+1";
    emit(dump_json(j));
    return r.delta <= 1e-10 ? kExitOk : kExitFailure;
}

int Cli::cmd_interferometer() {
    g_.pick_format({"json"});
    if (single_ && obstacle_) {
        throw UsageError("--single and --obstacle are mutually exclusive");
    }
    auto p = single_ ? single_splitter() : interferometer(obstacle_);
    Json j = Json::object();
    for (const auto &[k, v] : p) {
        j[k] = v;
    }
    emit(dump_json(j));
    return kExitOk;
}

int Cli::cmd_gates_demo() {
    g_.pick_format({"json"});
    Tolerance tol = g_.tolerance();
    Json j = Json::object();
    if (!gate_file_.empty()) {
        Gate g = gate_from_json(read_json_file(gate_file_));
        bool unitary = is_unitary(g, tol);
        j["gate"] = to_json(g);
        j["unitary"] = unitary;
        emit(dump_json(j));
        return unitary ? kExitOk : kExitFailure;
    }
    Json gates = Json::object();
    for (auto name : named_gate_names()) {
        Gate g = named_gate(name);
        Json e = Json::object();
        e["arity"] = g.arity();
        e["unitary"] = is_unitary(g, tol);
        e["matrix"] = to_json(g.matrix());
        gates[std::string(name)] = e;
    }
    j["gates"] = gates;
    Json cnot = Json::object();
    for (const char *in : {"00", "01", "10", "11"}) {
        QubitRegister r = apply(QubitRegister::basis(in), named_gate("CNOT"), {0, 1}, tol);
        cnot[in] = r.state().begin()->first;
    }
    j["cnot_table"] = cnot;
    j["hadamard_all"] = to_json(hadamard_all(n_).state());
    QubitRegister bell = apply(apply(QubitRegister::basis("00"), named_gate("H"), {0}, tol), named_gate("CNOT"),
                               {0, 1}, tol);
    Json b = Json::object();
    b["state"] = to_json(bell.state());
    b["product"] = is_product_2q(bell, tol);
    j["bell"] = b;
    emit(dump_json(j));
    return kExitOk;
}

int Cli::run(int argc, const char *const *argv) {
    CLI::App app{"Quantum and classical cellular automata toolkit", "qcab"};
    app.require_subcommand(1);
    app.add_option("--tolerance-norm", g_.tolerance_norm, "Norm tolerance");
    app.add_option("--tolerance-unitary", g_.tolerance_unitary, "Unitarity tolerance");
    app.add_option("--out", g_.out_path, "Write the result to this file instead of stdout");
    app.add_option("--format", g_.format, "Output format")->check(CLI::IsMember({"json", "text", "pbm"}));

    auto sub = [&](const char *name, const char *help) {
        CLI::App *s = app.add_subcommand(name, help);
        s->fallthrough();
        return s;
    };
    auto steps = [&](CLI::App *s, bool required) {
        auto *o = s->add_option("--steps", steps_, "Number of steps")->check(CLI::NonNegativeNumber);
        if (required) {
            o->required();
        }
    };

    CLI::App *eca = sub("eca", "Elementary cellular automaton space-time diagram");
    eca->add_option("--rule", rule_, "Wolfram rule number")->required();
    steps(eca, false);
    eca->add_option("--seed", seed_, "'single' or a row of '.'/'#' starting at cell 0");
    eca->add_flag("--ring", ring_, "Evolve on a ring sized by the seed");
    eca->add_option("--ring-check", ring_check_, "Check bijectivity on rings of this size")
        ->check(CLI::Range(1, 24));

    CLI::App *ca2d = sub("ca2d", "Two-dimensional automaton on a torus");
    ca2d->add_option("--rule", ca_rule_, "'life' or a CA spec JSON file");
    ca2d->add_option("--pattern", pattern_, "blinker, glider, block or a text grid file");
    steps(ca2d, false);

    CLI::App *qca_run = sub("qca-run", "Evolve a 1d-QCA");
    qca_run->add_option("--spec", spec_path_, "QCA spec JSON")->required();
    qca_run->add_option("--init", init_, "Initial basis configuration label");
    qca_run->add_option("--init-file", init_file_, "Initial superposition JSON");
    steps(qca_run, true);

    CLI::App *qca_check = sub("qca-check", "Validity checks for a 1d-QCA");
    qca_check->add_option("--spec", spec_path_, "QCA spec JSON")->required();
    qca_check->add_option("--window", window_, "Window size")->check(CLI::PositiveNumber);
    qca_check->add_flag("--pqca", flatten_, "Read a PQCA spec and check its flattened 1d-QCA");

    CLI::App *pqca_run = sub("pqca-run", "Evolve a partitioned QCA");
    pqca_run->add_option("--spec", spec_path_, "PQCA spec JSON")->required();
    pqca_run->add_option("--init", init_, "Initial configuration, e.g. \"-1:(0,0,-),1:(+,0,0)\"");
    pqca_run->add_option("--init-file", init_file_, "Initial superposition JSON");
    steps(pqca_run, true);

    CLI::App *pqca_epr = sub("pqca-epr", "The EPR automaton from its standard start");
    steps(pqca_epr, true);

    CLI::App *bqca_run = sub("bqca-run", "Block-partitioned qubit chain");
    bqca_run->add_option("--n", n_, "Number of qubits")->required()->check(CLI::PositiveNumber);
    bqca_run->add_option("--schedule", schedule_path_, "Schedule JSON")->required();
    steps(bqca_run, true);
    bqca_run->add_option("--init", init_, "Initial bit string");
    bqca_run->add_option("--trace", trace_path_, "Write every intermediate state here");

    CLI::App *qtm_run = sub("qtm-run", "Run a quantum Turing machine");
    qtm_run->add_option("--machine", machine_path_, "QTM spec JSON")->required();
    qtm_run->add_option("--input", input_, "Input word");
    steps(qtm_run, true);
    qtm_run->add_option("--k", k_, "Distinguished tape square");
    qtm_run->add_option("--accept", accept_, "Comma-separated accepting symbols");

    CLI::App *qtm_check = sub("qtm-check", "Bounded well-formedness audit");
    qtm_check->add_option("--machine", machine_path_, "QTM spec JSON")->required();
    qtm_check->add_option("--window", window_, "Tape window")->check(CLI::PositiveNumber);
    steps(qtm_check, false);

    CLI::App *compile_qtm = sub("compile-qtm", "Compile a unidirectional QTM to a PQCA");
    compile_qtm->add_option("--in", machine_path_, "QTM spec JSON")->required();

    CLI::App *equiv = sub("equiv", "Compare QTM and compiled PQCA acceptance");
    equiv->add_option("--machine", machine_path_, "QTM spec JSON")->required();
    equiv->add_option("--input", input_, "Input word");
    steps(equiv, true);
    equiv->add_option("--k", k_, "Distinguished tape square");
    equiv->add_option("--accept", accept_, "Comma-separated accepting symbols")->required();

    CLI::App *interf = sub("interferometer", "Photon path detection probabilities");
    interf->add_flag("--obstacle", obstacle_, "Block the lower arm");
    interf->add_flag("--single", single_, "A lone beam splitter");

    CLI::App *gates = sub("gates-demo", "Gate tables, H on every qubit and the Bell state");
    gates->add_option("--gate-file", gate_file_, "Check this gate literal instead");
    gates->add_option("--n", n_, "Qubits for the Hadamard layer")->check(CLI::Range(1, 12));

    n_ = 3;
    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        out_ << app.help();
        return kExitOk;
    } catch (const CLI::ParseError &e) {
        err_ << "error: " << e.what() << "\n";
        return kExitUsage;
    }

    try {
        g_.tolerance();
        if (eca->parsed()) {
            return cmd_eca();
        }
        if (ca2d->parsed()) {
            return cmd_ca2d();
        }
        if (qca_run->parsed()) {
            return cmd_qca_run();
        }
        if (qca_check->parsed()) {
            return cmd_qca_check();
        }
        if (pqca_run->parsed()) {
            return cmd_pqca_run();
        }
        if (pqca_epr->parsed()) {
            return cmd_pqca_epr();
        }
        if (bqca_run->parsed()) {
            return cmd_bqca_run();
        }
        if (qtm_run->parsed()) {
            return cmd_qtm_run();
        }
        if (qtm_check->parsed()) {
            window_ = qtm_check->count("--window") ? window_ : 4;
            steps_ = qtm_check->count("--steps") ? steps_ : 5;
            return cmd_qtm_check();
        }
        if (compile_qtm->parsed()) {
            return cmd_compile_qtm();
        }
        if (equiv->parsed()) {
            return cmd_equiv();
        }
        if (interf->parsed()) {
            return cmd_interferometer();
        }
        if (gates->parsed()) {
            return cmd_gates_demo();
        }
    } catch (const UsageError &e) {
        err_ << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const ParseError &e) {
        err_ << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception &e) {
        err_ << "error: " << e.what() << "\n";
        return kExitFailure;
    }
    return kExitUsage;
}

}  // namespace

int run_cli(int argc, const char *const *argv, std::ostream &out, std::ostream &err) {
    Cli cli(out, err);
    return cli.run(argc, argv);
}

}  // namespace qcab
