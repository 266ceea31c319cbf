#include "dsrg/text_io.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace dsrg {

namespace {

using Json = nlohmann::ordered_json;

std::vector<std::string> split_lines(const std::string& text) {
    std::vector<std::string> lines;
    std::string cur;
    for (char c : text) {
        if (c == '\n') {
            if (!cur.empty() && cur.back() == '\r') cur.pop_back();
            lines.push_back(std::move(cur));
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    if (!cur.empty()) {
        if (cur.back() == '\r') cur.pop_back();
        lines.push_back(std::move(cur));
    }
    return lines;
}

bool is_blank(const std::string& line) {
    return line.find_first_not_of(" \t") == std::string::npos;
}

bool is_comment(const std::string& line) {
    const auto pos = line.find_first_not_of(" \t");
    return pos != std::string::npos && line[pos] == '#';
}

Params parse_params_line(const std::string& line, const char* what) {
    std::istringstream is(line);
    Params p;
    std::string extra;
    if (!(is >> p.v >> p.k >> p.t >> p.lambda >> p.mu) || (is >> extra)) {
        throw std::invalid_argument(std::string(what) +
                                    ": expected 'v k t lambda mu', got '" + line + "'");
    }
    return p;
}

}  // namespace

GraphFile parse_graph_text(const std::string& text) {
    const auto lines = split_lines(text);
    std::size_t idx = 0;
    while (idx < lines.size() && (is_comment(lines[idx]) || is_blank(lines[idx]))) ++idx;
    if (idx >= lines.size()) throw std::invalid_argument("graph text: missing header");
    GraphFile out;
    out.params = parse_params_line(lines[idx++], "graph text");
    const auto v = out.params.v;
    if (v < 1) throw std::invalid_argument("graph text: v must be positive");
    out.matrix = Matrix::Zero(v, v);
    for (std::int64_t i = 0; i < v; ++i, ++idx) {
        if (idx >= lines.size()) {
            throw std::invalid_argument("graph text: expected " + std::to_string(v) +
                                        " rows, got " + std::to_string(i));
        }
        const std::string& row = lines[idx];
        if (static_cast<std::int64_t>(row.size()) != v) {
            throw std::invalid_argument("graph text: row " + std::to_string(i) + " has " +
                                        std::to_string(row.size()) + " characters, expected " +
                                        std::to_string(v));
        }
        for (std::int64_t j = 0; j < v; ++j) {
            if (row[static_cast<std::size_t>(j)] == '1') {
                out.matrix(i, j) = 1;
            } else if (row[static_cast<std::size_t>(j)] != '0') {
                throw std::invalid_argument("graph text: row " + std::to_string(i) +
                                            " contains a character other than 0/1");
            }
        }
    }
    for (; idx < lines.size(); ++idx) {
        if (!is_blank(lines[idx]) && !is_comment(lines[idx])) {
            throw std::invalid_argument("graph text: unexpected content after the matrix");
        }
    }
    return out;
}

std::string serialize_graph_text(const Params& params, const Matrix& m) {
    if (m.rows() != params.v || m.cols() != params.v) {
        throw std::invalid_argument("serialize_graph_text: matrix does not match params");
    }
    std::string out = format_params(params);
    out.push_back('\n');
    for (Index i = 0; i < m.rows(); ++i) {
        for (Index j = 0; j < m.cols(); ++j) {
            out.push_back(m(i, j) != 0 ? '1' : '0');
        }
        out.push_back('\n');
    }
    return out;
}

OrbitMatrixFile parse_orbit_matrix_text(const std::string& text) {
    std::vector<std::string> lines;
    for (auto& line : split_lines(text)) {
        if (!is_blank(line) && !is_comment(line)) lines.push_back(line);
    }
    if (lines.size() < 3) throw std::invalid_argument("orbit matrix text: too few lines");
    OrbitMatrixFile out;
    out.matrix.params = parse_params_line(lines[0], "orbit matrix text");

    std::istringstream head(lines[1]);
    std::int64_t b = 0;
    std::string tag, extra;
    if (!(head >> out.matrix.prime >> b >> tag) || (head >> extra) ||
        (tag != "R" && tag != "C") || b < 1 || out.matrix.prime < 1) {
        throw std::invalid_argument("orbit matrix text: expected 'p b R|C', got '" + lines[1] +
                                    "'");
    }
    out.kind = tag[0];

    std::istringstream lens(lines[2]);
    out.matrix.lengths.resize(static_cast<std::size_t>(b));
    for (auto& n : out.matrix.lengths) {
        if (!(lens >> n) || n < 1) {
            throw std::invalid_argument("orbit matrix text: bad lengths line '" + lines[2] + "'");
        }
    }
    if (lens >> extra) throw std::invalid_argument("orbit matrix text: trailing lengths");

    if (lines.size() != static_cast<std::size_t>(3 + b)) {
        throw std::invalid_argument("orbit matrix text: expected " + std::to_string(b) +
                                    " entry rows");
    }
    out.matrix.entries.resize(b, b);
    for (std::int64_t i = 0; i < b; ++i) {
        std::istringstream row(lines[static_cast<std::size_t>(3 + i)]);
        for (std::int64_t j = 0; j < b; ++j) {
            if (!(row >> out.matrix.entries(i, j))) {
                throw std::invalid_argument("orbit matrix text: entry row " + std::to_string(i) +
                                            " is short");
            }
        }
        if (row >> extra) {
            throw std::invalid_argument("orbit matrix text: entry row " + std::to_string(i) +
                                        " is long");
        }
    }
    return out;
}

std::string serialize_orbit_matrix_text(const OrbitMatrix& m, char kind) {
    if (kind != 'R' && kind != 'C') {
        throw std::invalid_argument("serialize_orbit_matrix_text: kind must be R or C");
    }
    if (m.entries.rows() != m.entries.cols() ||
        static_cast<Index>(m.lengths.size()) != m.entries.rows()) {
        throw std::invalid_argument("serialize_orbit_matrix_text: inconsistent matrix");
    }
    std::ostringstream os;
    os << format_params(m.params) << "\n";
    os << m.prime << " " << m.block_count() << " " << kind << "\n";
    for (std::size_t i = 0; i < m.lengths.size(); ++i) {
        os << (i ? " " : "") << m.lengths[i];
    }
    os << "\n";
    for (Index i = 0; i < m.entries.rows(); ++i) {
        for (Index j = 0; j < m.entries.cols(); ++j) {
            os << (j ? " " : "") << m.entries(i, j);
        }
        os << "\n";
    }
    return os.str();
}

RunManifest parse_manifest_json(const std::string& text) {
    Json j;
    try {
        j = Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw std::invalid_argument(std::string("manifest: ") + e.what());
    }
    RunManifest m;
    if (j.contains("orbit_matrix")) m.orbit_matrix_path = j.at("orbit_matrix").get<std::string>();
    if (j.contains("orbit_matrix_inline")) {
        std::string joined;
        for (const auto& line : j.at("orbit_matrix_inline")) {
            joined += line.get<std::string>();
            joined.push_back('\n');
        }
        m.orbit_matrix_inline = std::move(joined);
    }
    if (m.orbit_matrix_path.empty() == m.orbit_matrix_inline.empty()) {
        throw std::invalid_argument(
            "manifest: exactly one of orbit_matrix / orbit_matrix_inline is required");
    }
    m.generator = j.value("generator", std::string{});

    GaConfig& c = m.config;
    c.pop_size = j.value("POP", c.pop_size);
    c.max_generations = j.value("MaxNrOfGenerations", c.max_generations);
    c.mutation_probability = j.value("p_m", c.mutation_probability * 100.0) / 100.0;
    c.crossover_probability = j.value("p_c", c.crossover_probability * 100.0) / 100.0;
    c.genes_per_crossover = j.value("NrGenesForCrossover", c.genes_per_crossover);
    c.bits_per_mutation = j.value("NrBitsForMutation", c.bits_per_mutation);
    c.stagnation_threshold = j.value("FitnessForDSRGNrOfRepeatsMax", c.stagnation_threshold);
    c.max_partial_resets = j.value("MaxNrOfPartialResets", c.max_partial_resets);
    c.max_complete_resets = j.value("MaxNrOfCompleteResets", c.max_complete_resets);
    c.starting_percentage = j.value("StartingPercentage", c.starting_percentage * 100.0) / 100.0;
    m.seed_provided = j.contains("seed");
    if (m.seed_provided) c.rng_seed = j.at("seed").get<std::uint64_t>();
    c.wall_clock_budget = j.value("WallClockBudget", c.wall_clock_budget);
    c.stop_on_first = j.value("StopOnFirst", c.stop_on_first);

    m.output_dir = j.value("output_dir", std::string{});
    m.parallel_runs = j.value("parallel_runs", 1);
    if (m.parallel_runs < 1) throw std::invalid_argument("manifest: parallel_runs must be >= 1");
    return m;
}

std::string serialize_manifest_json(const RunManifest& m) {
    Json j;
    if (!m.orbit_matrix_path.empty()) {
        j["orbit_matrix"] = m.orbit_matrix_path;
    } else {
        Json lines = Json::array();
        for (const auto& line : split_lines(m.orbit_matrix_inline)) lines.push_back(line);
        j["orbit_matrix_inline"] = std::move(lines);
    }
    if (!m.generator.empty()) j["generator"] = m.generator;
    const GaConfig& c = m.config;
    j["POP"] = c.pop_size;
    j["MaxNrOfGenerations"] = c.max_generations;
    j["p_m"] = c.mutation_probability * 100.0;
    j["p_c"] = c.crossover_probability * 100.0;
    j["NrGenesForCrossover"] = c.genes_per_crossover;
    j["NrBitsForMutation"] = c.bits_per_mutation;
    j["FitnessForDSRGNrOfRepeatsMax"] = c.stagnation_threshold;
    j["MaxNrOfPartialResets"] = c.max_partial_resets;
    j["MaxNrOfCompleteResets"] = c.max_complete_resets;
    j["StartingPercentage"] = c.starting_percentage * 100.0;
    if (m.seed_provided) j["seed"] = c.rng_seed;
    if (c.wall_clock_budget > 0.0) j["WallClockBudget"] = c.wall_clock_budget;
    if (c.stop_on_first) j["StopOnFirst"] = true;
    if (!m.output_dir.empty()) j["output_dir"] = m.output_dir;
    j["parallel_runs"] = m.parallel_runs;
    return j.dump(2) + "\n";
}

std::string outcome_to_json(const SearchOutcome& o) {
    Json j;
    j["params"] = {o.params.v, o.params.k, o.params.t, o.params.lambda, o.params.mu};
    j["seed"] = o.seed;
    j["max_fitness"] = o.max_fitness;
    j["generations_total"] = o.generations_total;
    j["budget_exhausted"] = o.budget_exhausted;
    j["warnings"] = o.warnings;
    Json runs = Json::array();
    for (const auto& r : o.runs) {
        runs.push_back({{"complete_run", r.complete_run},
                        {"partial_run", r.partial_run},
                        {"generations", r.generations},
                        {"f_best", r.f_best},
                        {"exit", r.exit}});
    }
    j["runs"] = std::move(runs);
    Json sols = Json::array();
    for (const auto& s : o.solutions) {
        Json rows = Json::array();
        for (Index i = 0; i < s.matrix.rows(); ++i) {
            std::string row(static_cast<std::size_t>(s.matrix.cols()), '0');
            for (Index c = 0; c < s.matrix.cols(); ++c) {
                if (s.matrix(i, c) != 0) row[static_cast<std::size_t>(c)] = '1';
            }
            rows.push_back(std::move(row));
        }
        sols.push_back({{"generation", s.generation},
                        {"partial_run", s.partial_run},
                        {"complete_run", s.complete_run},
                        {"rows", std::move(rows)}});
    }
    j["solutions"] = std::move(sols);
    j["trajectory"] = o.trajectory;
    return j.dump(2) + "\n";
}

std::string catalog_to_text(const Catalog& catalog) {
    std::ostringstream os;
    os << format_params(catalog.params) << "\n";
    os << "classes " << catalog.entries.size() << "\n";
    for (const auto& e : catalog.entries) {
        os << "aut " << e.aut_order << "\n";
        os << "om " << (e.provenance.orbit_matrix.empty() ? "-" : e.provenance.orbit_matrix)
           << "\n";
        os << "seed " << e.provenance.seed << "\n";
        os << "generation " << e.provenance.generation << "\n";
        os << serialize_graph_text(e.params, e.matrix());
    }
    return os.str();
}

namespace {

// "key value" line with an exact key; returns the value text.
std::string expect_keyed(const std::vector<std::string>& lines, std::size_t& idx,
                         const std::string& key) {
    if (idx >= lines.size() || lines[idx].rfind(key + " ", 0) != 0) {
        throw std::invalid_argument("catalog text: expected '" + key + " ...' at line " +
                                    std::to_string(idx + 1));
    }
    return lines[idx++].substr(key.size() + 1);
}

}  // namespace

Catalog catalog_from_text(const std::string& text) {
    const auto lines = split_lines(text);
    std::size_t idx = 0;
    if (idx >= lines.size()) throw std::invalid_argument("catalog text: empty");
    Catalog catalog;
    catalog.params = parse_params_line(lines[idx++], "catalog text");
    const std::string count_text = expect_keyed(lines, idx, "classes");
    const std::size_t count = static_cast<std::size_t>(std::stoull(count_text));
    for (std::size_t n = 0; n < count; ++n) {
        CatalogEntry e;
        e.params = catalog.params;
        e.aut_order = std::stoull(expect_keyed(lines, idx, "aut"));
        e.provenance.orbit_matrix = expect_keyed(lines, idx, "om");
        if (e.provenance.orbit_matrix == "-") e.provenance.orbit_matrix.clear();
        e.provenance.seed = std::stoull(expect_keyed(lines, idx, "seed"));
        e.provenance.generation = std::stoll(expect_keyed(lines, idx, "generation"));
        if (idx + static_cast<std::size_t>(catalog.params.v) + 1 > lines.size()) {
            throw std::invalid_argument("catalog text: truncated class " + std::to_string(n));
        }
        std::string block;
        for (std::int64_t take = 0; take < catalog.params.v + 1; ++take) {
            block += lines[idx++];
            block.push_back('\n');
        }
        GraphFile gf = parse_graph_text(block);
        if (!(gf.params == catalog.params)) {
            throw std::invalid_argument("catalog text: class " + std::to_string(n) +
                                        " has mismatched parameters");
        }
        e.canonical_bytes = pack_bits(gf.matrix);
        catalog.entries.push_back(std::move(e));
    }
    if (idx != lines.size()) throw std::invalid_argument("catalog text: trailing content");
    return catalog;
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << content;
    if (!out) throw std::runtime_error("write failed for " + path);
}

}  // namespace dsrg
