#pragma once

#include "dsrg/catalog.hpp"
#include "dsrg/ga.hpp"
#include "dsrg/matrix.hpp"
#include "dsrg/orbit_matrix.hpp"
#include "dsrg/params.hpp"

#include <string>

namespace dsrg {

/// Adjacency text: optional `#` comment lines, a `v k t lambda mu` header,
/// then v lines of v characters from {0,1}.
struct GraphFile {
    Params params;
    Matrix matrix;

    bool operator==(const GraphFile&) const = default;
};

GraphFile parse_graph_text(const std::string& text);
std::string serialize_graph_text(const Params& params, const Matrix& m);

/// Orbit matrix text: `v k t lambda mu`, then `p b R|C`, then the lengths
/// line, then b rows of b entries. `#` comments and blank lines are skipped.
struct OrbitMatrixFile {
    OrbitMatrix matrix;
    char kind = 'R';  // 'R' row variant, 'C' column variant

    bool operator==(const OrbitMatrixFile&) const = default;
};

OrbitMatrixFile parse_orbit_matrix_text(const std::string& text);
std::string serialize_orbit_matrix_text(const OrbitMatrix& m, char kind);

/// A search run: which orbit matrix to index, how, and with what budget.
/// GA fields are carried under their published names (POP,
/// MaxNrOfGenerations, p_m, p_c, NrGenesForCrossover, NrBitsForMutation,
/// FitnessForDSRGNrOfRepeatsMax, MaxNrOfPartialResets, MaxNrOfCompleteResets,
/// StartingPercentage); p_m, p_c and StartingPercentage are percentages in
/// the file and fractions in GaConfig.
struct RunManifest {
    std::string orbit_matrix_path;    // exactly one of path / inline text
    std::string orbit_matrix_inline;  // raw orbit-matrix text
    std::string generator;            // cycle notation; empty = standard partition
    GaConfig config;
    bool seed_provided = true;  // false: the CLI draws a seed from entropy
    std::string output_dir;
    int parallel_runs = 1;
};

RunManifest parse_manifest_json(const std::string& text);
std::string serialize_manifest_json(const RunManifest& manifest);

/// Stable JSON of an outcome. Elapsed wall time is deliberately omitted so
/// identical searches serialize byte-identically.
std::string outcome_to_json(const SearchOutcome& outcome);

std::string catalog_to_text(const Catalog& catalog);
Catalog catalog_from_text(const std::string& text);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

}  // namespace dsrg
