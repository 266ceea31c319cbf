#pragma once

#include "dsrg/canonical.hpp"
#include "dsrg/matrix.hpp"
#include "dsrg/params.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace dsrg {

/// Where a catalogued graph came from.
struct Provenance {
    std::string orbit_matrix;  // id of the orbit matrix that was indexed
    std::uint64_t seed = 0;
    std::int64_t generation = 0;

    bool operator==(const Provenance&) const = default;
};

/// One isomorphism class of verified DSRGs.
struct CatalogEntry {
    Params params;
    std::vector<std::uint8_t> canonical_bytes;
    std::uint64_t aut_order = 1;
    Provenance provenance;

    Matrix matrix() const { return unpack_bits(canonical_bytes, params.v); }
    bool operator==(const CatalogEntry&) const = default;
};

/// Classes sorted by canonical bytes; at most one entry per class.
struct Catalog {
    Params params;
    std::vector<CatalogEntry> entries;

    bool operator==(const Catalog&) const = default;
};

/// Verifies the graph (throws std::invalid_argument naming `index` if it is
/// not a DSRG for catalog.params), canonicalizes it, and inserts it unless
/// its class is already present. Returns true when a new class was added.
bool catalog_insert(Catalog& catalog, const Matrix& graph, const Provenance& provenance,
                    std::size_t index = 0);

/// Builds a catalog from scratch. provenance, when non-empty, runs parallel
/// to graphs. The result is independent of the input order up to which
/// duplicate's provenance is kept (the first seen wins).
Catalog dedup_and_classify(const std::vector<Matrix>& graphs, const Params& params,
                           const std::vector<Provenance>& provenance = {});

/// Union of classes; parameters must match; a's provenance wins on overlap.
Catalog merge_catalogs(const Catalog& a, const Catalog& b);

struct SummaryRow {
    std::uint64_t aut_order = 1;
    std::size_t classes = 0;

    bool operator==(const SummaryRow&) const = default;
};

/// Class counts grouped by |Aut|, largest group order first.
std::vector<SummaryRow> summarize(const Catalog& catalog);

/// Aligned two-column table, |Aut| and class count, with a total line.
std::string summary_text(const Catalog& catalog);

/// "aut_order,classes" CSV of the same rows.
std::string summary_csv(const Catalog& catalog);

}  // namespace dsrg
