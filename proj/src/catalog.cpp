#include "dsrg/catalog.hpp"

#include "dsrg/graph_ops.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace dsrg {

bool catalog_insert(Catalog& catalog, const Matrix& graph, const Provenance& provenance,
                    std::size_t index) {
    const VerifyReport report = verify_dsrg_report(graph, catalog.params);
    if (!report.ok) {
        throw std::invalid_argument("graph " + std::to_string(index) +
                                    " failed verification: " + report.reason);
    }
    CanonicalForm form = canonical_form(graph);
    auto pos = std::lower_bound(
        catalog.entries.begin(), catalog.entries.end(), form.bytes,
        [](const CatalogEntry& e, const std::vector<std::uint8_t>& b) {
            return e.canonical_bytes < b;
        });
    if (pos != catalog.entries.end() && pos->canonical_bytes == form.bytes) return false;
    catalog.entries.insert(pos, {catalog.params, std::move(form.bytes), form.aut_order,
                                 provenance});
    return true;
}

Catalog dedup_and_classify(const std::vector<Matrix>& graphs, const Params& params,
                           const std::vector<Provenance>& provenance) {
    if (!provenance.empty() && provenance.size() != graphs.size()) {
        throw std::invalid_argument("dedup_and_classify: provenance size mismatch");
    }
    Catalog catalog;
    catalog.params = params;
    for (std::size_t i = 0; i < graphs.size(); ++i) {
        catalog_insert(catalog, graphs[i], provenance.empty() ? Provenance{} : provenance[i], i);
    }
    return catalog;
}

Catalog merge_catalogs(const Catalog& a, const Catalog& b) {
    if (!(a.params == b.params)) {
        throw std::invalid_argument("merge_catalogs: parameter sets differ");
    }
    Catalog out = a;
    for (const auto& entry : b.entries) {
        auto pos = std::lower_bound(
            out.entries.begin(), out.entries.end(), entry.canonical_bytes,
            [](const CatalogEntry& e, const std::vector<std::uint8_t>& bytes) {
                return e.canonical_bytes < bytes;
            });
        if (pos != out.entries.end() && pos->canonical_bytes == entry.canonical_bytes) continue;
        out.entries.insert(pos, entry);
    }
    return out;
}

std::vector<SummaryRow> summarize(const Catalog& catalog) {
    std::map<std::uint64_t, std::size_t> counts;
    for (const auto& e : catalog.entries) ++counts[e.aut_order];
    std::vector<SummaryRow> rows;
    rows.reserve(counts.size());
    for (auto it = counts.rbegin(); it != counts.rend(); ++it) {
        rows.push_back({it->first, it->second});
    }
    return rows;
}

std::string summary_text(const Catalog& catalog) {
    std::ostringstream os;
    os << "DSRG(" << format_params(catalog.params) << ")\n";
    os << "|Aut|      #classes\n";
    for (const auto& row : summarize(catalog)) {
        os << row.aut_order;
        for (std::size_t pad = std::to_string(row.aut_order).size(); pad < 11; ++pad) os << ' ';
        os << row.classes << "\n";
    }
    os << "total      " << catalog.entries.size() << "\n";
    return os.str();
}

std::string summary_csv(const Catalog& catalog) {
    std::ostringstream os;
    os << "aut_order,classes\n";
    for (const auto& row : summarize(catalog)) {
        os << row.aut_order << "," << row.classes << "\n";
    }
    return os.str();
}

}  // namespace dsrg
