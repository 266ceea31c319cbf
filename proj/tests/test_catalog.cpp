#include "dsrg/catalog.hpp"

#include "dsrg/brute_force.hpp"
#include "dsrg/canonical.hpp"
#include "dsrg/graph_ops.hpp"
#include "dsrg/rng.hpp"

#include <doctest.h>

#include <algorithm>
#include <stdexcept>

using namespace dsrg;

namespace {

Matrix triangle() {
    Matrix m = Matrix::Zero(3, 3);
    m(0, 1) = m(1, 2) = m(2, 0) = 1;
    return m;
}

}  // namespace

TEST_CASE("dedup_and_classify collapses all labeled copies into one class") {
    const Params params{6, 2, 1, 0, 1};
    const std::vector<Matrix> all = brute_force_enumerate(params);
    REQUIRE(all.size() == 120);

    const Catalog catalog = dedup_and_classify(all, params);
    REQUIRE(catalog.entries.size() == 1);
    CHECK(catalog.entries[0].aut_order == 6);
    CHECK(catalog.params == params);

    // The stored representative is itself a DSRG with the same canonical form.
    const Matrix rep = catalog.entries[0].matrix();
    CHECK(verify_dsrg(rep, params));
    CHECK(canonical_form(rep).bytes == catalog.entries[0].canonical_bytes);
}

TEST_CASE("dedup_and_classify on the 3-cycle") {
    const Params params{3, 1, 0, 0, 1};
    const std::vector<Matrix> all = brute_force_enumerate(params);
    REQUIRE(all.size() == 2);

    const Catalog catalog = dedup_and_classify(all, params);
    REQUIRE(catalog.entries.size() == 1);
    CHECK(catalog.entries[0].aut_order == 3);
}

TEST_CASE("catalog_insert reports new classes and duplicates") {
    const Params params{3, 1, 0, 0, 1};
    Catalog catalog;
    catalog.params = params;

    const Matrix a = triangle();
    CHECK(catalog_insert(catalog, a, {"om-1", 7, 3}));
    CHECK(catalog.entries.size() == 1);
    CHECK(catalog.entries[0].provenance == Provenance{"om-1", 7, 3});

    // The reversed cycle is isomorphic; the first provenance is kept.
    const Matrix b = a.transpose();
    CHECK_FALSE(catalog_insert(catalog, b, {"om-2", 8, 4}));
    CHECK(catalog.entries.size() == 1);
    CHECK(catalog.entries[0].provenance.orbit_matrix == "om-1");
}

TEST_CASE("catalog entries are sorted and order-insensitive") {
    const Params params{6, 2, 1, 0, 1};
    std::vector<Matrix> all = brute_force_enumerate(params);
    REQUIRE(all.size() == 120);

    const Catalog forward = dedup_and_classify(all, params);

    Rng rng(99);
    rng.shuffle(all);
    const Catalog shuffled = dedup_and_classify(all, params);

    // Provenance is defaulted everywhere, so full equality must hold.
    CHECK(forward == shuffled);
    CHECK(std::is_sorted(forward.entries.begin(), forward.entries.end(),
                         [](const CatalogEntry& x, const CatalogEntry& y) {
                             return x.canonical_bytes < y.canonical_bytes;
                         }));
}

TEST_CASE("catalog_insert rejects graphs that fail verification") {
    const Params params{3, 1, 0, 0, 1};
    Catalog catalog;
    catalog.params = params;

    Matrix bad = Matrix::Zero(3, 3);  // empty digraph is not 1-regular
    CHECK_THROWS_WITH_AS(catalog_insert(catalog, bad, {}, 17),
                         doctest::Contains("graph 17"), std::invalid_argument);
    CHECK(catalog.entries.empty());

    std::vector<Matrix> graphs{triangle(), bad};
    CHECK_THROWS_WITH_AS(dedup_and_classify(graphs, params),
                         doctest::Contains("graph 1"), std::invalid_argument);
}

TEST_CASE("merge_catalogs") {
    const Params params{3, 1, 0, 0, 1};

    Catalog a;
    a.params = params;
    catalog_insert(a, triangle(), {"left", 1, 0});

    Catalog b;
    b.params = params;
    catalog_insert(b, Matrix(triangle().transpose()), {"right", 2, 0});

    SUBCASE("parameters must match") {
        Catalog other;
        other.params = Params{6, 2, 1, 0, 1};
        CHECK_THROWS_AS(merge_catalogs(a, other), std::invalid_argument);
    }

    SUBCASE("overlapping classes keep the left provenance") {
        const Catalog merged = merge_catalogs(a, b);
        REQUIRE(merged.entries.size() == 1);
        CHECK(merged.entries[0].provenance.orbit_matrix == "left");

        const Catalog flipped = merge_catalogs(b, a);
        REQUIRE(flipped.entries.size() == 1);
        CHECK(flipped.entries[0].provenance.orbit_matrix == "right");
    }

    SUBCASE("merging with an empty catalog is the identity") {
        Catalog empty;
        empty.params = params;
        CHECK(merge_catalogs(a, empty) == a);
        CHECK(merge_catalogs(empty, a) == a);
    }
}

TEST_CASE("summarize groups classes by automorphism group order, largest first") {
    // Synthetic catalog: summarize only reads aut_order per entry.
    Catalog catalog;
    catalog.params = Params{3, 1, 0, 0, 1};
    catalog.entries.push_back({catalog.params, {0x01}, 3, {}});
    catalog.entries.push_back({catalog.params, {0x02}, 6, {}});
    catalog.entries.push_back({catalog.params, {0x03}, 6, {}});

    const std::vector<SummaryRow> rows = summarize(catalog);
    REQUIRE(rows.size() == 2);
    CHECK(rows[0] == SummaryRow{6, 2});
    CHECK(rows[1] == SummaryRow{3, 1});
}

TEST_CASE("summary_text and summary_csv") {
    const Params params{6, 2, 1, 0, 1};
    const Catalog catalog = dedup_and_classify(brute_force_enumerate(params), params);

    CHECK(summary_text(catalog) ==
          "DSRG(6 2 1 0 1)\n"
          "|Aut|      #classes\n"
          "6          1\n"
          "total      1\n");
    CHECK(summary_csv(catalog) ==
          "aut_order,classes\n"
          "6,1\n");
}
