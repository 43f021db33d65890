#pragma once

#include <string>
#include <vector>

#include "eqschub/presentation_ring.hpp"

namespace eqschub {

enum class engine_kind { h, e, xmodel };

std::string to_string(engine_kind e);
engine_kind engine_from_string(const std::string& s);

// Product table over every ordered pair of classes in the rectangle, in the
// canonical basis order.  Serialization is canonical: rebuilding the same
// table yields byte-identical output.
struct table_document {
    std::string version = "1";
    int p = 0;
    int m = 0;
    engine_kind engine = engine_kind::e;
    bool q0 = false;
    bool t0 = false;

    struct entry {
        partition lambda;
        partition mu;
        schubert_expansion product;

        friend bool operator==(const entry&, const entry&) = default;
    };
    std::vector<entry> entries;

    friend bool operator==(const table_document&, const table_document&) = default;
};

// Computes all pairwise products with the requested engine (ring bound must
// cover 2 p (m-p)), optionally specialized, across jobs threads.  The first
// overload reuses a prebuilt reducer of the matching model.
table_document build_table(const presentation_ring& ring, engine_kind engine, bool q0, bool t0,
                           int jobs);
table_document build_table(const grassmann_shape& shape, engine_kind engine, bool q0, bool t0,
                           int degree_bound, int jobs);

std::string table_to_json(const table_document& doc);
table_document table_from_json(const std::string& text);
std::string table_to_csv(const table_document& doc);

// Writes through a sibling temporary file and renames into place.
void write_file_atomic(const std::string& path, const std::string& content);
std::string read_file(const std::string& path);

} // namespace eqschub
