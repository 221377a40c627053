#ifndef HCERT_CATALOG_HPP
#define HCERT_CATALOG_HPP

#include <string>
#include <vector>

#include "bernstein.hpp"
#include "functionals.hpp"

namespace hcert {

// One recomputed reference table: the tensor is rebuilt from scratch by
// midpoint de Casteljau staging AND by direct affine-substitution
// conversion, and both are diffed entrywise against the embedded
// reference matrix. For g2* ids the comparison addresses a fixed-u
// slice of the (6,4,3) tensor.
struct TableDiff {
    unsigned row, col;
    Rational computed;
    Rational reference;
};

struct CatalogEntry {
    std::string id;
    BernsteinTensor tensor;        // de Casteljau route (full tensor)
    unsigned slice;                // u-index for g2* ids, otherwise unused
    bool has_slice = false;
    bool routes_agree = false;     // de Casteljau == affine substitution
    bool matches_reference = false;
    std::vector<TableDiff> diffs;

    // enclosure of the compared matrix (the slice for g2* ids)
    Rational matrix_max;
    unsigned max_row = 0, max_col = 0;
};

std::vector<std::string> catalog_ids();

// compute every embedded table from the chain
std::vector<CatalogEntry> tensor_matrices(const MajorantChain& chain);

// compute one table; throws std::invalid_argument on unknown id
CatalogEntry reproduce_table(const std::string& id, const MajorantChain& chain);

}  // namespace hcert

#endif
