#ifndef HCERT_GOLDEN_HPP
#define HCERT_GOLDEN_HPP

#include <cstddef>

namespace hcert::golden {

// One embedded 7x5 reference matrix (row-major "n" / "n/d" literals).
// The g2* ids are fixed-u-index slices of (6,4,3) tensors; everything
// else is a (6,4) tensor over (p,x).
struct ReferenceTable {
    const char* id;
    const char* const* entries;  // 35 literals
};

extern const ReferenceTable kTables[];
extern const std::size_t kTableCount;

}  // namespace hcert::golden

#endif
