#include "catalog.hpp"

#include <map>
#include <stdexcept>

#include "golden.hpp"

namespace hcert {

namespace {

const char* const* golden_entries(const std::string& id) {
    for (std::size_t i = 0; i < golden::kTableCount; ++i)
        if (id == golden::kTables[i].id) return golden::kTables[i].entries;
    return nullptr;
}

struct Plan {
    std::string poly;   // "g0", "ghalf", "g2u"
    int quadrant;       // -1 root, 1..4 first-level, 11..14 second-level (p,x) quadrants
    int slice;          // u-index for g2u, else -1
};

// table ids in catalog order
const std::map<std::string, Plan>& plans() {
    static const std::map<std::string, Plan> m = [] {
        std::map<std::string, Plan> p;
        p["b0"] = {"g0", -1, -1};
        p["bhalf"] = {"ghalf", -1, -1};
        for (int r = 1; r <= 4; ++r) {
            p["q" + std::to_string(r) + "g0"] = {"g0", r, -1};
            p["q" + std::to_string(r) + "ghalf"] = {"ghalf", r, -1};
            p["q1" + std::to_string(r) + "g0"] = {"g0", 10 + r, -1};
            p["q1" + std::to_string(r) + "ghalf"] = {"ghalf", 10 + r, -1};
        }
        for (int k = 0; k <= 3; ++k) {
            p["g2k" + std::to_string(k)] = {"g2u", -1, k};
            for (int r = 1; r <= 4; ++r)
                p["g2q" + std::to_string(r) + "k" + std::to_string(k)] = {"g2u", r, k};
        }
        return p;
    }();
    return m;
}

// de Casteljau staging: split (p,x) only, matching the reference regions
BernsteinTensor quadrant_tensor(const BernsteinTensor& root, int quadrant) {
    auto stage = [](const BernsteinTensor& t, int r) {
        auto [pl, pr] = subdivide(t, 0);
        const BernsteinTensor& phalf = (r == 1 || r == 2) ? pl : pr;
        auto [xl, xr] = subdivide(phalf, 1);
        return (r == 1 || r == 3) ? xl : xr;
    };
    if (quadrant <= 4) return stage(root, quadrant);
    BernsteinTensor q1 = stage(root, 1);
    return stage(q1, quadrant - 10);
}

}  // namespace

std::vector<std::string> catalog_ids() {
    std::vector<std::string> ids;
    for (std::size_t i = 0; i < golden::kTableCount; ++i) ids.push_back(golden::kTables[i].id);
    return ids;
}

CatalogEntry reproduce_table(const std::string& id, const MajorantChain& chain) {
    auto it = plans().find(id);
    const char* const* gold = golden_entries(id);
    if (it == plans().end() || gold == nullptr)
        throw std::invalid_argument("unknown table id '" + id + "'");
    const Plan& plan = it->second;

    MultiPoly poly(std::vector<std::string>{});
    std::vector<unsigned> degrees;
    Box root_box;
    if (plan.poly == "g0") {
        poly = chain.g0;
        degrees = {6, 4};
        root_box = Box::unit_cube(2);
    } else if (plan.poly == "ghalf") {
        poly = chain.ghalf;
        degrees = {6, 4};
        root_box = Box::unit_cube(2);
    } else {
        poly = g2_on_unit_cube(chain.g2);
        degrees = {6, 4, 3};
        root_box = Box::unit_cube(3);
    }

    BernsteinTensor root = to_bernstein(poly, degrees, root_box);
    CatalogEntry entry;
    entry.id = id;
    entry.tensor = plan.quadrant < 0 ? root : quadrant_tensor(root, plan.quadrant);
    entry.slice = plan.slice < 0 ? 0 : static_cast<unsigned>(plan.slice);
    entry.has_slice = plan.slice >= 0;

    // affine-substitution route on the same box must agree exactly
    BernsteinTensor affine = to_bernstein(poly, degrees, entry.tensor.box);
    entry.routes_agree = affine.degrees == entry.tensor.degrees &&
                         affine.coeffs == entry.tensor.coeffs;

    // diff the 7x5 matrix (the fixed-u slice for the 3-D tensors)
    entry.matches_reference = true;
    bool first = true;
    for (unsigned i = 0; i <= 6; ++i) {
        for (unsigned j = 0; j <= 4; ++j) {
            std::vector<unsigned> idx{i, j};
            if (entry.has_slice) idx.push_back(entry.slice);
            const Rational& got = entry.tensor.at(idx);
            const Rational want = Rational::from_string(gold[i * 5 + j]);
            if (got != want) {
                entry.matches_reference = false;
                entry.diffs.push_back(TableDiff{i, j, got, want});
            }
            if (first || got > entry.matrix_max) {
                entry.matrix_max = got;
                entry.max_row = i;
                entry.max_col = j;
                first = false;
            }
        }
    }
    return entry;
}

std::vector<CatalogEntry> tensor_matrices(const MajorantChain& chain) {
    std::vector<CatalogEntry> out;
    for (const auto& id : catalog_ids()) out.push_back(reproduce_table(id, chain));
    return out;
}

}  // namespace hcert
