#ifndef HCERT_JSON_IO_HPP
#define HCERT_JSON_IO_HPP

#include <json.hpp>

#include <string>

#include "bernstein.hpp"
#include "certify.hpp"
#include "multipoly.hpp"

namespace hcert {

using nlohmann::json;

json rat_pair(const Rational& r);            // ["num", "den"] decimal strings
Rational rat_from_pair(const json& j);

// {"vars":["p","x"],"terms":[{"e":[2,0],"n":"-48","d":"1"},...]}
json poly_to_json(const MultiPoly& p);
MultiPoly poly_from_json(const json& j);

json box_to_json(const Box& b);              // [["lo","hi"],...]
Box box_from_json(const json& j);

// {"degrees":[6,4],"box":[["0","1"],["0","1"]],"coeffs":[["60","1"],...]}
// coefficients in row-major multi-index order
json tensor_to_json(const BernsteinTensor& t);

json certificate_node_to_json(const Certificate& c);

// hex SHA-256 of the canonical polynomial dump
std::string poly_sha256(const MultiPoly& p);

// {"poly_sha":..., "threshold":["60","1"], "root":{...}}
json certificate_document(const MultiPoly& p, const Rational& threshold,
                          const Certificate& root);

// CLI argument helpers: "lo,hi;lo,hi" boxes and "v1,v2" corners with
// "n" / "n/d" rational literals
Box parse_box_spec(const std::string& spec);
std::vector<Rational> parse_point_spec(const std::string& spec);

}  // namespace hcert

#endif
