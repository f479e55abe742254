#pragma once

#include <json.hpp>

#include "wittsuper/classify.hpp"

namespace wittsuper {

using Json = nlohmann::json;

// term lists {coeff, alpha:[...], odd:[...]} with "p/q" coefficients;
// bit-exact round trip
Json poly_to_json(const SuperPolynomial& f);
SuperPolynomial poly_from_json(const Json& j, Signature sig, EvenContext ctx = EvenContext::Polynomial);

// field terms additionally carry dir
Json field_to_json(const VectorField& x);
VectorField field_from_json(const Json& j, Signature sig);

// {base:["0","1/2"], free:[[...]], plus:[[...]]} component lists
Json support_to_json(const SupportSet& s);
SupportSet support_from_json(const Json& j);

Json shadow_to_json(const ShadowPartition& sh);
Json levi_to_json(const LeviSpec& spec);
Json verdict_to_json(const SimplicityVerdict& v);
Json main_verdict_to_json(const MainVerdict& v);

// CLI mini-language:
//   descriptor: "A" | "Asigma" | "Pi:<...>" | comma list of
//               poly | laurent(r) | lquot     (n passed separately)
ModuleDescriptor parse_descriptor(const std::string& text, int m, int n);
//   M tag: trivial | str | pistr | nonfund | fund:<descriptor>:<level>
MTag parse_mtag(const std::string& text, Signature gl);
//   box: "lo:hi,lo:hi"
Box parse_box(const std::string& text, int m);

std::string read_text_file(const std::string& path);
Json read_json_file(const std::string& path);

}  // namespace wittsuper
