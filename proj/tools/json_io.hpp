#pragma once

#include "folia/foliation.hpp"
#include "folia/indices.hpp"
#include "folia/reduction.hpp"
#include "folia/structures.hpp"

#include <json.hpp>

#include <stdexcept>
#include <string>

namespace folia::io {

using Json = nlohmann::ordered_json;

/// Malformed JSON text or a document that does not match the expected shape.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Parses JSON text; syntax errors report line and column.
Json parse_text(const std::string& text);
/// Reads and parses a file. Throws std::ios_base::failure when unreadable.
Json read_file(const std::string& path);

Json to_json(const Rational& r);
Json to_json(const MultiPoly& p);
Json to_json(const RatFunc& f);
Json to_json(const DiffForm& a);
Json to_json(const ProjFoliation& f);
Json to_json(const AffineForm& a);
Json to_json(const PlaneGerm& g);
Json to_json(const SingularPointReport& r);
Json to_json(const BBReport& r);
Json to_json(const LinearPartClass& c);
Json to_json(const ReductionTree& t);
Json to_json(const SL2Triple& t);
Json to_json(const RiccatiODE& r);
Json to_json(const LogClosedForm& l);
Json to_json(const CatalogForm& c);

Rational rational_from_json(const Json& j);
MultiPoly poly_from_json(const Json& j);
RatFunc ratfunc_from_json(const Json& j);
DiffForm form_from_json(const Json& j);
/// Validates through make_foliation; a "degree" field must agree.
ProjFoliation foliation_from_json(const Json& j);
AffineForm affine_from_json(const Json& j);
PlaneGerm germ_from_json(const Json& j);
SingularPointReport singular_from_json(const Json& j);
BBReport bb_from_json(const Json& j);
LinearPartClass class_from_json(const Json& j);
ReductionTree tree_from_json(const Json& j);
SL2Triple triple_from_json(const Json& j);
RiccatiODE riccati_from_json(const Json& j);
LogClosedForm log_from_json(const Json& j);
CatalogForm catalog_from_json(const Json& j);

/// Polynomial map P^source_dim -> P^m by the images of z0..zm.
struct PolyMap {
  int source_dim = 2;
  std::vector<MultiPoly> images;
};

Json to_json(const PolyMap& m);
PolyMap map_from_json(const Json& j);

}  // namespace folia::io
