#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "polyarith/congruence.hpp"
#include "polyarith/mixed_base.hpp"
#include "polyarith/numeral.hpp"

namespace polyarith {

using Json = nlohmann::ordered_json;

/// Serialized catalog row. Digits are class values, most significant first.
struct CatalogRecord {
  std::vector<Integer> digits;
  Integer value;
  Integer k;
  Integer base;
  Integer a;
  Integer b;
  std::uint64_t m = 2;
  std::uint64_t n = 2;
  std::uint64_t lnu = 1;
  std::uint64_t lmu = 2;

  friend bool operator==(const CatalogRecord&, const CatalogRecord&) = default;
};

enum class ExportFormat { Json, Csv };

/// "json" or "csv"; throws InvalidArgument otherwise.
ExportFormat parse_format(std::string_view name);

std::vector<CatalogRecord> to_records(const Catalog& catalog);

/// CSV header: digits,value,k,base,a,b,m,n,lnu,lmu with every field quoted.
/// JSON: an array of objects with the same keys; integers as decimal strings.
/// Throws std::ios_base::failure when the sink goes bad.
void export_catalog(std::span<const CatalogRecord> records, ExportFormat format, std::ostream& sink);

std::vector<CatalogRecord> parse_catalog_json(std::string_view text);
std::vector<CatalogRecord> parse_catalog_csv(std::string_view text);

/// Rebuilds the ring, base and digits of a record and checks that value and k
/// reproduce. Throws NotInClass, InconsistentLengths, ... or InvalidArgument on mismatch.
void verify_record(const CatalogRecord& record);

/// Integer as a JSON number when it fits in 64 bits, otherwise a decimal string.
Json json_integer(const Integer& x);

/// Accepts a JSON integer or a decimal string.
Integer integer_from_json(const Json& j);

Json shape_to_json(const CongruenceClass& cls, const std::optional<ArityShape>& shape);
void export_shape_table(std::span<const ShapeRow> rows, ExportFormat format, std::ostream& sink);

/// {"bases": [...]}
Json scheme_to_json(const MixedBaseScheme& scheme);
MixedBaseScheme binary_scheme_from_json(const Json& j);

/// {"ring": {"a","b","m","n"}, "towers": [[...], ...]} with tower entries as class values.
Json scheme_to_json(const PolyadicMixedScheme& scheme);
PolyadicMixedScheme polyadic_scheme_from_json(const Json& j);

}  // namespace polyarith
