#include "polyarith/catalog.hpp"

#include <ios>
#include <ostream>

#include "polyarith/error.hpp"

namespace polyarith {

ExportFormat parse_format(std::string_view name) {
  if (name == "json") return ExportFormat::Json;
  if (name == "csv") return ExportFormat::Csv;
  throw Error(ErrorKind::InvalidArgument, "unknown format '" + std::string(name) + "' (json|csv)");
}

std::vector<CatalogRecord> to_records(const Catalog& catalog) {
  const auto& cls = catalog.ring.congruence_class();
  std::vector<CatalogRecord> out;
  out.reserve(catalog.records.size());
  for (const auto& rec : catalog.records) {
    CatalogRecord row;
    for (const auto& d : rec.digits) row.digits.push_back(catalog.ring.element(d).value());
    row.value = rec.value.value();
    row.k = rec.value.k();
    row.base = catalog.base.value();
    row.a = cls.a;
    row.b = cls.b;
    row.m = catalog.ring.m();
    row.n = catalog.ring.n();
    row.lnu = catalog.lnu;
    row.lmu = catalog.lmu;
    out.push_back(std::move(row));
  }
  return out;
}

namespace {

std::string join_digits(const std::vector<Integer>& digits) {
  std::string out;
  for (std::size_t i = 0; i < digits.size(); ++i) {
    if (i) out += ",";
    out += to_decimal(digits[i]);
  }
  return out;
}

std::vector<Integer> split_digits(std::string_view text) {
  std::vector<Integer> out;
  while (true) {
    const auto comma = text.find(',');
    out.push_back(parse_integer(text.substr(0, comma)));
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return out;
}

std::uint64_t parse_count(std::string_view text) {
  auto v = to_uint64(parse_integer(text));
  if (!v) throw Error(ErrorKind::InvalidArgument, "expected a non-negative count, got '" + std::string(text) + "'");
  return *v;
}

const char* const kColumns[] = {"digits", "value", "k", "base", "a", "b", "m", "n", "lnu", "lmu"};

std::vector<std::string> record_fields(const CatalogRecord& r) {
  return {join_digits(r.digits), to_decimal(r.value), to_decimal(r.k), to_decimal(r.base),
          to_decimal(r.a),       to_decimal(r.b),     std::to_string(r.m), std::to_string(r.n),
          std::to_string(r.lnu), std::to_string(r.lmu)};
}

void check_sink(std::ostream& sink) {
  sink.flush();
  if (!sink) throw std::ios_base::failure("catalog sink write failed");
}

}  // namespace

void export_catalog(std::span<const CatalogRecord> records, ExportFormat format, std::ostream& sink) {
  if (format == ExportFormat::Csv) {
    for (std::size_t c = 0; c < std::size(kColumns); ++c) sink << (c ? "," : "") << kColumns[c];
    sink << '\n';
    for (const auto& r : records) {
      const auto fields = record_fields(r);
      for (std::size_t c = 0; c < fields.size(); ++c) sink << (c ? "," : "") << '"' << fields[c] << '"';
      sink << '\n';
    }
  } else {
    Json array = Json::array();
    for (const auto& r : records) {
      const auto fields = record_fields(r);
      Json obj = Json::object();
      for (std::size_t c = 0; c < fields.size(); ++c) obj[kColumns[c]] = fields[c];
      array.push_back(std::move(obj));
    }
    sink << array.dump() << '\n';
  }
  check_sink(sink);
}

namespace {

CatalogRecord record_from_fields(const std::vector<std::string>& f) {
  if (f.size() != std::size(kColumns)) {
    throw Error(ErrorKind::InvalidArgument, "catalog row needs " + std::to_string(std::size(kColumns)) +
                                                " fields, got " + std::to_string(f.size()));
  }
  CatalogRecord r;
  r.digits = split_digits(f[0]);
  r.value = parse_integer(f[1]);
  r.k = parse_integer(f[2]);
  r.base = parse_integer(f[3]);
  r.a = parse_integer(f[4]);
  r.b = parse_integer(f[5]);
  r.m = parse_count(f[6]);
  r.n = parse_count(f[7]);
  r.lnu = parse_count(f[8]);
  r.lmu = parse_count(f[9]);
  return r;
}

// Minimal RFC 4180 line splitter: quoted fields, doubled quotes, no embedded newlines.
std::vector<std::string> split_csv_line(std::string_view line) {
  std::vector<std::string> fields(1);
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
        fields.back().push_back('"');
        ++i;
      } else if (c == '"') {
        quoted = false;
      } else {
        fields.back().push_back(c);
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      fields.emplace_back();
    } else if (c != '\r') {
      fields.back().push_back(c);
    }
  }
  if (quoted) throw Error(ErrorKind::InvalidArgument, "unterminated quote in CSV line");
  return fields;
}

}  // namespace

std::vector<CatalogRecord> parse_catalog_json(std::string_view text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::InvalidArgument, std::string("catalog JSON: ") + e.what());
  }
  if (!doc.is_array()) throw Error(ErrorKind::InvalidArgument, "catalog JSON must be an array");
  std::vector<CatalogRecord> out;
  for (const auto& obj : doc) {
    std::vector<std::string> fields;
    for (const char* key : kColumns) {
      if (!obj.contains(key) || !obj[key].is_string()) {
        throw Error(ErrorKind::InvalidArgument, std::string("catalog record lacks string field '") + key + "'");
      }
      fields.push_back(obj[key].get<std::string>());
    }
    out.push_back(record_from_fields(fields));
  }
  return out;
}

std::vector<CatalogRecord> parse_catalog_csv(std::string_view text) {
  std::vector<CatalogRecord> out;
  bool header = true;
  while (!text.empty()) {
    const auto eol = text.find('\n');
    std::string_view line = text.substr(0, eol);
    text.remove_prefix(eol == std::string_view::npos ? text.size() : eol + 1);
    if (line.empty() || line == "\r") continue;
    auto fields = split_csv_line(line);
    if (header) {
      header = false;
      for (std::size_t c = 0; c < std::size(kColumns); ++c) {
        if (c >= fields.size() || fields[c] != kColumns[c]) {
          throw Error(ErrorKind::InvalidArgument, "unexpected catalog CSV header");
        }
      }
      continue;
    }
    out.push_back(record_from_fields(fields));
  }
  return out;
}

void verify_record(const CatalogRecord& record) {
  const auto ring = PolyadicRing::with_arities(make_class(record.a, record.b), record.m, record.n);
  const auto numeral = make_numeral_from_values(ring, ring.from_value(record.base), record.digits);
  if (numeral.lnu != record.lnu || numeral.lmu != record.lmu) {
    throw Error(ErrorKind::InconsistentLengths, "record lengths do not match its digit count");
  }
  const RingElement value = evaluate(numeral);
  if (value.value() != record.value || value.k() != record.k || record.value != record.a + record.b * record.k) {
    throw Error(ErrorKind::InvalidArgument, "record " + join_digits(record.digits) + " does not reproduce value " +
                                                to_decimal(record.value) + " / k " + to_decimal(record.k));
  }
}

Json json_integer(const Integer& x) {
  if (auto v = to_int64(x)) return Json(*v);
  return Json(to_decimal(x));
}

Integer integer_from_json(const Json& j) {
  if (j.is_number_integer()) {
    return j.is_number_unsigned() ? Integer(static_cast<unsigned long>(j.get<std::uint64_t>()))
                                  : Integer(static_cast<long>(j.get<std::int64_t>()));
  }
  if (j.is_string()) return parse_integer(j.get<std::string>());
  throw Error(ErrorKind::InvalidArgument, "expected an integer or decimal string, got " + j.dump());
}

Json shape_to_json(const CongruenceClass& cls, const std::optional<ArityShape>& shape) {
  Json obj = Json::object();
  obj["a"] = json_integer(cls.a);
  obj["b"] = json_integer(cls.b);
  if (!shape) {
    obj["solution"] = nullptr;
    return obj;
  }
  obj["m"] = shape->m;
  obj["n"] = shape->n;
  obj["I"] = json_integer(shape->I);
  obj["J"] = json_integer(shape->J);
  return obj;
}

void export_shape_table(std::span<const ShapeRow> rows, ExportFormat format, std::ostream& sink) {
  if (format == ExportFormat::Csv) {
    sink << "a,b,m,n,I,J\n";
    for (const auto& row : rows) {
      sink << to_decimal(row.cls.a) << ',' << to_decimal(row.cls.b) << ',';
      if (row.shape) {
        sink << row.shape->m << ',' << row.shape->n << ',' << to_decimal(row.shape->I) << ','
             << to_decimal(row.shape->J);
      } else {
        sink << ",,,";
      }
      sink << '\n';
    }
  } else {
    Json array = Json::array();
    for (const auto& row : rows) array.push_back(shape_to_json(row.cls, row.shape));
    sink << array.dump() << '\n';
  }
  check_sink(sink);
}

Json scheme_to_json(const MixedBaseScheme& scheme) {
  Json bases = Json::array();
  for (const auto& p : scheme.bases) bases.push_back(json_integer(p));
  return Json{{"bases", bases}};
}

MixedBaseScheme binary_scheme_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("bases") || !j["bases"].is_array()) {
    throw Error(ErrorKind::InvalidArgument, "binary scheme needs a \"bases\" array");
  }
  std::vector<Integer> bases;
  for (const auto& p : j["bases"]) bases.push_back(integer_from_json(p));
  return make_mixed_scheme(std::move(bases));
}

Json scheme_to_json(const PolyadicMixedScheme& scheme) {
  const auto& cls = scheme.ring.congruence_class();
  Json ring{{"a", json_integer(cls.a)}, {"b", json_integer(cls.b)}, {"m", scheme.ring.m()}, {"n", scheme.ring.n()}};
  Json towers = Json::array();
  for (const auto& tower : scheme.towers) {
    Json entries = Json::array();
    for (const auto& p : tower) entries.push_back(json_integer(p.value()));
    towers.push_back(std::move(entries));
  }
  return Json{{"ring", ring}, {"towers", towers}};
}

PolyadicMixedScheme polyadic_scheme_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("ring") || !j.contains("towers") || !j["towers"].is_array()) {
    throw Error(ErrorKind::InvalidArgument, "polyadic scheme needs \"ring\" and \"towers\"");
  }
  const Json& r = j["ring"];
  for (const char* key : {"a", "b"}) {
    if (!r.contains(key)) throw Error(ErrorKind::InvalidArgument, std::string("scheme ring lacks \"") + key + "\"");
  }
  const auto cls = make_class(integer_from_json(r["a"]), integer_from_json(r["b"]));
  PolyadicRing ring = PolyadicRing::minimal(cls);
  if (r.contains("m") || r.contains("n")) {
    auto arity = [&](const char* key, std::uint64_t fallback) {
      if (!r.contains(key)) return fallback;
      auto v = to_uint64(integer_from_json(r[key]));
      if (!v) throw Error(ErrorKind::InvalidArgument, std::string("bad arity \"") + key + "\"");
      return *v;
    };
    const auto shape = solve_arity_shape(cls);
    ring = PolyadicRing::with_arities(cls, arity("m", shape ? shape->m : 2), arity("n", shape ? shape->n : 2));
  }
  std::vector<std::vector<RingElement>> towers;
  for (const auto& tower : j["towers"]) {
    if (!tower.is_array()) throw Error(ErrorKind::InvalidArgument, "each tower must be an array");
    std::vector<RingElement> entries;
    for (const auto& p : tower) entries.push_back(ring.from_value(integer_from_json(p)));
    towers.push_back(std::move(entries));
  }
  return make_polyadic_scheme(ring, std::move(towers));
}

}  // namespace polyarith
