#include "discarr_tools/io.hpp"

#include <cstdint>
#include <fstream>
#include <sstream>

#include "discarr/gallery.hpp"

namespace discarr::tools {

namespace {

const json& member(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw ParseError(0, std::string("missing field '") + key + "'");
  return j.at(key);
}

long integer_member(const json& j, const char* key) {
  const json& v = member(j, key);
  if (!v.is_number_integer()) throw ParseError(0, std::string("field '") + key + "' must be an integer");
  return v.get<long>();
}

}  // namespace

json field_to_json(const FieldDescriptor& fd) {
  switch (fd.kind()) {
    case FieldKind::kRational: return {{"kind", "rational"}};
    case FieldKind::kQuadratic: return {{"kind", "quadratic"}, {"d", fd.quadratic_d()}};
    case FieldKind::kPrime: return {{"kind", "prime"}, {"p", fd.characteristic()}};
    case FieldKind::kGalois: return {{"kind", "galois"}, {"p", fd.characteristic()}, {"modulus", fd.galois_modulus()}};
    case FieldKind::kCyclotomic: return {{"kind", "cyclotomic"}, {"m", fd.cyclotomic_m()}};
  }
  throw Error(ErrorCode::kInvalidField, "unknown field kind");
}

FieldDescriptor field_from_json(const json& j) {
  const json& kind = member(j, "kind");
  if (!kind.is_string()) throw ParseError(0, "field kind must be a string");
  const std::string k = kind.get<std::string>();
  if (k == "rational") return FieldDescriptor::rational();
  if (k == "quadratic") return FieldDescriptor::quadratic(integer_member(j, "d"));
  if (k == "prime") return FieldDescriptor::prime(integer_member(j, "p"));
  if (k == "cyclotomic") return FieldDescriptor::cyclotomic(static_cast<int>(integer_member(j, "m")));
  if (k == "galois") {
    const json& m = member(j, "modulus");
    if (!m.is_array()) throw ParseError(0, "galois modulus must be an array");
    std::vector<long> mod;
    for (const auto& c : m) {
      if (!c.is_number_integer()) throw ParseError(0, "galois modulus entries must be integers");
      mod.push_back(c.get<long>());
    }
    return FieldDescriptor::galois(integer_member(j, "p"), std::move(mod));
  }
  throw ParseError(0, "unknown field kind '" + k + "'");
}

json arrangement_to_json(const Arrangement& a) {
  json normals = json::array();
  for (const auto& v : a.normals()) {
    json row = json::array();
    for (const auto& x : v) row.push_back(format_element(x));
    normals.push_back(std::move(row));
  }
  return {{"field", field_to_json(a.field())}, {"k", a.k()}, {"normals", std::move(normals)}};
}

Arrangement arrangement_from_json(const json& j) {
  const FieldDescriptor fd = field_from_json(member(j, "field"));
  const long k = integer_member(j, "k");
  if (k < 1) throw ParseError(0, "k must be positive");
  const json& rows = member(j, "normals");
  if (!rows.is_array()) throw ParseError(0, "normals must be an array");
  std::vector<Vector> normals;
  for (const auto& row : rows) {
    if (!row.is_array() || row.size() != static_cast<std::size_t>(k))
      throw ParseError(0, "normal " + std::to_string(normals.size() + 1) + " must have " + std::to_string(k) + " entries");
    Vector v;
    for (const auto& e : row) {
      if (e.is_string())
        v.push_back(parse_element(e.get<std::string>(), fd));
      else if (e.is_number_integer())
        v.push_back(FieldElement::from_integer(fd, e.get<long>()));
      else
        throw ParseError(0, "normal entries must be strings or integers");
    }
    normals.push_back(std::move(v));
  }
  if (normals.size() <= static_cast<std::size_t>(k)) throw ParseError(0, "need more normals than k");
  return Arrangement(fd, static_cast<std::size_t>(k), std::move(normals));
}

Arrangement parse_arrangement(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(e.byte, "malformed JSON");
  }
  return arrangement_from_json(j);
}

Arrangement load_arrangement(const std::string& source) {
  if (source.rfind("gallery:", 0) == 0) return gallery_item(source.substr(8));
  std::ifstream in(source);
  if (!in) throw Error(ErrorCode::kInvalidArgument, "cannot open '" + source + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_arrangement(ss.str());
}

std::string digest(const Arrangement& a) {
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char c : arrangement_to_json(a).dump()) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  std::ostringstream ss;
  ss << std::hex;
  ss.width(16);
  ss.fill('0');
  ss << h;
  return "fnv1a64:" + ss.str();
}

}  // namespace discarr::tools
