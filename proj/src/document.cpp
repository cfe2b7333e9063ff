#include "ordproj/document.hpp"

#include <cmath>
#include <fstream>

#include "ordproj/error.hpp"

namespace ordproj {

namespace {

[[noreturn]] void parse_fail(const std::string& what) { throw Error(ErrorKind::ParseError, what); }

std::size_t as_size(const json& j, const char* what) {
  if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<long long>() >= 0))
    parse_fail(std::string(what) + " must be a nonnegative integer");
  return j.get<std::size_t>();
}

double as_double(const json& j) {
  if (!j.is_number()) parse_fail("entries must be numbers");
  const double x = j.get<double>();
  if (!std::isfinite(x)) parse_fail("entries must be finite");
  return x;
}

}  // namespace

json element_to_document(const Element& v) {
  json doc;
  doc["model"] = v.model().block_dims();
  doc["shape"] = {v.rows(), v.cols()};
  json blocks = json::array();
  for (const auto& b : v.blocks()) {
    json entries = json::array();
    for (const cplx& z : b.data()) entries.push_back({z.real(), z.imag()});
    blocks.push_back(std::move(entries));
  }
  doc["blocks"] = std::move(blocks);
  return doc;
}

Element element_from_document(const json& doc, const TolerancePolicy& tol) {
  if (!doc.is_object()) parse_fail("document must be an object");
  for (const char* key : {"model", "shape", "blocks"})
    if (!doc.contains(key)) parse_fail(std::string("missing field \"") + key + "\"");
  const json& jm = doc["model"];
  const json& js = doc["shape"];
  const json& jb = doc["blocks"];
  if (!jm.is_array() || jm.empty()) parse_fail("model must be a nonempty array");
  if (!js.is_array() || js.size() != 2) parse_fail("shape must be [m, n]");
  if (!jb.is_array()) parse_fail("blocks must be an array");

  std::vector<std::size_t> dims;
  for (const auto& d : jm) dims.push_back(as_size(d, "block dimension"));
  const std::size_t m = as_size(js[0], "m");
  const std::size_t n = as_size(js[1], "n");
  for (std::size_t d : dims)
    if (d == 0) throw Error(ErrorKind::ShapeError, "block dimensions must be positive");
  if (m == 0 || n == 0) throw Error(ErrorKind::ShapeError, "shape must be positive");
  if (jb.size() != dims.size())
    throw Error(ErrorKind::ShapeError, "expected " + std::to_string(dims.size()) + " blocks");

  std::vector<CMat> blocks;
  for (std::size_t j = 0; j < dims.size(); ++j) {
    const json& entries = jb[j];
    if (!entries.is_array()) parse_fail("each block must be an array of [re, im] pairs");
    CMat b(m * dims[j], n * dims[j]);
    if (entries.size() != b.size())
      throw Error(ErrorKind::ShapeError, "block " + std::to_string(j) + " needs " + std::to_string(b.size()) +
                                             " entries, got " + std::to_string(entries.size()));
    auto data = b.data();
    for (std::size_t i = 0; i < data.size(); ++i) {
      const json& z = entries[i];
      if (!z.is_array() || z.size() != 2) parse_fail("entries must be [re, im] pairs");
      data[i] = cplx(as_double(z[0]), as_double(z[1]));
    }
    blocks.push_back(std::move(b));
  }
  return Element(Model(std::move(dims), tol), m, n, std::move(blocks));
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) parse_fail("cannot read " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    parse_fail(path + ": " + e.what());
  }
}

void write_json_file(const std::string& path, const json& doc) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorKind::ParseError, "cannot write " + path);
  out << doc.dump(2) << '\n';
}

}  // namespace ordproj
