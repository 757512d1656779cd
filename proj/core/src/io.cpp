// Copyright 2026 The subrec Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "subrec/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "subrec/error.hpp"

namespace subrec::io {
namespace {

using nlohmann::json;

json encode(const ComplexMatrix& m) {
  json rows = json::array();
  for (Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Index j = 0; j < m.cols(); ++j) row.push_back({m(i, j).real(), m(i, j).imag()});
    rows.push_back(std::move(row));
  }
  return rows;
}

[[noreturn]] void fail(const std::string& what) { throw Error(ErrorCode::kParseError, what); }

Complex decode_entry(const json& e) {
  if (!e.is_array() || e.size() != 2 || !e[0].is_number() || !e[1].is_number()) {
    fail("matrix entry must be a [re, im] pair of numbers");
  }
  return {e[0].get<double>(), e[1].get<double>()};
}

ComplexMatrix decode(const json& rows, Index expect_rows = -1, Index expect_cols = -1) {
  if (!rows.is_array() || rows.empty()) fail("matrix must be a non-empty list of rows");
  const auto r = static_cast<Index>(rows.size());
  if (!rows[0].is_array() || rows[0].empty()) fail("matrix rows must be non-empty lists");
  const auto c = static_cast<Index>(rows[0].size());
  if ((expect_rows >= 0 && r != expect_rows) || (expect_cols >= 0 && c != expect_cols)) {
    fail("matrix is " + std::to_string(r) + "x" + std::to_string(c) + ", expected " +
         std::to_string(expect_rows) + "x" + std::to_string(expect_cols));
  }
  ComplexMatrix m(r, c);
  for (Index i = 0; i < r; ++i) {
    const json& row = rows[static_cast<std::size_t>(i)];
    if (!row.is_array() || static_cast<Index>(row.size()) != c) fail("ragged matrix rows");
    for (Index j = 0; j < c; ++j) m(i, j) = decode_entry(row[static_cast<std::size_t>(j)]);
  }
  return m;
}

json parse(std::string_view text) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    fail(std::string("invalid JSON: ") + e.what());
  }
}

Index positive_int(const json& doc, const char* key) {
  if (!doc.is_object() || !doc.contains(key)) fail(std::string("missing field \"") + key + "\"");
  const json& v = doc.at(key);
  if (!v.is_number_integer() || v.get<long long>() < 1) {
    fail(std::string("field \"") + key + "\" must be a positive integer");
  }
  return static_cast<Index>(v.get<long long>());
}

}  // namespace

std::string matrix_to_json(const ComplexMatrix& m) { return encode(m).dump(2); }

ComplexMatrix matrix_from_json(std::string_view text) { return decode(parse(text)); }

std::string channel_to_json(const KrausChannel& ch) {
  json doc;
  doc["dim"] = ch.dim();
  json kraus = json::array();
  for (const auto& k : ch.kraus()) kraus.push_back(encode(k));
  doc["kraus"] = std::move(kraus);
  return doc.dump(2);
}

KrausChannel channel_from_json(std::string_view text, double tol, bool check_tp) {
  const json doc = parse(text);
  const Index d = positive_int(doc, "dim");
  if (!doc.contains("kraus") || !doc["kraus"].is_array() || doc["kraus"].empty()) {
    fail("\"kraus\" must be a non-empty list of matrices");
  }
  std::vector<ComplexMatrix> kraus;
  for (const auto& k : doc["kraus"]) kraus.push_back(decode(k, d, d));
  return KrausChannel::from_kraus(std::move(kraus), tol, check_tp);
}

std::string subsystem_to_json(const SubsystemDecomposition& dec) {
  json doc;
  doc["dim"] = dec.dim();
  doc["dA"] = dec.d_a();
  doc["dB"] = dec.d_b();
  // Columns of W, each a list of d entries.
  const ComplexMatrix wt = dec.isometry().transpose();
  json cols = json::array();
  for (Index j = 0; j < wt.rows(); ++j) {
    json col = json::array();
    for (Index i = 0; i < wt.cols(); ++i) col.push_back({wt(j, i).real(), wt(j, i).imag()});
    cols.push_back(std::move(col));
  }
  doc["W"] = std::move(cols);
  return doc.dump(2);
}

SubsystemDecomposition subsystem_from_json(std::string_view text, double tol) {
  const json doc = parse(text);
  const Index d = positive_int(doc, "dim");
  const Index da = positive_int(doc, "dA");
  const Index db = positive_int(doc, "dB");
  if (!doc.contains("W")) fail("missing field \"W\"");
  const ComplexMatrix columns = decode(doc["W"], da * db, d);
  return SubsystemDecomposition::from_isometry(columns.transpose(), da, db, tol);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) fail("cannot write " + path);
  out << text;
  if (text.empty() || text.back() != '\n') out << '\n';
}

}  // namespace subrec::io
