// Copyright 2026 The cohdist Authors
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

#include "cohdist/serialize.hpp"

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace cohdist::cli {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error(ErrorCode::IoError, "cannot open '" + path + "' for reading");
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (!in.good() && !in.eof()) {
    throw Error(ErrorCode::IoError, "failed while reading '" + path + "'");
  }
  return buffer.str();
}

void write_file(const std::string& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) {
    throw Error(ErrorCode::IoError, "cannot open '" + path + "' for writing");
  }
  out << contents;
  if (!out.good()) {
    throw Error(ErrorCode::IoError, "failed while writing '" + path + "'");
  }
}

std::string fnv1a_digest(const std::string& bytes) {
  std::uint64_t hash = 1469598103934665603ULL;
  for (unsigned char c : bytes) {
    hash ^= c;
    hash *= 1099511628211ULL;
  }
  char buffer[24];
  std::snprintf(buffer, sizeof(buffer), "fnv1a:%016llx",
                static_cast<unsigned long long>(hash));
  return buffer;
}

Json parse_json(const std::string& bytes, const std::string& what) {
  Json parsed = Json::parse(bytes, nullptr, false);
  if (parsed.is_discarded()) {
    throw Error(ErrorCode::ParseError, what + ": malformed JSON");
  }
  return parsed;
}

Json complex_to_json(const Complex& z) { return Json::array({z.real(), z.imag()}); }

Json matrix_to_json(const ComplexMatrix& m) {
  Json rows = Json::array();
  for (Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Index j = 0; j < m.cols(); ++j) row.push_back(complex_to_json(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Json vector_to_json(const ComplexVector& v) {
  Json entries = Json::array();
  for (Index i = 0; i < v.rows(); ++i) entries.push_back(complex_to_json(v(i)));
  return entries;
}

namespace {

Complex complex_from_json(const Json& j, const std::string& what) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
    throw Error(ErrorCode::ParseError, what + ": complex entries must be [re, im] numbers");
  }
  return Complex(j[0].get<double>(), j[1].get<double>());
}

}  // namespace

ComplexMatrix matrix_from_json(const Json& j, const std::string& what) {
  if (!j.is_array() || j.empty()) {
    throw Error(ErrorCode::ParseError, what + ": matrix must be a non-empty array of rows");
  }
  const std::size_t rows = j.size();
  if (!j[0].is_array() || j[0].empty()) {
    throw Error(ErrorCode::ParseError, what + ": matrix rows must be non-empty arrays");
  }
  const std::size_t cols = j[0].size();
  ComplexMatrix m(static_cast<Index>(rows), static_cast<Index>(cols));
  for (std::size_t i = 0; i < rows; ++i) {
    if (!j[i].is_array() || j[i].size() != cols) {
      throw Error(ErrorCode::ParseError, what + ": row " + std::to_string(i + 1) +
                                             " does not have " + std::to_string(cols) +
                                             " entries");
    }
    for (std::size_t c = 0; c < cols; ++c) {
      m(static_cast<Index>(i), static_cast<Index>(c)) = complex_from_json(j[i][c], what);
    }
  }
  return m;
}

ComplexVector vector_from_json(const Json& j, const std::string& what) {
  if (!j.is_array() || j.empty()) {
    throw Error(ErrorCode::ParseError, what + ": vector must be a non-empty array");
  }
  ComplexVector v(static_cast<Index>(j.size()));
  for (std::size_t i = 0; i < j.size(); ++i) {
    v(static_cast<Index>(i)) = complex_from_json(j[i], what);
  }
  return v;
}

ComplexMatrix state_matrix_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("dim") || !j.contains("matrix")) {
    throw Error(ErrorCode::ParseError, "state file: expected object with 'dim' and 'matrix'");
  }
  if (!j["dim"].is_number_integer() || j["dim"].get<Index>() < 1) {
    throw Error(ErrorCode::ParseError, "state file: 'dim' must be a positive integer");
  }
  const Index dim = j["dim"].get<Index>();
  const ComplexMatrix m = matrix_from_json(j["matrix"], "state file");
  if (m.rows() != dim || m.cols() != dim) {
    throw Error(ErrorCode::ParseError,
                "state file: 'matrix' is " + std::to_string(m.rows()) + "x" +
                    std::to_string(m.cols()) + " but 'dim' is " + std::to_string(dim));
  }
  return m;
}

Json state_to_json(const ComplexMatrix& m) {
  Json j;
  j["dim"] = m.rows();
  j["matrix"] = matrix_to_json(m);
  return j;
}

std::vector<ComplexMatrix> kraus_list_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("kraus") || !j["kraus"].is_array() || j["kraus"].empty()) {
    throw Error(ErrorCode::ParseError,
                "channel file: expected object with a non-empty 'kraus' array");
  }
  std::vector<ComplexMatrix> elements;
  elements.reserve(j["kraus"].size());
  for (std::size_t k = 0; k < j["kraus"].size(); ++k) {
    elements.push_back(
        matrix_from_json(j["kraus"][k], "channel file: element " + std::to_string(k + 1)));
  }
  return elements;
}

Json channel_to_json(const std::vector<KrausOperator>& elements) {
  Json list = Json::array();
  for (const KrausOperator& k : elements) list.push_back(matrix_to_json(k.mat()));
  Json j;
  j["kraus"] = std::move(list);
  return j;
}

std::vector<ComplexVector> states_list_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("dim") || !j.contains("states") ||
      !j["states"].is_array() || j["states"].empty()) {
    throw Error(ErrorCode::ParseError,
                "states file: expected object with 'dim' and a non-empty 'states' array");
  }
  if (!j["dim"].is_number_integer() || j["dim"].get<Index>() < 1) {
    throw Error(ErrorCode::ParseError, "states file: 'dim' must be a positive integer");
  }
  const Index dim = j["dim"].get<Index>();
  std::vector<ComplexVector> states;
  states.reserve(j["states"].size());
  for (std::size_t k = 0; k < j["states"].size(); ++k) {
    ComplexVector v =
        vector_from_json(j["states"][k], "states file: state " + std::to_string(k + 1));
    if (v.rows() != dim) {
      throw Error(ErrorCode::ParseError, "states file: state " + std::to_string(k + 1) +
                                             " has " + std::to_string(v.rows()) +
                                             " amplitudes but 'dim' is " +
                                             std::to_string(dim));
    }
    states.push_back(std::move(v));
  }
  return states;
}

Json states_to_json(const std::vector<ComplexVector>& states) {
  Json list = Json::array();
  for (const ComplexVector& v : states) list.push_back(vector_to_json(v));
  Json j;
  j["dim"] = states.empty() ? 0 : states.front().rows();
  j["states"] = std::move(list);
  return j;
}

}  // namespace cohdist::cli
