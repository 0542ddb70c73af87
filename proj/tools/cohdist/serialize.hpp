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

#ifndef COHDIST_CLI_SERIALIZE_HPP_
#define COHDIST_CLI_SERIALIZE_HPP_

#include <string>
#include <vector>

#include <json.hpp>

#include "cohdist/channels.hpp"
#include "cohdist/types.hpp"

namespace cohdist::cli {

using Json = nlohmann::json;

// ---------------------------------------------------------------------------
// Files. All file I/O errors surface as Error{IoError}; malformed content as
// Error{ParseError} with the offending path in the message.
// ---------------------------------------------------------------------------

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& contents);

/// 64-bit FNV-1a digest of raw file bytes, formatted "fnv1a:<16 hex digits>".
/// Reports embed this so a result can be tied to its exact input bytes.
std::string fnv1a_digest(const std::string& bytes);

Json parse_json(const std::string& bytes, const std::string& what);

// ---------------------------------------------------------------------------
// Matrix encoding: a complex number is [re, im]; a matrix is a row-major
// array of rows of such pairs; a vector is a flat array of pairs.
// ---------------------------------------------------------------------------

Json complex_to_json(const Complex& z);
Json matrix_to_json(const ComplexMatrix& m);
Json vector_to_json(const ComplexVector& v);
ComplexMatrix matrix_from_json(const Json& j, const std::string& what);
ComplexVector vector_from_json(const Json& j, const std::string& what);

// ---------------------------------------------------------------------------
// File formats (schemas under docs/schemas/):
//   state file:   {"dim": d, "matrix": <d x d matrix>}
//   channel file: {"kraus": [<matrix>, ...]}
//   states file:  {"dim": d, "states": [<d vector>, ...]}
// ---------------------------------------------------------------------------

ComplexMatrix state_matrix_from_json(const Json& j);
Json state_to_json(const ComplexMatrix& m);

std::vector<ComplexMatrix> kraus_list_from_json(const Json& j);
Json channel_to_json(const std::vector<KrausOperator>& elements);

std::vector<ComplexVector> states_list_from_json(const Json& j);
Json states_to_json(const std::vector<ComplexVector>& states);

}  // namespace cohdist::cli

#endif  // COHDIST_CLI_SERIALIZE_HPP_
