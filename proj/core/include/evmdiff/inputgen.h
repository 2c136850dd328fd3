// Copyright 2026 The evmdiff Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef EVMDIFF_INPUTGEN_H_
#define EVMDIFF_INPUTGEN_H_

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "evmdiff/abi.h"
#include "evmdiff/ast.h"
#include "evmdiff/rng.h"

namespace evmdiff {

// Candidate values per parameter type. Draws are uniform over a type's list.
class ValuePool {
 public:
  // Conventional boundary values for every type.
  static ValuePool Default();

  const std::vector<AbiValue>& For(TypeTag type) const;

  // Replaces one type's candidates. Throws ConfigError if fewer than two
  // values are given or a value does not match the type.
  void Override(TypeTag type, std::vector<AbiValue> values);

  // Overlays {"uint256": ["0", "7"], "bytes": ["0x", "0xabcd"], ...}.
  void OverrideFromJson(std::string_view json_text);

 private:
  std::map<TypeTag, std::vector<AbiValue>> values_;
};

// Parses the textual form used in config files: decimal or 0x-hex words,
// "-N" for int256, true/false for bool, hex strings for bytes.
AbiValue ParseAbiValue(TypeTag type, std::string_view text);

bool FitsType(const AbiValue& v);

struct GeneratedInput {
  std::vector<AbiValue> values;
  Bytes calldata;
};

GeneratedInput GenParams(const AbiSignature& sig, const ValuePool& pool, Rng& rng);

// Same as GenParams but with some parameters pinned by name.
GeneratedInput GenParams(const FunctionDecl& fn, const ValuePool& pool,
                         const std::map<std::string, std::string>& fixed, Rng& rng);

}  // namespace evmdiff

#endif  // EVMDIFF_INPUTGEN_H_
