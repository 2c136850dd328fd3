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

#ifndef EVMDIFF_ABI_H_
#define EVMDIFF_ABI_H_

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "evmdiff/ast.h"
#include "evmdiff/word.h"

namespace evmdiff {

using Selector = std::array<uint8_t, 4>;

// First four bytes of SHA-256 over the canonical signature text. Only needs
// to agree between the compiler's dispatcher and the input generator.
Selector SelectorOf(std::string_view canonical_signature);

struct AbiSignature {
  std::string name;
  std::vector<TypeTag> params;

  std::string Canonical() const;  // e.g. "f(uint256,bool)"
  Selector selector() const { return SelectorOf(Canonical()); }
  bool operator==(const AbiSignature&) const = default;
};

AbiSignature SignatureOf(const FunctionDecl& fn);

// A typed argument. `word` holds the 256-bit encoding (two's complement for
// int256, 0/1 for bool); `bytes` is used only for the dynamic bytes type.
struct AbiValue {
  TypeTag type;
  Word word;
  Bytes bytes;

  std::string ToString() const;
  bool operator==(const AbiValue&) const = default;
};

AbiValue UintValue(Word w);
AbiValue IntValue(int64_t v);
AbiValue BoolValue(bool b);
AbiValue BytesValue(Bytes b);

// selector ++ one 32-byte head slot per argument; dynamic bytes put their
// tail offset in the head and (length, zero-padded data) in the tail.
Bytes EncodeCalldata(const AbiSignature& sig, std::span<const AbiValue> values);

// Inverse of EncodeCalldata. Throws Error on a selector mismatch or
// truncated input.
std::vector<AbiValue> DecodeCalldata(const AbiSignature& sig, std::span<const uint8_t> calldata);

}  // namespace evmdiff

#endif  // EVMDIFF_ABI_H_
