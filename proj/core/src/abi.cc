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

#include "evmdiff/abi.h"

#include <openssl/sha.h>

#include "evmdiff/errors.h"

namespace evmdiff {

Selector SelectorOf(std::string_view canonical_signature) {
  unsigned char digest[SHA256_DIGEST_LENGTH];
  SHA256(reinterpret_cast<const unsigned char*>(canonical_signature.data()),
         canonical_signature.size(), digest);
  return Selector{digest[0], digest[1], digest[2], digest[3]};
}

std::string AbiSignature::Canonical() const {
  std::string s = name + "(";
  for (size_t i = 0; i < params.size(); ++i) {
    if (i) s += ",";
    s += TypeTagName(params[i]);
  }
  return s + ")";
}

AbiSignature SignatureOf(const FunctionDecl& fn) {
  AbiSignature sig{fn.name, {}};
  for (const auto& p : fn.params) sig.params.push_back(p.type);
  return sig;
}

std::string AbiValue::ToString() const {
  switch (type) {
    case TypeTag::kBool: return word != 0 ? "true" : "false";
    case TypeTag::kInt256:
      return IsNegative(word) ? "-" + ToDecimal(Word(0) - word) : ToDecimal(word);
    case TypeTag::kUint256: return ToDecimal(word);
    case TypeTag::kBytes: return "0x" + ToHex(bytes);
    default: return ToHexWord(word);
  }
}

AbiValue UintValue(Word w) { return AbiValue{TypeTag::kUint256, std::move(w), {}}; }

AbiValue IntValue(int64_t v) {
  Word w = v < 0 ? Word(0) - Word(static_cast<uint64_t>(-(v + 1)) + 1) : Word(v);
  return AbiValue{TypeTag::kInt256, w, {}};
}

AbiValue BoolValue(bool b) { return AbiValue{TypeTag::kBool, Word(b ? 1 : 0), {}}; }

AbiValue BytesValue(Bytes b) { return AbiValue{TypeTag::kBytes, Word(0), std::move(b)}; }

namespace {

void AppendWord(Bytes& out, const Word& w) {
  auto b = WordToBytes(w);
  out.insert(out.end(), b.begin(), b.end());
}

}  // namespace

Bytes EncodeCalldata(const AbiSignature& sig, std::span<const AbiValue> values) {
  if (values.size() != sig.params.size()) {
    throw Error("argument count mismatch for " + sig.Canonical());
  }
  Selector sel = sig.selector();
  Bytes out(sel.begin(), sel.end());
  Bytes tail;
  size_t head_size = 32 * values.size();
  for (const auto& v : values) {
    if (v.type == TypeTag::kBytes) {
      AppendWord(out, Word(head_size + tail.size()));
      AppendWord(tail, Word(v.bytes.size()));
      tail.insert(tail.end(), v.bytes.begin(), v.bytes.end());
      tail.resize(tail.size() + (32 - v.bytes.size() % 32) % 32, 0);
    } else {
      AppendWord(out, v.word);
    }
  }
  out.insert(out.end(), tail.begin(), tail.end());
  return out;
}

std::vector<AbiValue> DecodeCalldata(const AbiSignature& sig, std::span<const uint8_t> calldata) {
  if (calldata.size() < 4) throw Error("calldata shorter than a selector");
  Selector sel = sig.selector();
  if (!std::equal(sel.begin(), sel.end(), calldata.begin())) {
    throw Error("selector mismatch for " + sig.Canonical());
  }
  auto args = calldata.subspan(4);
  auto word_at = [&](size_t offset) -> Word {
    if (offset + 32 > args.size()) throw Error("calldata truncated");
    return WordFromBytes(args.subspan(offset, 32));
  };
  std::vector<AbiValue> out;
  for (size_t i = 0; i < sig.params.size(); ++i) {
    Word head = word_at(32 * i);
    if (sig.params[i] != TypeTag::kBytes) {
      out.push_back(AbiValue{sig.params[i], head, {}});
      continue;
    }
    if (head > Word(args.size())) throw Error("bytes offset out of range");
    size_t offset = head.convert_to<size_t>();
    Word len_word = word_at(offset);
    if (len_word > Word(args.size())) throw Error("bytes length out of range");
    size_t len = len_word.convert_to<size_t>();
    if (offset + 32 + len > args.size()) throw Error("calldata truncated");
    auto data = args.subspan(offset + 32, len);
    out.push_back(BytesValue(Bytes(data.begin(), data.end())));
  }
  return out;
}

}  // namespace evmdiff
