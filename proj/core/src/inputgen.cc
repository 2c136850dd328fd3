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

#include "evmdiff/inputgen.h"

#include "evmdiff/errors.h"
#include "json.hpp"

namespace evmdiff {
namespace {

AbiValue WordValue(TypeTag type, Word w) { return AbiValue{type, std::move(w), {}}; }

Bytes Pattern(size_t n) {
  Bytes b(n);
  for (size_t i = 0; i < n; ++i) b[i] = static_cast<uint8_t>(i * 7 + 1);
  return b;
}

}  // namespace

ValuePool ValuePool::Default() {
  ValuePool p;
  p.values_[TypeTag::kUint256] = {UintValue(0), UintValue(1), UintValue(2),
                                  UintValue(Word(1) << 255), UintValue(kWordMax)};
  p.values_[TypeTag::kInt256] = {IntValue(0), IntValue(1), IntValue(-1),
                                 WordValue(TypeTag::kInt256, kInt256Min),
                                 WordValue(TypeTag::kInt256, kInt256Max)};
  p.values_[TypeTag::kBool] = {BoolValue(true), BoolValue(false)};
  p.values_[TypeTag::kAddress] = {WordValue(TypeTag::kAddress, 0),
                                  WordValue(TypeTag::kAddress, kAddressMask)};
  p.values_[TypeTag::kBytes32] = {WordValue(TypeTag::kBytes32, 0),
                                  WordValue(TypeTag::kBytes32, kWordMax)};
  p.values_[TypeTag::kBytes] = {BytesValue({}), BytesValue(Pattern(32)),
                                BytesValue(Pattern(1024))};
  return p;
}

const std::vector<AbiValue>& ValuePool::For(TypeTag type) const { return values_.at(type); }

void ValuePool::Override(TypeTag type, std::vector<AbiValue> values) {
  if (values.size() < 2) {
    throw ConfigError("value pool for " + std::string(TypeTagName(type)) +
                      " needs at least 2 entries");
  }
  for (const auto& v : values) {
    if (v.type != type || !FitsType(v)) {
      throw ConfigError("value " + v.ToString() + " does not fit " +
                        std::string(TypeTagName(type)));
    }
  }
  values_[type] = std::move(values);
}

void ValuePool::OverrideFromJson(std::string_view json_text) {
  auto j = nlohmann::json::parse(json_text, nullptr, false);
  if (j.is_discarded() || !j.is_object()) throw ConfigError("value pools must be a JSON object");
  for (const auto& [key, arr] : j.items()) {
    auto type = TypeTagFromName(key);
    if (!type) throw ConfigError("unknown type in value pools: " + key);
    if (!arr.is_array()) throw ConfigError("value pool for " + key + " must be an array");
    std::vector<AbiValue> values;
    for (const auto& item : arr) {
      std::string text = item.is_string() ? item.get<std::string>() : item.dump();
      values.push_back(ParseAbiValue(*type, text));
    }
    Override(*type, std::move(values));
  }
}

AbiValue ParseAbiValue(TypeTag type, std::string_view text) {
  auto bad = [&] {
    return ConfigError("cannot read '" + std::string(text) + "' as " +
                       std::string(TypeTagName(type)));
  };
  switch (type) {
    case TypeTag::kBool:
      if (text == "true" || text == "1") return BoolValue(true);
      if (text == "false" || text == "0") return BoolValue(false);
      throw bad();
    case TypeTag::kBytes: {
      if (text.starts_with("0x")) text.remove_prefix(2);
      auto bytes = FromHex(text);
      if (!bytes) throw bad();
      return BytesValue(*bytes);
    }
    case TypeTag::kInt256: {
      bool neg = text.starts_with("-");
      auto w = ParseWordLiteral(neg ? text.substr(1) : text);
      if (!w) throw bad();
      if (neg ? *w > kInt256Min : *w > kInt256Max) throw bad();
      return WordValue(type, neg ? Word(Word(0) - *w) : *w);
    }
    default: {
      auto w = ParseWordLiteral(text);
      if (!w) throw bad();
      AbiValue v = WordValue(type, *w);
      if (!FitsType(v)) throw bad();
      return v;
    }
  }
}

bool FitsType(const AbiValue& v) {
  switch (v.type) {
    case TypeTag::kBool: return v.word <= 1;
    case TypeTag::kAddress: return v.word <= kAddressMask;
    case TypeTag::kBytes: return v.word == 0;
    default: return v.bytes.empty();
  }
}

GeneratedInput GenParams(const AbiSignature& sig, const ValuePool& pool, Rng& rng) {
  GeneratedInput in;
  for (TypeTag t : sig.params) {
    const auto& candidates = pool.For(t);
    in.values.push_back(candidates[UniformIndex(rng, candidates.size())]);
  }
  in.calldata = EncodeCalldata(sig, in.values);
  return in;
}

GeneratedInput GenParams(const FunctionDecl& fn, const ValuePool& pool,
                         const std::map<std::string, std::string>& fixed, Rng& rng) {
  AbiSignature sig = SignatureOf(fn);
  GeneratedInput in;
  for (const auto& p : fn.params) {
    auto it = fixed.find(p.name);
    if (it != fixed.end()) {
      in.values.push_back(ParseAbiValue(p.type, it->second));
    } else {
      const auto& candidates = pool.For(p.type);
      in.values.push_back(candidates[UniformIndex(rng, candidates.size())]);
    }
  }
  in.calldata = EncodeCalldata(sig, in.values);
  return in;
}

}  // namespace evmdiff
