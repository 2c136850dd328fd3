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

#include "evmdiff/vm.h"

#include <algorithm>
#include <array>
#include <map>

#include "evmdiff/errors.h"
#include "evmdiff/opcodes.h"

namespace evmdiff {

namespace {

constexpr std::array<std::string_view, 6> kStatusNames = {
    "Success", "Revert", "OutOfGas", "StepLimitExceeded", "VmError", "BackendCrash"};

const Word kSignBit = Word(1) << 255;

bool SignedLess(const Word& a, const Word& b) { return (a ^ kSignBit) < (b ^ kSignBit); }

std::vector<bool> JumpDestinations(std::span<const uint8_t> code) {
  std::vector<bool> valid(code.size(), false);
  for (size_t pc = 0; pc < code.size(); pc += 1 + PushSize(code[pc])) {
    if (code[pc] == Op(Opcode::kJumpDest)) valid[pc] = true;
  }
  return valid;
}

class Interpreter {
 public:
  Interpreter(std::span<const uint8_t> code, std::span<const uint8_t> calldata,
              const VmConfig& cfg, std::stop_token stop)
      : code_(code), calldata_(calldata), cfg_(cfg), stop_(std::move(stop)),
        jumpdests_(JumpDestinations(code)) {
    stack_.reserve(kMaxStack);
  }

  ExecutionRecord Run() {
    ExecutionRecord rec;
    rec.status = Loop(rec);
    if (rec.status == ExecStatus::kSuccess && refund_ > 0) {
      uint64_t cap = gas_ / std::max<uint64_t>(cfg_.schedule.refund_cap_divisor, 1);
      gas_ -= std::min(refund_, cap);
    }
    rec.gas_used = gas_;
    rec.op_seq = std::move(trace_);
    return rec;
  }

 private:
  bool Fail(ExecutionRecord& rec, const char* kind) {
    rec.error = kind;
    return false;
  }

  void Record(uint8_t op) {
    if (!cfg_.guarded && trace_.size() >= cfg_.step_limit) return;
    if (cfg_.trace == TraceMode::kFused) {
      if (op == Op(Opcode::kPop) && prev_push_recorded_) {
        trace_.pop_back();
        prev_push_recorded_ = false;
        return;
      }
      prev_push_recorded_ = IsPush(op);
    }
    trace_.push_back(op);
  }

  Word Pop() {
    Word w = std::move(stack_.back());
    stack_.pop_back();
    return w;
  }

  bool EnsureMemory(const Word& offset, ExecutionRecord& rec) {
    if (offset > kMaxMemory - 32) return Fail(rec, kMemoryLimit);
    size_t end = static_cast<size_t>(offset) + 32;
    if (memory_.size() < end) memory_.resize(end, 0);
    return true;
  }

  Word LoadCalldata(const Word& offset) const {
    std::array<uint8_t, 32> buf{};
    if (offset < calldata_.size()) {
      size_t o = static_cast<size_t>(offset);
      size_t n = std::min<size_t>(32, calldata_.size() - o);
      std::copy_n(calldata_.begin() + o, n, buf.begin());
    }
    return WordFromBytes(buf);
  }

  ExecStatus Loop(ExecutionRecord& rec) {
    const GasSchedule& sched = cfg_.schedule;
    while (true) {
      if ((steps_ & 1023) == 0 && stop_.stop_requested()) {
        rec.error = "stopped by harness";
        return ExecStatus::kBackendCrash;
      }
      if (cfg_.guarded && steps_ >= cfg_.step_limit) return ExecStatus::kStepLimitExceeded;
      uint8_t op = pc_ < code_.size() ? code_[pc_] : Op(Opcode::kStop);
      if (!IsIsaOpcode(op)) {
        rec.error = kUndefinedOpcode;
        return ExecStatus::kVmError;
      }
      uint64_t cost = sched.Cost(op);
      if (cfg_.guarded && gas_ + cost > cfg_.gas_limit) return ExecStatus::kOutOfGas;
      gas_ += cost;
      ++steps_;
      Record(op);
      auto outcome = Step(op, rec);
      if (outcome) return *outcome;
    }
  }

  // Returns a terminal status, or nullopt to keep going.
  std::optional<ExecStatus> Step(uint8_t op, ExecutionRecord& rec) {
    auto need = [&](size_t in, size_t out) {
      if (stack_.size() < in) {
        rec.error = kStackUnderflow;
        return false;
      }
      if (stack_.size() - in + out > kMaxStack) {
        rec.error = kStackOverflow;
        return false;
      }
      return true;
    };
    constexpr auto kErr = ExecStatus::kVmError;

    if (IsPush(op)) {
      if (!need(0, 1)) return kErr;
      int n = PushSize(op);
      std::array<uint8_t, 32> buf{};
      for (int i = 0; i < n; ++i) {
        size_t at = pc_ + 1 + i;
        buf[32 - n + i] = at < code_.size() ? code_[at] : 0;
      }
      stack_.push_back(WordFromBytes(buf));
      pc_ += 1 + n;
      return std::nullopt;
    }
    if (op >= DupN(1) && op <= DupN(16)) {
      size_t n = op - DupN(1) + 1;
      if (!need(n, n + 1)) return kErr;
      stack_.push_back(stack_[stack_.size() - n]);
      ++pc_;
      return std::nullopt;
    }
    if (op >= SwapN(1) && op <= SwapN(16)) {
      size_t n = op - SwapN(1) + 1;
      if (!need(n + 1, n + 1)) return kErr;
      std::swap(stack_.back(), stack_[stack_.size() - 1 - n]);
      ++pc_;
      return std::nullopt;
    }

    switch (static_cast<Opcode>(op)) {
      case Opcode::kStop:
        return ExecStatus::kSuccess;
      case Opcode::kAdd:
      case Opcode::kMul:
      case Opcode::kSub:
      case Opcode::kDiv:
      case Opcode::kMod:
      case Opcode::kLt:
      case Opcode::kGt:
      case Opcode::kSlt:
      case Opcode::kSgt:
      case Opcode::kEq:
      case Opcode::kAnd:
      case Opcode::kOr:
      case Opcode::kXor: {
        if (!need(2, 1)) return kErr;
        Word a = Pop();
        Word b = Pop();
        Word r;
        switch (static_cast<Opcode>(op)) {
          case Opcode::kAdd: r = a + b; break;
          case Opcode::kMul: r = a * b; break;
          case Opcode::kSub: r = a - b; break;
          case Opcode::kDiv: r = b == 0 ? Word(0) : Word(a / b); break;
          case Opcode::kMod: r = b == 0 ? Word(0) : Word(a % b); break;
          case Opcode::kLt: r = a < b; break;
          case Opcode::kGt: r = a > b; break;
          case Opcode::kSlt: r = SignedLess(a, b); break;
          case Opcode::kSgt: r = SignedLess(b, a); break;
          case Opcode::kEq: r = a == b; break;
          case Opcode::kAnd: r = a & b; break;
          case Opcode::kOr: r = a | b; break;
          default: r = a ^ b; break;
        }
        stack_.push_back(std::move(r));
        break;
      }
      case Opcode::kIsZero:
        if (!need(1, 1)) return kErr;
        stack_.back() = stack_.back() == 0 ? Word(1) : Word(0);
        break;
      case Opcode::kNot:
        if (!need(1, 1)) return kErr;
        stack_.back() = ~stack_.back();
        break;
      case Opcode::kCallDataLoad:
        if (!need(1, 1)) return kErr;
        stack_.back() = LoadCalldata(stack_.back());
        break;
      case Opcode::kCallDataSize:
        if (!need(0, 1)) return kErr;
        stack_.push_back(Word(calldata_.size()));
        break;
      case Opcode::kPop:
        if (!need(1, 0)) return kErr;
        stack_.pop_back();
        break;
      case Opcode::kMload: {
        if (!need(1, 1)) return kErr;
        if (!EnsureMemory(stack_.back(), rec)) return kErr;
        size_t o = static_cast<size_t>(stack_.back());
        stack_.back() = WordFromBytes(std::span(memory_).subspan(o, 32));
        break;
      }
      case Opcode::kMstore: {
        if (!need(2, 0)) return kErr;
        Word offset = Pop();
        Word value = Pop();
        if (!EnsureMemory(offset, rec)) return kErr;
        auto bytes = WordToBytes(value);
        std::copy(bytes.begin(), bytes.end(), memory_.begin() + static_cast<size_t>(offset));
        break;
      }
      case Opcode::kSload: {
        if (!need(1, 1)) return kErr;
        auto it = storage_.find(stack_.back());
        stack_.back() = it == storage_.end() ? Word(0) : it->second;
        break;
      }
      case Opcode::kSstore: {
        if (!need(2, 0)) return kErr;
        Word key = Pop();
        Word value = Pop();
        Word& slot = storage_[key];
        if (slot != 0 && value == 0) {
          int64_t r = cfg_.schedule.Refund(op, RefundCondition::kStorageCleared);
          if (r > 0) refund_ += static_cast<uint64_t>(r);
        }
        slot = value;
        break;
      }
      case Opcode::kJump:
      case Opcode::kJumpi: {
        bool conditional = op == Op(Opcode::kJumpi);
        if (!need(conditional ? 2 : 1, 0)) return kErr;
        Word dest = Pop();
        bool take = true;
        if (conditional) take = Pop() != 0;
        if (take) {
          if (dest >= code_.size() || !jumpdests_[static_cast<size_t>(dest)]) {
            rec.error = kBadJumpDestination;
            return kErr;
          }
          pc_ = static_cast<size_t>(dest);
          return std::nullopt;
        }
        break;
      }
      case Opcode::kJumpDest:
        break;
      case Opcode::kCall:
        // Message calls are stubbed: arguments are consumed and the call
        // reports success without touching any other state.
        if (!need(7, 1)) return kErr;
        stack_.resize(stack_.size() - 7);
        stack_.push_back(Word(1));
        break;
      case Opcode::kReturn:
      case Opcode::kRevert: {
        if (!need(2, 0)) return kErr;
        Word offset = Pop();
        Word size = Pop();
        if (size > 0) {
          if (offset + size > kMaxMemory || size > kMaxMemory) {
            rec.error = kMemoryLimit;
            return kErr;
          }
          size_t o = static_cast<size_t>(offset);
          size_t n = static_cast<size_t>(size);
          if (memory_.size() < o + n) memory_.resize(o + n, 0);
          rec.output.assign(memory_.begin() + o, memory_.begin() + o + n);
        }
        return op == Op(Opcode::kReturn) ? ExecStatus::kSuccess : ExecStatus::kRevert;
      }
      case Opcode::kInvalid:
        rec.error = kInvalidOpcode;
        return kErr;
      default:
        rec.error = kUndefinedOpcode;
        return kErr;
    }
    ++pc_;
    return std::nullopt;
  }

  std::span<const uint8_t> code_;
  std::span<const uint8_t> calldata_;
  const VmConfig& cfg_;
  std::stop_token stop_;
  std::vector<bool> jumpdests_;

  std::vector<Word> stack_;
  Bytes memory_;
  std::map<Word, Word> storage_;
  std::vector<uint8_t> trace_;
  size_t pc_ = 0;
  uint64_t steps_ = 0;
  uint64_t gas_ = 0;
  uint64_t refund_ = 0;
  bool prev_push_recorded_ = false;
};

}  // namespace

std::string_view ExecStatusName(ExecStatus s) { return kStatusNames[static_cast<size_t>(s)]; }

ExecStatus ExecStatusFromName(std::string_view name) {
  for (size_t i = 0; i < kStatusNames.size(); ++i) {
    if (kStatusNames[i] == name) return static_cast<ExecStatus>(i);
  }
  throw Error("unknown execution status '" + std::string(name) + "'");
}

ExecutionRecord Execute(std::span<const uint8_t> code, std::span<const uint8_t> calldata,
                        const VmConfig& cfg, std::stop_token stop) {
  auto start = std::chrono::steady_clock::now();
  ExecutionRecord rec = Interpreter(code, calldata, cfg, std::move(stop)).Run();
  rec.wall_time = std::chrono::steady_clock::now() - start;
  return rec;
}

uint64_t TraceCost(std::span<const uint8_t> op_seq, const GasSchedule& schedule) {
  uint64_t total = 0;
  for (uint8_t op : op_seq) total += schedule.Cost(op);
  return total;
}

std::vector<std::string> OpSeqNames(std::span<const uint8_t> op_seq) {
  std::vector<std::string> names;
  names.reserve(op_seq.size());
  for (uint8_t op : op_seq) names.push_back(OpcodeName(op));
  return names;
}

}  // namespace evmdiff
