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

#include "evmdiff/protocol.h"

#include <fcntl.h>
#include <poll.h>
#include <signal.h>
#include <spawn.h>
#include <sys/wait.h>
#include <unistd.h>

#include <cerrno>
#include <cstring>
#include <mutex>

#include "evmdiff/errors.h"
#include "evmdiff/opcodes.h"
#include "json.hpp"

extern char** environ;

namespace evmdiff {
namespace {

using nlohmann::json;

Bytes HexField(const json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_string()) {
    throw ProtocolError(std::string("missing string field '") + key + "'");
  }
  auto bytes = FromHex(j[key].get<std::string>());
  if (!bytes) throw ProtocolError(std::string("invalid hex in '") + key + "'");
  return *bytes;
}

uint64_t UintField(const json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_number_unsigned()) {
    throw ProtocolError(std::string("missing unsigned field '") + key + "'");
  }
  return j[key].get<uint64_t>();
}

json ParseLine(std::string_view line) {
  json j = json::parse(line, nullptr, false);
  if (j.is_discarded() || !j.is_object()) throw ProtocolError("response is not a JSON object");
  return j;
}

// A child that exits before reading its stdin must not take the harness
// down with SIGPIPE.
void IgnoreSigpipe() {
  static std::once_flag once;
  std::call_once(once, [] { ::signal(SIGPIPE, SIG_IGN); });
}

class Pipe {
 public:
  Pipe() {
    if (::pipe2(fds_, O_CLOEXEC) != 0) throw ProtocolError(std::strerror(errno));
  }
  ~Pipe() {
    CloseRead();
    CloseWrite();
  }
  int read_end() const { return fds_[0]; }
  int write_end() const { return fds_[1]; }
  void CloseRead() { Close(fds_[0]); }
  void CloseWrite() { Close(fds_[1]); }

 private:
  static void Close(int& fd) {
    if (fd >= 0) ::close(fd);
    fd = -1;
  }
  int fds_[2] = {-1, -1};
};

ExecutionRecord Killed(const char* why) {
  ExecutionRecord rec;
  rec.status = ExecStatus::kBackendCrash;
  rec.error = why;
  return rec;
}

}  // namespace

std::string EncodeRequest(const ProtocolRequest& req) {
  json j = {{"version", req.version},
            {"bytecode", ToHex(req.bytecode)},
            {"calldata", ToHex(req.calldata)},
            {"gas_limit", req.gas_limit},
            {"step_limit", req.step_limit}};
  return j.dump() + "\n";
}

ProtocolRequest DecodeRequest(std::string_view line) {
  json j = ParseLine(line);
  ProtocolRequest req;
  req.version = static_cast<int>(UintField(j, "version"));
  req.bytecode = HexField(j, "bytecode");
  req.calldata = HexField(j, "calldata");
  req.gas_limit = UintField(j, "gas_limit");
  req.step_limit = UintField(j, "step_limit");
  return req;
}

std::string EncodeResponse(const ExecutionRecord& rec) {
  json j = {{"status", ExecStatusName(rec.status)},
            {"output", ToHex(rec.output)},
            {"gas_used", rec.gas_used},
            {"op_seq", OpSeqNames(rec.op_seq)}};
  if (!rec.error.empty()) j["error"] = rec.error;
  return j.dump() + "\n";
}

ExecutionRecord DecodeResponse(std::string_view line) {
  json j = ParseLine(line);
  ExecutionRecord rec;
  if (!j.contains("status") || !j["status"].is_string()) {
    throw ProtocolError("missing string field 'status'");
  }
  try {
    rec.status = ExecStatusFromName(j["status"].get<std::string>());
  } catch (const Error& e) {
    throw ProtocolError(e.what());
  }
  rec.output = HexField(j, "output");
  rec.gas_used = UintField(j, "gas_used");
  if (!j.contains("op_seq") || !j["op_seq"].is_array()) {
    throw ProtocolError("missing array field 'op_seq'");
  }
  for (const auto& op : j["op_seq"]) {
    std::optional<uint8_t> code;
    if (op.is_string()) code = OpcodeFromName(op.get<std::string>());
    if (!code) throw ProtocolError("op_seq holds an unknown opcode name");
    rec.op_seq.push_back(*code);
  }
  if (j.contains("error") && j["error"].is_string()) rec.error = j["error"].get<std::string>();
  return rec;
}

ExecutionRecord RunAdapter(const std::filesystem::path& executable,
                           const std::vector<std::string>& args, const ProtocolRequest& req,
                           std::chrono::milliseconds wall_limit, std::stop_token stop) {
  IgnoreSigpipe();
  auto deadline = std::chrono::steady_clock::now() + wall_limit;
  Pipe in;
  Pipe out;

  posix_spawn_file_actions_t actions;
  posix_spawn_file_actions_init(&actions);
  posix_spawn_file_actions_adddup2(&actions, in.read_end(), STDIN_FILENO);
  posix_spawn_file_actions_adddup2(&actions, out.write_end(), STDOUT_FILENO);
  std::string path = executable.string();
  std::vector<std::string> argv_storage = {path};
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& a : argv_storage) argv.push_back(a.data());
  argv.push_back(nullptr);
  pid_t pid = -1;
  int rc = posix_spawn(&pid, path.c_str(), &actions, nullptr, argv.data(), environ);
  posix_spawn_file_actions_destroy(&actions);
  if (rc != 0) throw ProtocolError("cannot spawn " + path + ": " + std::strerror(rc));
  in.CloseRead();
  out.CloseWrite();
  ::fcntl(in.write_end(), F_SETFL, O_NONBLOCK);

  std::string request = EncodeRequest(req);
  size_t written = 0;
  std::string response;
  bool eof = false;
  const char* killed = nullptr;

  while (!eof && response.find('\n') == std::string::npos) {
    if (stop.stop_requested()) {
      killed = "killed by harness wall-limit";
      break;
    }
    auto left = std::chrono::duration_cast<std::chrono::milliseconds>(
        deadline - std::chrono::steady_clock::now());
    if (left.count() <= 0) {
      killed = "adapter exceeded wall limit";
      break;
    }
    pollfd fds[2] = {{out.read_end(), POLLIN, 0}, {in.write_end(), POLLOUT, 0}};
    nfds_t n = in.write_end() >= 0 ? 2 : 1;
    int ready = ::poll(fds, n, static_cast<int>(std::min<int64_t>(left.count(), 50)));
    if (ready < 0 && errno != EINTR) break;
    if (ready <= 0) continue;
    if (n == 2 && (fds[1].revents & (POLLOUT | POLLERR | POLLHUP))) {
      ssize_t w = ::write(in.write_end(), request.data() + written, request.size() - written);
      if (w > 0) written += static_cast<size_t>(w);
      if (w < 0 && errno != EAGAIN) written = request.size();  // child closed stdin
      if (written == request.size()) in.CloseWrite();
    }
    if (fds[0].revents & (POLLIN | POLLHUP | POLLERR)) {
      char buf[4096];
      ssize_t r = ::read(out.read_end(), buf, sizeof buf);
      if (r > 0) {
        response.append(buf, static_cast<size_t>(r));
      } else if (r == 0 || errno != EAGAIN) {
        eof = true;
      }
    }
  }

  // One request per process: anything still running after answering (or
  // timing out) is reaped here.
  ::kill(pid, SIGKILL);
  in.CloseWrite();
  out.CloseRead();
  int wstatus = 0;
  while (::waitpid(pid, &wstatus, 0) < 0 && errno == EINTR) {
  }
  if (killed) return Killed(killed);

  auto nl = response.find('\n');
  if (nl == std::string::npos) {
    if (response.empty()) throw ProtocolError("adapter exited without a response");
    nl = response.size();
  }
  return DecodeResponse(std::string_view(response).substr(0, nl));
}

}  // namespace evmdiff
