// Copyright 2026 The gateforge Authors
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

#include <algorithm>
#include <atomic>
#include <istream>
#include <ostream>
#include <string>
#include <thread>
#include <vector>

#include "gateforge/cli/commands.hpp"

namespace gateforge::cli {

namespace {

constexpr std::size_t kChunkLines = 256;

struct Line {
  std::size_t number = 0;
  std::string text;
};

json evaluate(const Line &line, const Settings &settings) {
  json request;
  CommandResult r;
  try {
    request = json::parse(line.text);
    r = run_request(request, settings);
  } catch (const json::parse_error &e) {
    r.exit_code = kExitValidation;
    r.output = {{"error", {{"code", "InvalidInput"}, {"message", e.what()}}}};
  }
  const bool ok = !r.output.contains("error");
  json out = {{"line", line.number}, {"ok", ok}, {"exit_code", r.exit_code}};
  if (ok) {
    out["result"] = std::move(r.output);
  } else {
    out["error"] = std::move(r.output["error"]);
  }
  out["warnings"] = r.warnings;
  return out;
}

void flush_chunk(const std::vector<Line> &chunk, std::ostream &out,
                 const Settings &settings, unsigned jobs) {
  std::vector<json> results(chunk.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < chunk.size(); i = next++)
      results[i] = evaluate(chunk[i], settings);
  };
  const unsigned threads =
      std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(chunk.size())));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto &t : pool) t.join();
  for (const json &r : results) out << r.dump() << '\n';
  out.flush();
}

}  // namespace

void run_batch(std::istream &in, std::ostream &out, const Settings &settings,
               unsigned jobs) {
  std::vector<Line> chunk;
  std::string text;
  std::size_t number = 0;
  while (std::getline(in, text)) {
    ++number;
    if (text.find_first_not_of(" \t\r") == std::string::npos) continue;
    chunk.push_back({number, text});
    if (chunk.size() == kChunkLines) {
      flush_chunk(chunk, out, settings, jobs);
      chunk.clear();
    }
  }
  if (!chunk.empty()) flush_chunk(chunk, out, settings, jobs);
}

}  // namespace gateforge::cli
