// Copyright 2026 The ipgq Authors.
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

#include "ipgq/bench/export.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include "json.hpp"

#include "ipgq/errors.hpp"

namespace ipgq::bench {

using nlohmann::json;

namespace {

std::string format_number(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

json run_to_json(const optim::RunRecord& r) {
  return json{{"seed", r.seed},
              {"algorithm", r.algorithm},
              {"template", r.template_description},
              {"cost_history", r.cost_history},
              {"final_params", r.final_params},
              {"wall_time_seconds", r.wall_time_seconds},
              {"aborted", r.aborted},
              {"stagnated", r.stagnated},
              {"message", r.message}};
}

optim::RunRecord run_from_json(const json& j) {
  optim::RunRecord r;
  j.at("seed").get_to(r.seed);
  j.at("algorithm").get_to(r.algorithm);
  j.at("template").get_to(r.template_description);
  j.at("cost_history").get_to(r.cost_history);
  j.at("final_params").get_to(r.final_params);
  j.at("wall_time_seconds").get_to(r.wall_time_seconds);
  j.at("aborted").get_to(r.aborted);
  j.at("stagnated").get_to(r.stagnated);
  j.at("message").get_to(r.message);
  return r;
}

}  // namespace

void write_text_file(const std::filesystem::path& path, std::string_view text) {
  std::error_code ec;
  if (path.has_parent_path()) {
    std::filesystem::create_directories(path.parent_path(), ec);
    if (ec) throw IoError("cannot create directory " + path.parent_path().string() + ": " + ec.message());
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open " + path.string() + " for writing");
  out.write(text.data(), static_cast<std::streamsize>(text.size()));
  if (!out) throw IoError("write failed for " + path.string());
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read " + path.string());
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_history_csv(const std::filesystem::path& path, std::span<const double> history) {
  std::string text = "iteration,cost\n";
  for (std::size_t t = 0; t < history.size(); ++t) {
    text += std::to_string(t) + ',' + format_number(history[t]) + '\n';
  }
  write_text_file(path, text);
}

void write_column_csv(const std::filesystem::path& path, std::string_view header,
                      std::span<const double> values) {
  std::string text(header);
  text += '\n';
  for (double v : values) text += format_number(v) + '\n';
  write_text_file(path, text);
}

std::vector<std::filesystem::path> export_csv(const AggregateRecord& record,
                                              const std::filesystem::path& dir) {
  std::vector<std::filesystem::path> written;
  for (const auto& r : record.results) {
    auto best = dir / (r.algorithm + "_best.csv");
    write_history_csv(best, r.best.cost_history);
    written.push_back(best);
    auto avg = dir / (r.algorithm + "_average.csv");
    write_history_csv(avg, r.average_history);
    written.push_back(avg);
    if (r.histogram) {
      auto fid = dir / (r.algorithm + "_fidelity.csv");
      write_column_csv(fid, "fidelity", r.histogram->fidelity);
      written.push_back(fid);
      auto dt = dir / (r.algorithm + "_delta_theta.csv");
      write_column_csv(dt, "delta_theta", r.histogram->delta_theta);
      written.push_back(dt);
    }
  }
  return written;
}

std::string record_to_json(const AggregateRecord& record) {
  json j;
  j["version"] = record.version;
  j["config"] = json::parse(config_to_json(record.config));
  j["layers_used"] = record.layers_used;
  j["failed"] = record.failed;
  j["failure"] = record.failure;
  j["results"] = json::array();
  for (const auto& r : record.results) {
    json o{{"algorithm", r.algorithm},
           {"best", run_to_json(r.best)},
           {"average_history", r.average_history},
           {"output_probabilities", r.output_probabilities},
           {"runs", json::array()}};
    for (const auto& run : r.runs) o["runs"].push_back(run_to_json(run));
    if (r.histogram) {
      o["histogram"] = json{{"fidelity", r.histogram->fidelity}, {"delta_theta", r.histogram->delta_theta}};
    } else {
      o["histogram"] = nullptr;
    }
    j["results"].push_back(std::move(o));
  }
  return j.dump(2) + '\n';
}

AggregateRecord record_from_json(std::string_view text) {
  try {
    const json j = json::parse(text);
    AggregateRecord record;
    j.at("version").get_to(record.version);
    record.config = config_from_json(j.at("config").dump());
    j.at("layers_used").get_to(record.layers_used);
    j.at("failed").get_to(record.failed);
    j.at("failure").get_to(record.failure);
    for (const auto& o : j.at("results")) {
      OptimizerResult r;
      o.at("algorithm").get_to(r.algorithm);
      r.best = run_from_json(o.at("best"));
      o.at("average_history").get_to(r.average_history);
      o.at("output_probabilities").get_to(r.output_probabilities);
      for (const auto& run : o.at("runs")) r.runs.push_back(run_from_json(run));
      if (const auto& h = o.at("histogram"); !h.is_null()) {
        FidelitySamples s;
        h.at("fidelity").get_to(s.fidelity);
        h.at("delta_theta").get_to(s.delta_theta);
        r.histogram = std::move(s);
      }
      record.results.push_back(std::move(r));
    }
    return record;
  } catch (const json::exception& e) {
    throw ConfigError(std::string("malformed record JSON: ") + e.what());
  }
}

std::filesystem::path export_json(const AggregateRecord& record, const std::filesystem::path& dir) {
  auto path = dir / "record.json";
  write_text_file(path, record_to_json(record));
  return path;
}

}  // namespace ipgq::bench
