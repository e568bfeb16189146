// Copyright 2026 The gt-forge Authors
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

#include "gtforge/metrics/jsonl.hpp"

#include <istream>
#include <ostream>

#include <json.hpp>

namespace gtforge::metrics {

namespace {

using Json = nlohmann::ordered_json;

Json to_json(const DatasetRecord& r) {
  Json j;
  j["article_id"] = r.article_id;
  j["page"] = r.page;
  j["sentence_index"] = r.sentence_index;
  j["sgt"] = r.sgt;
  j["ocr"] = r.ocr;
  j["element_types"] = r.element_types;
  j["hyphen_flags"] = r.hyphen_flags;
  Json ops;
  ops["match"] = r.ops.match;
  ops["replace"] = r.ops.replace;
  ops["delete"] = r.ops.del;
  ops["insert"] = r.ops.insert;
  j["ops"] = std::move(ops);
  j["cer"] = r.cer;
  return j;
}

}  // namespace

std::string record_to_json_line(const DatasetRecord& record) {
  return to_json(record).dump();
}

DatasetRecord record_from_json_line(std::string_view line) {
  Json j;
  try {
    j = Json::parse(line);
  } catch (const nlohmann::json::exception& e) {
    throw Error(std::string("invalid dataset record: ") + e.what());
  }
  try {
    DatasetRecord r;
    r.article_id = j.at("article_id").get<std::string>();
    r.page = j.at("page").get<int>();
    r.sentence_index = j.at("sentence_index").get<int>();
    r.sgt = j.at("sgt").get<std::string>();
    r.ocr = j.at("ocr").get<std::string>();
    r.element_types = j.at("element_types").get<std::vector<std::string>>();
    r.hyphen_flags = j.at("hyphen_flags").get<std::vector<std::string>>();
    const Json& ops = j.at("ops");
    r.ops.match = ops.at("match").get<std::uint64_t>();
    r.ops.replace = ops.at("replace").get<std::uint64_t>();
    r.ops.del = ops.at("delete").get<std::uint64_t>();
    r.ops.insert = ops.at("insert").get<std::uint64_t>();
    r.cer = j.at("cer").get<double>();
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw Error(std::string("dataset record is missing fields: ") + e.what());
  }
}

void emit_jsonl(const std::vector<DatasetRecord>& records, std::ostream& sink) {
  for (const DatasetRecord& r : records) {
    sink << record_to_json_line(r) << '\n';
    if (!sink) throw Error("failed writing dataset record");
  }
}

std::vector<DatasetRecord> parse_jsonl(std::istream& source) {
  std::vector<DatasetRecord> out;
  std::string line;
  while (std::getline(source, line)) {
    if (line.empty()) continue;
    out.push_back(record_from_json_line(line));
  }
  return out;
}

}  // namespace gtforge::metrics
