/*
   Copyright 2026 The lctf authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "cache.hpp"

#include <cstdio>
#include <fstream>

#include <json.hpp>

#include "errors.hpp"

namespace lctf {

namespace {

nlohmann::json to_json(const CacheRecord& r) {
    return nlohmann::json{{"fingerprint", r.fingerprint}, {"q", r.q},
                          {"e", r.e},                     {"n", r.n},
                          {"k", r.k},                     {"N_k", r.count_decimal},
                          {"strategy", r.strategy},       {"tool_version", r.tool_version}};
}

CacheRecord from_json(const nlohmann::json& j) {
    CacheRecord r;
    r.fingerprint = j.at("fingerprint").get<std::string>();
    r.q = j.at("q").get<std::uint64_t>();
    r.e = j.at("e").get<std::uint32_t>();
    r.n = j.at("n").get<std::uint32_t>();
    r.k = j.at("k").get<std::uint32_t>();
    r.count_decimal = j.at("N_k").get<std::string>();
    r.strategy = j.at("strategy").get<std::string>();
    r.tool_version = j.value("tool_version", "");
    return r;
}

} // namespace

CountCache::CountCache(std::string path) : path_(std::move(path)) { refresh(); }

void CountCache::refresh() {
    index_.clear();
    std::ifstream in(path_);
    if (!in.is_open()) return; // a missing cache file is an empty cache
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        nlohmann::json j = nlohmann::json::parse(line, nullptr, false);
        if (j.is_discarded()) {
            // A torn final line can happen when another process is mid-append.
            if (in.peek() == std::char_traits<char>::eof()) break;
            fail(Errc::io_error, path_ + ":" + std::to_string(lineno) + ": malformed cache line");
        }
        CacheRecord rec;
        try {
            rec = from_json(j);
        } catch (const nlohmann::json::exception&) {
            fail(Errc::io_error, path_ + ":" + std::to_string(lineno) + ": incomplete cache record");
        }
        const auto key = std::make_pair(rec.fingerprint, rec.k);
        auto it = index_.find(key);
        if (it == index_.end()) {
            index_.emplace(key, std::move(rec));
        } else if (it->second.count_decimal != rec.count_decimal) {
            fail(Errc::integrity, path_ + ": conflicting counts for fingerprint " + rec.fingerprint +
                                      ", k=" + std::to_string(rec.k) + ": " +
                                      it->second.count_decimal + " vs " + rec.count_decimal);
        }
    }
}

std::optional<std::uint64_t> CountCache::lookup(const std::string& fingerprint,
                                                std::uint32_t k) const {
    auto it = index_.find(std::make_pair(fingerprint, k));
    if (it == index_.end()) return std::nullopt;
    return std::stoull(it->second.count_decimal);
}

void CountCache::append(const CacheRecord& record) {
    const auto key = std::make_pair(record.fingerprint, record.k);
    auto it = index_.find(key);
    if (it != index_.end()) {
        if (it->second.count_decimal != record.count_decimal)
            fail(Errc::integrity, path_ + ": conflicting count for fingerprint " + record.fingerprint +
                                      ", k=" + std::to_string(record.k));
        return; // identical duplicate: nothing to write
    }
    const std::string line = to_json(record).dump() + "\n";
    // One fwrite of one full line onto an append-mode stream: concurrent
    // writers interleave at line granularity.
    std::FILE* f = std::fopen(path_.c_str(), "a");
    if (f == nullptr) fail(Errc::io_error, "cannot open cache file " + path_);
    const std::size_t written = std::fwrite(line.data(), 1, line.size(), f);
    std::fclose(f);
    if (written != line.size()) fail(Errc::io_error, "short write to cache file " + path_);
    index_.emplace(key, record);
}

} // namespace lctf
