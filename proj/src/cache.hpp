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

#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>

namespace lctf {

/// One cached count: the key is (fingerprint, k); everything else is
/// metadata. The count is stored as a decimal string.
struct CacheRecord {
    std::string fingerprint;
    std::uint64_t q = 0;
    std::uint32_t e = 1;
    std::uint32_t n = 0;
    std::uint32_t k = 0;
    std::string count_decimal;
    std::string strategy;
    std::string tool_version;
};

/// Append-only JSON-lines store for exact counts, shared between concurrent
/// processes: every record is one line written atomically. Reads tolerate
/// duplicate records with identical counts; two different counts for one
/// (fingerprint, k) key are a hard integrity error.
class CountCache {
  public:
    explicit CountCache(std::string path);

    /// Reload the file from disk (picks up records from other processes).
    void refresh();

    std::optional<std::uint64_t> lookup(const std::string& fingerprint, std::uint32_t k) const;

    /// Append one record (single atomic line write). A record conflicting
    /// with an already-loaded count raises the integrity error instead.
    void append(const CacheRecord& record);

    const std::string& path() const { return path_; }
    std::size_t size() const { return index_.size(); }

  private:
    std::string path_;
    std::map<std::pair<std::string, std::uint32_t>, CacheRecord> index_;
};

} // namespace lctf
