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

#include "lctf.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "commands.hpp"
#include "parse.hpp"
#include "version.hpp"

using lctf::Errc;
using lctf::Error;

struct lctf_session {
    lctf::Session impl;
    std::string last_error;

    explicit lctf_session(lctf::SessionConfig config) : impl(std::move(config)) {}
};

namespace {

thread_local std::string g_create_error;

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (out == nullptr) return nullptr;
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

lctf_status status_of(Errc code) { return static_cast<lctf_status>(static_cast<int>(code)); }

std::string describe(const Error& e) { return lctf::error_to_json(e).dump(); }

/// Run `fn`, routing every failure into (status, error slot).
template <typename Fn>
lctf_status guarded(std::string& error_slot, Fn&& fn) {
    try {
        fn();
        return LCTF_OK;
    } catch (const Error& e) {
        error_slot = describe(e);
        return status_of(e.code());
    } catch (const nlohmann::json::exception& e) {
        error_slot = lctf::error_to_json(Error(Errc::usage, std::string("malformed JSON: ") + e.what())).dump();
        return LCTF_E_USAGE;
    } catch (const std::bad_alloc&) {
        error_slot = lctf::error_to_json(Error(Errc::internal, "out of memory")).dump();
        return LCTF_E_INTERNAL;
    } catch (const std::exception& e) {
        error_slot = lctf::error_to_json(Error(Errc::internal, e.what())).dump();
        return LCTF_E_INTERNAL;
    }
}

} // namespace

extern "C" {

const char* lctf_version(void) { return lctf::kToolVersion; }

const char* lctf_status_name(lctf_status status) {
    return lctf::errc_name(static_cast<Errc>(static_cast<int>(status)));
}

lctf_status lctf_session_create(const char* config_json, lctf_session** out_session) {
    if (out_session == nullptr) return LCTF_E_USAGE;
    *out_session = nullptr;
    return guarded(g_create_error, [&] {
        const nlohmann::json config =
            (config_json == nullptr || *config_json == '\0')
                ? nlohmann::json::object()
                : nlohmann::json::parse(config_json);
        *out_session = new lctf_session(lctf::SessionConfig::from_json(config));
    });
}

void lctf_session_destroy(lctf_session* session) { delete session; }

lctf_status lctf_run(lctf_session* session, const char* command, const char* request_json,
                     char** out_report) {
    if (session == nullptr || command == nullptr || out_report == nullptr) return LCTF_E_USAGE;
    *out_report = nullptr;
    return guarded(session->last_error, [&] {
        const nlohmann::json request = (request_json == nullptr || *request_json == '\0')
                                           ? nlohmann::json::object()
                                           : nlohmann::json::parse(request_json);
        const nlohmann::json report = session->impl.run(command, request);
        *out_report = dup_string(report.dump(2));
        if (*out_report == nullptr) throw std::bad_alloc();
    });
}

const char* lctf_last_error(const lctf_session* session) {
    if (session == nullptr) return g_create_error.c_str();
    return session->last_error.c_str();
}

lctf_status lctf_poly_canonical(lctf_session* session, const char* text, char** out_canonical) {
    if (session == nullptr || text == nullptr || out_canonical == nullptr) return LCTF_E_USAGE;
    *out_canonical = nullptr;
    return guarded(session->last_error, [&] {
        const lctf::MPoly f =
            lctf::parse_poly(text, session->impl.ring(), session->impl.config().nvars);
        *out_canonical = dup_string(f.to_string());
        if (*out_canonical == nullptr) throw std::bad_alloc();
    });
}

void lctf_free(char* buffer) { std::free(buffer); }

} // extern "C"
