// Copyright 2026 The ctxkit Authors
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

#ifndef CTXKIT_ERRORS_HPP
#define CTXKIT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace ctxkit {

/// Error categories raised by the library. Every throw site uses Error with
/// one of these codes so callers can dispatch without string matching.
enum class Errc {
  duplicate_label,
  non_maximal_clique,
  missing_clique,
  isolated_atom,
  too_large,
  bad_length,
  out_of_range,
  clique_sum_violation,
  dimension_mismatch,
  too_many_columns,
  not_contextual,
  not_admissible,
  bad_event,
  scenario_mismatch,
  not_normalized,
  parse_error,
  unknown_name,
};

inline const char* errc_name(Errc c) {
  switch (c) {
    case Errc::duplicate_label: return "duplicate-label";
    case Errc::non_maximal_clique: return "non-maximal-clique";
    case Errc::missing_clique: return "missing-clique";
    case Errc::isolated_atom: return "isolated-atom";
    case Errc::too_large: return "too-large";
    case Errc::bad_length: return "bad-length";
    case Errc::out_of_range: return "out-of-range";
    case Errc::clique_sum_violation: return "clique-sum-violation";
    case Errc::dimension_mismatch: return "dimension-mismatch";
    case Errc::too_many_columns: return "too-many-columns";
    case Errc::not_contextual: return "not-contextual";
    case Errc::not_admissible: return "not-admissible";
    case Errc::bad_event: return "bad-event";
    case Errc::scenario_mismatch: return "scenario-mismatch";
    case Errc::not_normalized: return "not-normalized";
    case Errc::parse_error: return "parse-error";
    case Errc::unknown_name: return "unknown-name";
  }
  return "unknown";
}

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what),
        code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void raise(Errc code, const std::string& what) {
  throw Error(code, what);
}

}  // namespace ctxkit

#endif  // CTXKIT_ERRORS_HPP
