/*
 *   Copyright 2026 The norph authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace norph {

/// Error thrown on broken contracts: malformed definitions, mismatched
/// spaces or objects, unknown names, exceeded enumeration caps.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Attachment side for propagation. `pre` attaches a morphism in front of
/// the banned slot (the ban moves to the attachment's codomain side),
/// `post` attaches one behind it.
enum class Side { pre, post };

inline const char* to_string(Side side) {
  return side == Side::pre ? "pre" : "post";
}

inline Side side_from_string(const std::string& text) {
  if (text == "pre") return Side::pre;
  if (text == "post") return Side::post;
  throw Error("invalid side '" + text + "' (expected 'pre' or 'post')");
}

}  // namespace norph
