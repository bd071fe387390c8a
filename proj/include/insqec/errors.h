// Copyright 2026 The insqec Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>

namespace insqec {

/// A (j, m) pair or coupling triple that breaks the triangle or parity rules.
struct InvalidCoupling : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// A request whose dense representation exceeds the configured qubit cap.
struct ResourceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A state that was declared to live in a codespace or sector but does not.
struct LeakageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Requested projection whose branch is identically zero for the code.
struct ZeroCodeword : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

}  // namespace insqec
