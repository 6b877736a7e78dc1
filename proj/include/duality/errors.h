// Copyright 2026 The Duality Authors
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

#ifndef DUALITY_ERRORS_H
#define DUALITY_ERRORS_H

#include <stdexcept>
#include <string>

namespace duality {

/// Caller supplied an out-of-domain or malformed argument.
class InputError : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

/// A quantity that needs both paths populated was requested on a state with
/// (numerically) zero probability on one path.
class EmptyPathError : public std::domain_error {
   public:
    using std::domain_error::domain_error;
};

/// A closed-form expression left its real domain by more than roundoff.
class NumericDomainError : public std::domain_error {
   public:
    using std::domain_error::domain_error;
};

/// Kraus operators fail the completeness relation.
class ChannelError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

}  // namespace duality

#endif
