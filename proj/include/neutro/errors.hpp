/*   Copyright 2026 The neutro authors

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

#include <stdexcept>
#include <string>

namespace neutro {

/// Inputs outside an operation's domain (values off [0,1], points that do
/// not belong to a space, malformed tables).
class DomainError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A documented precondition was violated by the caller.
class PreconditionError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// Both sides of a contraction inequality vanish; the pair carries no
/// information.
class DegeneratePairError : public PreconditionError {
public:
    using PreconditionError::PreconditionError;
};

/// A grid or bisection search exhausted its domain without a solution.
class SearchFailure : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// The quasi-metric feasibility predicate is still false at lambda_max.
class CeilingError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Iterates left the representable range.
class DivergenceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Not enough observations to evaluate a certificate.
class InsufficientDataError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A factory rejected its inputs (invalid crisp metric, incomplete table).
class ConstructionError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Experiment configuration failed to parse or validate. `where` carries a
/// location hint (line:column for parse errors, a field path otherwise).
class ConfigError : public std::runtime_error {
public:
    ConfigError(const std::string& where, const std::string& what)
        : std::runtime_error(where + ": " + what), where_(where) {}
    const std::string& where() const { return where_; }

private:
    std::string where_;
};

}  // namespace neutro
