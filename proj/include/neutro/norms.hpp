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

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "neutro/exec.hpp"

namespace neutro {

/// Continuous t-norm on [0,1]: identity 1, monotone in both arguments,
/// commutative, associative.
class TriangularNorm {
public:
    enum class Kind { minimum, product, lukasiewicz };

    explicit TriangularNorm(Kind kind);

    /// Resolves the config identifiers "min", "product", "lukasiewicz".
    static TriangularNorm from_id(const std::string& id);

    Kind kind() const { return kind_; }
    const std::string& name() const { return name_; }
    const std::string& id() const { return id_; }

    /// Evaluates s ∘ t. Arguments outside [0,1] throw DomainError.
    double operator()(double s, double t) const;

private:
    Kind kind_;
    std::string name_;
    std::string id_;
};

/// Continuous t-conorm on [0,1]: the dual operation, identity 0.
class TriangularConorm {
public:
    enum class Kind { maximum, probabilistic_sum, bounded_sum };

    explicit TriangularConorm(Kind kind);

    /// Resolves the config identifiers "max", "probsum", "boundedsum".
    static TriangularConorm from_id(const std::string& id);

    Kind kind() const { return kind_; }
    const std::string& name() const { return name_; }
    const std::string& id() const { return id_; }

    double operator()(double s, double t) const;

private:
    Kind kind_;
    std::string name_;
    std::string id_;
};

std::vector<TriangularNorm> builtin_tnorms();
std::vector<TriangularConorm> builtin_tconorms();

/// Which boundary axiom a binary operation is held to.
enum class OpRole { tnorm, tconorm };

const char* to_string(OpRole role);

enum class NormAxiom { boundary, monotone, commutative, associative, range, continuity };

const char* to_string(NormAxiom axiom);

struct NormWitness {
    double s = 0.0;
    double t = 0.0;
    std::optional<double> u;
    std::optional<double> v;
    std::map<std::string, double> values;
};

struct NormAxiomResult {
    NormAxiom axiom;
    bool pass = false;
    std::size_t checked = 0;
    std::size_t violations = 0;
    std::optional<NormWitness> witness;  // first violation in sample order
};

struct NormAxiomReport {
    std::string op_name;
    OpRole role = OpRole::tnorm;
    std::vector<NormAxiomResult> results;
    std::size_t sample_count = 0;
    std::uint64_t seed = 0;
    double tol = 0.0;
    bool pass = false;

    const NormAxiomResult& result(NormAxiom axiom) const;
};

struct NormCheckConfig {
    std::size_t sample_count = 10000;
    std::uint64_t seed = 1;
    double tol = 1e-12;  // slack on the algebraic identities
    // Continuity is verified statistically: bounded output variation under a
    // small input perturbation. All built-ins are Lipschitz with constant <= 2.
    double continuity_delta = 1e-6;
    double continuity_lipschitz = 2.0;
    ExecMode exec = ExecMode::parallel;
};

using BinaryOp = std::function<double(double, double)>;

/// Samples (s,t,u,v) tuples and checks the six axioms, reporting a witness
/// for the first violation of each. Accepts arbitrary operations so that
/// known-bad candidates can be diagnosed.
NormAxiomReport check_norm_axioms(const BinaryOp& op, OpRole role,
                                  const std::string& op_name,
                                  const NormCheckConfig& cfg = {});
NormAxiomReport check_norm_axioms(const TriangularNorm& norm,
                                  const NormCheckConfig& cfg = {});
NormAxiomReport check_norm_axioms(const TriangularConorm& conorm,
                                  const NormCheckConfig& cfg = {});

/// Smallest grid value u with norm(s, u) >= t. Requires s > t; the witness is
/// grid-optimal for the given step.
double solve_norm_lower(const TriangularNorm& norm, double s, double t,
                        double grid_step = 1e-4);

struct DiagonalSolution {
    double t;  // smallest grid t with t ∘ t >= s
    double p;  // largest grid p with p • p <= s
};

/// Diagonal existence witnesses for s in (0,1).
DiagonalSolution solve_diagonal(const TriangularNorm& norm,
                                const TriangularConorm& conorm, double s,
                                double grid_step = 1e-4);

}  // namespace neutro
