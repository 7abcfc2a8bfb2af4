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
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "neutro/norms.hpp"
#include "neutro/space.hpp"

namespace neutro {

/// One evaluation of a neutrosophic metric: degree of nearness, degree of
/// neutralness and degree of non-nearness of a pair at a given scale.
struct MembershipTriple {
    double nearness = 0.0;
    double neutralness = 1.0;
    double non_nearness = 1.0;
};

/// Per-pair table rows (scale, nearness, neutralness, non_nearness) with
/// linear interpolation in the scale and clamped extension beyond the grid.
/// Rows are directional; a missing (b,a) entry falls back to (a,b). Missing
/// diagonal entries default to the exact identity values.
class MetricTable {
public:
    void add_row(std::size_t a, std::size_t b, double scale, double nearness,
                 double neutralness, double non_nearness);

    /// Columns: a_index, b_index, lambda, G, B, Y. Optional header line.
    static MetricTable from_csv(const std::string& path);

    /// Throws ConstructionError unless every unordered distinct pair of a
    /// space with `cardinality` points has at least one row.
    void require_total(std::size_t cardinality) const;

    MembershipTriple eval(std::size_t a, std::size_t b, double scale) const;

private:
    struct Row {
        double scale, g, b, y;
    };
    const std::vector<Row>* find(std::size_t a, std::size_t b) const;
    std::map<std::pair<std::size_t, std::size_t>, std::vector<Row>> rows_;
};

/// A neutrosophic metric: the three scale-indexed evaluators over a ground
/// space, coupled through a t-norm / t-conorm pair. Values are immutable
/// after construction and evaluation is pure, so metrics may be shared
/// freely across threads.
class NeutroMetric {
public:
    enum class Construction { induced_standard, explicit_table, custom };

    using Evaluator = std::function<double(const Point&, const Point&, double)>;

    /// The standard construction over a crisp distance d:
    ///   nearness = λ/(λ+d), neutralness = non_nearness = d/(λ+d),
    /// with (0, 1, 1) for λ <= 0. The space's crisp metric is verified first;
    /// violations raise ConstructionError.
    static NeutroMetric induced(GroundSpace space, TriangularNorm tnorm,
                                TriangularConorm tconorm);

    static NeutroMetric from_table(GroundSpace space, TriangularNorm tnorm,
                                   TriangularConorm tconorm, MetricTable table);
    static NeutroMetric from_table_csv(GroundSpace space, TriangularNorm tnorm,
                                       TriangularConorm tconorm,
                                       const std::string& path);

    /// Arbitrary evaluators; used to express deliberately broken metrics in
    /// diagnostics and tests. The evaluators own the λ <= 0 convention.
    static NeutroMetric custom(GroundSpace space, TriangularNorm tnorm,
                               TriangularConorm tconorm, Evaluator nearness,
                               Evaluator neutralness, Evaluator non_nearness);

    const GroundSpace& space() const { return *space_; }
    const TriangularNorm& tnorm() const { return tnorm_; }
    const TriangularConorm& tconorm() const { return tconorm_; }
    Construction construction() const { return construction_; }

    /// Evaluates the triple at scale λ. Points must belong to the space.
    MembershipTriple eval(const Point& a, const Point& b, double lambda) const;

    double nearness(const Point& a, const Point& b, double lambda) const;
    double neutralness(const Point& a, const Point& b, double lambda) const;
    double non_nearness(const Point& a, const Point& b, double lambda) const;

private:
    NeutroMetric(std::shared_ptr<const GroundSpace> space, TriangularNorm tnorm,
                 TriangularConorm tconorm, Construction construction,
                 Evaluator g, Evaluator b, Evaluator y);

    std::shared_ptr<const GroundSpace> space_;
    TriangularNorm tnorm_;
    TriangularConorm tconorm_;
    Construction construction_;
    Evaluator g_, b_, y_;
};

const char* to_string(NeutroMetric::Construction c);

/// The eighteen defining conditions, in definition order: ranges (i, ii), the
/// nearness block (iii-vii), the neutralness block (viii-xii), the
/// non-nearness block (xiii-xvii) and the non-positive-scale convention
/// (xviii).
enum class AxiomId {
    i, ii, iii, iv, v, vi, vii, viii, ix, x, xi, xii, xiii, xiv, xv, xvi, xvii,
    xviii
};

const char* to_string(AxiomId id);
AxiomId axiom_from_string(const std::string& s);

struct AxiomWitness {
    std::optional<Point> a, b, c;
    std::optional<double> lambda, mu;
    std::map<std::string, double> values;
};

struct AxiomResult {
    AxiomId id{};
    bool pass = false;
    std::size_t checked = 0;
    std::size_t violations = 0;
    std::optional<AxiomWitness> witness;
};

struct AxiomReport {
    std::vector<AxiomResult> axioms;  // all eighteen, in order
    bool pass = false;
    std::size_t sample_count = 0;
    std::uint64_t seed = 0;
    std::vector<double> lambda_grid;
    double large_lambda = 0.0;
    double tol = 0.0;

    const AxiomResult& result(AxiomId id) const;
    std::vector<AxiomId> failing() const;
};

struct AxiomCheckConfig {
    std::size_t sample_count = 1000;  // sampled triples
    std::uint64_t seed = 1;
    std::vector<double> lambda_grid{0.01, 0.1, 1.0, 10.0, 100.0};
    double large_lambda = 1e6;
    /// Closeness tolerance for the identity characterizations and the
    /// λ → ∞ limits. The algebraic identities (symmetry, the norm-coupled
    /// triangle inequalities, range bounds) use a fixed 1e-12 rounding slack.
    double tol = 1e-4;
    double continuity_delta = 1e-6;
    ExecMode exec = ExecMode::parallel;
};

/// Checks all eighteen axioms at sampled points/pairs/triples over the λ
/// grid. Finite backends scan every pair exhaustively for the identity
/// characterizations; continuity is checked as bounded variation with
/// Lipschitz constant 1/min(λ_grid). Deterministic given (seed, sample_count,
/// lambda_grid).
AxiomReport verify_axioms(const NeutroMetric& metric,
                          const AxiomCheckConfig& cfg = {});

}  // namespace neutro
