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

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "neutro/exec.hpp"
#include "neutro/rng.hpp"

namespace neutro {

/// A point of the carrier set: an index into a finite space or a coordinate
/// vector in a Euclidean one. Points compare by exact equality.
class Point {
public:
    static Point at_index(std::size_t i) { return Point(i); }
    static Point at(std::vector<double> coords) { return Point(std::move(coords)); }
    static Point at(double x) { return Point(std::vector<double>{x}); }

    bool is_index() const { return std::holds_alternative<std::size_t>(rep_); }
    std::size_t index() const;
    const std::vector<double>& coords() const;

    bool operator==(const Point& other) const { return rep_ == other.rep_; }
    bool operator!=(const Point& other) const { return !(*this == other); }

    /// Lexicographic order used by deterministic tie-breaking.
    bool precedes(const Point& other) const;

    std::string describe() const;

private:
    explicit Point(std::size_t i) : rep_(i) {}
    explicit Point(std::vector<double> coords) : rep_(std::move(coords)) {}
    std::variant<std::size_t, std::vector<double>> rep_;
};

struct CrispViolation {
    enum class Kind { negative, diagonal, asymmetry, triangle };
    Kind kind;
    Point a;
    Point b;
    std::optional<Point> via;  // intermediate point of a broken triangle
    std::map<std::string, double> values;
};

const char* to_string(CrispViolation::Kind kind);

struct CrispMetricReport {
    bool pass = false;
    std::size_t checked = 0;
    std::vector<CrispViolation> violations;  // capped; first hits in scan order
};

/// The carrier set F together with a crisp distance backend. Euclidean spaces
/// carry a bounding box that confines sampling (points outside the box are
/// still valid arguments).
class GroundSpace {
public:
    enum class Backend { finite_table, euclidean, discrete };

    /// Finite space given by an explicit distance matrix. Construction
    /// validates shape only (square, finite, non-negative entries); the
    /// metric axioms are the business of verify_crisp_metric.
    static GroundSpace finite(std::vector<std::vector<double>> distances);
    /// Row-per-point CSV of comma-separated reals.
    static GroundSpace finite_from_csv(const std::string& path);
    static GroundSpace euclidean(std::vector<std::array<double, 2>> box);
    static GroundSpace line(double lo, double hi);
    static GroundSpace discrete(std::size_t cardinality);

    Backend backend() const { return backend_; }
    bool is_finite() const { return backend_ != Backend::euclidean; }
    std::size_t cardinality() const;
    std::size_t dimension() const;
    const std::vector<std::array<double, 2>>& box() const;

    bool is_compatible(const Point& p) const;
    void require_compatible(const Point& p) const;

    /// Crisp distance d(a,b). Symmetric with d(a,a) = 0 for valid backends.
    double distance(const Point& a, const Point& b) const;

    Point sample_point(SampleRng& rng) const;
    /// Deterministic given (count, seed); sequential draws, so a longer run
    /// with the same seed extends a shorter one.
    std::vector<Point> sample_points(std::size_t count, std::uint64_t seed) const;

    /// Symmetry, zero diagonal and the triangle inequality: exhaustive over
    /// all pairs/triples for finite backends, sampled otherwise.
    CrispMetricReport verify_crisp_metric(std::size_t sample_count,
                                          std::uint64_t seed,
                                          ExecMode exec = ExecMode::parallel) const;

    std::string describe() const;

private:
    GroundSpace() = default;

    Backend backend_ = Backend::discrete;
    std::vector<std::vector<double>> distances_;   // finite_table
    std::vector<std::array<double, 2>> box_;       // euclidean
    std::size_t cardinality_ = 0;                  // finite backends
};

}  // namespace neutro
