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

#include "neutro/space.hpp"

#include <cmath>
#include <sstream>

#include "neutro/csv.hpp"
#include "neutro/errors.hpp"

namespace neutro {

std::size_t Point::index() const {
    if (!is_index()) throw DomainError("point is not an index point");
    return std::get<std::size_t>(rep_);
}

const std::vector<double>& Point::coords() const {
    if (is_index()) throw DomainError("point is not a coordinate point");
    return std::get<std::vector<double>>(rep_);
}

bool Point::precedes(const Point& other) const {
    if (is_index() != other.is_index()) return is_index();
    if (is_index()) return index() < other.index();
    return coords() < other.coords();
}

std::string Point::describe() const {
    if (is_index()) return std::to_string(index());
    std::ostringstream out;
    out << "(";
    const auto& c = coords();
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (i) out << ", ";
        out << c[i];
    }
    out << ")";
    return out.str();
}

const char* to_string(CrispViolation::Kind kind) {
    switch (kind) {
        case CrispViolation::Kind::negative:
            return "negative";
        case CrispViolation::Kind::diagonal:
            return "diagonal";
        case CrispViolation::Kind::asymmetry:
            return "asymmetry";
        case CrispViolation::Kind::triangle:
            return "triangle";
    }
    return "?";
}

GroundSpace GroundSpace::finite(std::vector<std::vector<double>> distances) {
    const std::size_t n = distances.size();
    if (n == 0) throw ConstructionError("distance matrix is empty");
    for (const auto& row : distances) {
        if (row.size() != n) throw ConstructionError("distance matrix is not square");
        for (double d : row) {
            if (!std::isfinite(d) || d < 0.0) {
                throw ConstructionError("distance matrix entries must be finite and non-negative");
            }
        }
    }
    GroundSpace s;
    s.backend_ = Backend::finite_table;
    s.distances_ = std::move(distances);
    s.cardinality_ = n;
    return s;
}

GroundSpace GroundSpace::finite_from_csv(const std::string& path) {
    return finite(csv::read_numeric(path));
}

GroundSpace GroundSpace::euclidean(std::vector<std::array<double, 2>> box) {
    if (box.empty()) throw ConstructionError("euclidean space needs at least one dimension");
    for (const auto& [lo, hi] : box) {
        if (!(lo < hi)) throw ConstructionError("bounding box requires lower < upper per coordinate");
    }
    GroundSpace s;
    s.backend_ = Backend::euclidean;
    s.box_ = std::move(box);
    return s;
}

GroundSpace GroundSpace::line(double lo, double hi) {
    return euclidean({{lo, hi}});
}

GroundSpace GroundSpace::discrete(std::size_t cardinality) {
    if (cardinality == 0) throw ConstructionError("discrete space needs at least one point");
    GroundSpace s;
    s.backend_ = Backend::discrete;
    s.cardinality_ = cardinality;
    return s;
}

std::size_t GroundSpace::cardinality() const {
    if (backend_ == Backend::euclidean) throw DomainError("euclidean space has no cardinality");
    return cardinality_;
}

std::size_t GroundSpace::dimension() const {
    if (backend_ != Backend::euclidean) throw DomainError("finite space has no dimension");
    return box_.size();
}

const std::vector<std::array<double, 2>>& GroundSpace::box() const {
    if (backend_ != Backend::euclidean) throw DomainError("finite space has no bounding box");
    return box_;
}

bool GroundSpace::is_compatible(const Point& p) const {
    if (backend_ == Backend::euclidean) {
        return !p.is_index() && p.coords().size() == box_.size();
    }
    return p.is_index() && p.index() < cardinality_;
}

void GroundSpace::require_compatible(const Point& p) const {
    if (!is_compatible(p)) {
        throw DomainError("point " + p.describe() + " does not belong to " + describe());
    }
}

double GroundSpace::distance(const Point& a, const Point& b) const {
    require_compatible(a);
    require_compatible(b);
    switch (backend_) {
        case Backend::finite_table:
            return distances_[a.index()][b.index()];
        case Backend::discrete:
            return a.index() == b.index() ? 0.0 : 1.0;
        case Backend::euclidean: {
            const auto& x = a.coords();
            const auto& y = b.coords();
            double sq = 0.0;
            for (std::size_t i = 0; i < x.size(); ++i) {
                const double diff = x[i] - y[i];
                sq += diff * diff;
            }
            return std::sqrt(sq);
        }
    }
    return 0.0;  // unreachable
}

Point GroundSpace::sample_point(SampleRng& rng) const {
    if (backend_ == Backend::euclidean) {
        std::vector<double> coords(box_.size());
        for (std::size_t i = 0; i < box_.size(); ++i) {
            coords[i] = rng.uniform(box_[i][0], box_[i][1]);
        }
        return Point::at(std::move(coords));
    }
    return Point::at_index(rng.index(cardinality_));
}

std::vector<Point> GroundSpace::sample_points(std::size_t count,
                                              std::uint64_t seed) const {
    if (count < 1) throw PreconditionError("count must be >= 1");
    SampleRng rng(seed);
    std::vector<Point> points;
    points.reserve(count);
    for (std::size_t i = 0; i < count; ++i) points.push_back(sample_point(rng));
    return points;
}

namespace {

constexpr std::size_t kMaxViolations = 16;

void add_violation(CrispMetricReport& report, CrispViolation v) {
    if (report.violations.size() < kMaxViolations) {
        report.violations.push_back(std::move(v));
    }
}

}  // namespace

CrispMetricReport GroundSpace::verify_crisp_metric(std::size_t sample_count,
                                                   std::uint64_t seed,
                                                   ExecMode exec) const {
    CrispMetricReport report;

    if (backend_ == Backend::finite_table) {
        const std::size_t n = cardinality_;
        const auto& d = distances_;
        for (std::size_t i = 0; i < n; ++i) {
            if (d[i][i] != 0.0) {
                add_violation(report, {CrispViolation::Kind::diagonal,
                                       Point::at_index(i), Point::at_index(i),
                                       std::nullopt,
                                       {{"d(a,a)", d[i][i]}}});
            }
            for (std::size_t j = i + 1; j < n; ++j) {
                if (d[i][j] != d[j][i]) {
                    add_violation(report, {CrispViolation::Kind::asymmetry,
                                           Point::at_index(i), Point::at_index(j),
                                           std::nullopt,
                                           {{"d(a,b)", d[i][j]}, {"d(b,a)", d[j][i]}}});
                }
            }
        }
        // triangle over all n^3 triples; each index computes the worst margin
        // of its slab and the serial pass keeps scan order deterministic
        std::vector<double> worst(n, 0.0);
        std::vector<std::array<std::size_t, 2>> arg(n);
        for_each_index(exec, n, [&](std::size_t i) {
            double w = 0.0;
            std::array<std::size_t, 2> at{0, 0};
            for (std::size_t j = 0; j < n; ++j) {
                for (std::size_t k = 0; k < n; ++k) {
                    const double margin = d[i][j] - (d[i][k] + d[k][j]);
                    if (margin > w) {
                        w = margin;
                        at = {j, k};
                    }
                }
            }
            worst[i] = w;
            arg[i] = at;
        });
        for (std::size_t i = 0; i < n; ++i) {
            if (worst[i] > 0.0) {
                const auto [j, k] = arg[i];
                add_violation(report, {CrispViolation::Kind::triangle,
                                       Point::at_index(i), Point::at_index(j),
                                       Point::at_index(k),
                                       {{"d(a,b)", d[i][j]},
                                        {"d(a,via)", d[i][k]},
                                        {"d(via,b)", d[k][j]}}});
            }
        }
        report.checked = n * n * n;
        report.pass = report.violations.empty();
        return report;
    }

    // sampled verification for euclidean and discrete backends
    if (sample_count < 1) throw PreconditionError("sample_count must be >= 1");
    SampleRng rng(seed);
    std::vector<std::array<Point, 3>> triples;
    triples.reserve(sample_count);
    for (std::size_t i = 0; i < sample_count; ++i) {
        triples.push_back({sample_point(rng), sample_point(rng), sample_point(rng)});
    }
    std::vector<int> flags(sample_count, 0);
    for_each_index(exec, sample_count, [&](std::size_t i) {
        const auto& [a, b, c] = triples[i];
        int flag = 0;
        if (distance(a, a) != 0.0) flag |= 1;
        const double dab = distance(a, b);
        if (dab < 0.0) flag |= 2;
        if (dab != distance(b, a)) flag |= 4;
        if (dab > distance(a, c) + distance(c, b) + 1e-12) flag |= 8;
        flags[i] = flag;
    });
    for (std::size_t i = 0; i < sample_count; ++i) {
        if (!flags[i]) continue;
        const auto& [a, b, c] = triples[i];
        if (flags[i] & 1) {
            add_violation(report, {CrispViolation::Kind::diagonal, a, a,
                                   std::nullopt, {{"d(a,a)", distance(a, a)}}});
        }
        if (flags[i] & 2) {
            add_violation(report, {CrispViolation::Kind::negative, a, b,
                                   std::nullopt, {{"d(a,b)", distance(a, b)}}});
        }
        if (flags[i] & 4) {
            add_violation(report, {CrispViolation::Kind::asymmetry, a, b,
                                   std::nullopt,
                                   {{"d(a,b)", distance(a, b)}, {"d(b,a)", distance(b, a)}}});
        }
        if (flags[i] & 8) {
            add_violation(report, {CrispViolation::Kind::triangle, a, b, c,
                                   {{"d(a,b)", distance(a, b)},
                                    {"d(a,via)", distance(a, c)},
                                    {"d(via,b)", distance(c, b)}}});
        }
    }
    report.checked = sample_count;
    report.pass = report.violations.empty();
    return report;
}

std::string GroundSpace::describe() const {
    switch (backend_) {
        case Backend::finite_table:
            return "finite_table(n=" + std::to_string(cardinality_) + ")";
        case Backend::discrete:
            return "discrete(n=" + std::to_string(cardinality_) + ")";
        case Backend::euclidean:
            return "euclidean(dim=" + std::to_string(box_.size()) + ")";
    }
    return "?";
}

}  // namespace neutro
