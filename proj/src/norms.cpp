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

#include "neutro/norms.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>

#include "neutro/errors.hpp"
#include "neutro/rng.hpp"

namespace neutro {

namespace {

void require_unit(double x, const char* arg) {
    if (!(x >= 0.0 && x <= 1.0)) {
        throw DomainError(std::string(arg) + " outside [0,1]");
    }
}

double clamp_unit(double x) { return std::min(1.0, std::max(0.0, x)); }

}  // namespace

TriangularNorm::TriangularNorm(Kind kind) : kind_(kind) {
    switch (kind) {
        case Kind::minimum:
            name_ = "minimum";
            id_ = "min";
            break;
        case Kind::product:
            name_ = "product";
            id_ = "product";
            break;
        case Kind::lukasiewicz:
            name_ = "lukasiewicz";
            id_ = "lukasiewicz";
            break;
    }
}

TriangularNorm TriangularNorm::from_id(const std::string& id) {
    if (id == "min") return TriangularNorm(Kind::minimum);
    if (id == "product") return TriangularNorm(Kind::product);
    if (id == "lukasiewicz") return TriangularNorm(Kind::lukasiewicz);
    throw DomainError("unknown t-norm identifier '" + id + "'");
}

double TriangularNorm::operator()(double s, double t) const {
    require_unit(s, "s");
    require_unit(t, "t");
    switch (kind_) {
        case Kind::minimum:
            return std::min(s, t);
        case Kind::product:
            return s * t;
        case Kind::lukasiewicz:
            return std::max(0.0, s + t - 1.0);
    }
    return 0.0;  // unreachable
}

TriangularConorm::TriangularConorm(Kind kind) : kind_(kind) {
    switch (kind) {
        case Kind::maximum:
            name_ = "maximum";
            id_ = "max";
            break;
        case Kind::probabilistic_sum:
            name_ = "probabilistic_sum";
            id_ = "probsum";
            break;
        case Kind::bounded_sum:
            name_ = "bounded_sum";
            id_ = "boundedsum";
            break;
    }
}

TriangularConorm TriangularConorm::from_id(const std::string& id) {
    if (id == "max") return TriangularConorm(Kind::maximum);
    if (id == "probsum") return TriangularConorm(Kind::probabilistic_sum);
    if (id == "boundedsum") return TriangularConorm(Kind::bounded_sum);
    throw DomainError("unknown t-conorm identifier '" + id + "'");
}

double TriangularConorm::operator()(double s, double t) const {
    require_unit(s, "s");
    require_unit(t, "t");
    switch (kind_) {
        case Kind::maximum:
            return std::max(s, t);
        case Kind::probabilistic_sum:
            return clamp_unit(s + t - s * t);
        case Kind::bounded_sum:
            return std::min(1.0, s + t);
    }
    return 0.0;  // unreachable
}

std::vector<TriangularNorm> builtin_tnorms() {
    return {TriangularNorm(TriangularNorm::Kind::minimum),
            TriangularNorm(TriangularNorm::Kind::product),
            TriangularNorm(TriangularNorm::Kind::lukasiewicz)};
}

std::vector<TriangularConorm> builtin_tconorms() {
    return {TriangularConorm(TriangularConorm::Kind::maximum),
            TriangularConorm(TriangularConorm::Kind::probabilistic_sum),
            TriangularConorm(TriangularConorm::Kind::bounded_sum)};
}

const char* to_string(OpRole role) {
    return role == OpRole::tnorm ? "tnorm" : "tconorm";
}

const char* to_string(NormAxiom axiom) {
    switch (axiom) {
        case NormAxiom::boundary:
            return "boundary";
        case NormAxiom::monotone:
            return "monotone";
        case NormAxiom::commutative:
            return "commutative";
        case NormAxiom::associative:
            return "associative";
        case NormAxiom::range:
            return "range";
        case NormAxiom::continuity:
            return "continuity";
    }
    return "?";
}

const NormAxiomResult& NormAxiomReport::result(NormAxiom axiom) const {
    for (const auto& r : results) {
        if (r.axiom == axiom) return r;
    }
    throw PreconditionError("axiom missing from report");
}

namespace {

struct Tuple4 {
    double s, t, u, v;
};

// Margin convention: a sample violates its axiom iff margin > 0. Witness
// selection runs serially over the margin buffer so the report is identical
// in both execution modes.
NormAxiomResult collect(NormAxiom axiom, const std::vector<Tuple4>& samples,
                        const std::vector<double>& margins,
                        const std::function<NormWitness(std::size_t)>& describe) {
    NormAxiomResult result;
    result.axiom = axiom;
    result.checked = margins.size();
    for (std::size_t i = 0; i < margins.size(); ++i) {
        if (margins[i] > 0.0) {
            ++result.violations;
            if (!result.witness) result.witness = describe(i);
        }
    }
    result.pass = result.violations == 0;
    (void)samples;
    return result;
}

// NaN-proof violation test: `ok` must be true for the sample to pass.
double violation(bool ok) { return ok ? -1.0 : 1.0; }

}  // namespace

NormAxiomReport check_norm_axioms(const BinaryOp& op, OpRole role,
                                  const std::string& op_name,
                                  const NormCheckConfig& cfg) {
    if (cfg.sample_count < 1) throw PreconditionError("sample_count must be >= 1");

    const std::size_t n = cfg.sample_count;
    std::vector<Tuple4> samples(n);
    SampleRng rng(cfg.seed);
    for (auto& s : samples) {
        s.s = rng.unit();
        s.t = rng.unit();
        s.u = rng.unit();
        s.v = rng.unit();
    }

    const double identity = role == OpRole::tnorm ? 1.0 : 0.0;
    const double tol = cfg.tol;

    NormAxiomReport report;
    report.op_name = op_name;
    report.role = role;
    report.sample_count = n;
    report.seed = cfg.seed;
    report.tol = tol;

    std::vector<double> margins(n);
    std::vector<double> aux(n);

    // boundary: op(s, identity) == s
    for_each_index(cfg.exec, n, [&](std::size_t i) {
        const double e = op(samples[i].s, identity);
        aux[i] = e;
        margins[i] = violation(std::abs(e - samples[i].s) <= tol);
    });
    report.results.push_back(collect(NormAxiom::boundary, samples, margins,
                                     [&](std::size_t i) {
                                         NormWitness w;
                                         w.s = samples[i].s;
                                         w.t = identity;
                                         w.values["op(s,identity)"] = aux[i];
                                         return w;
                                     }));

    // monotone: op on the coordinate-wise smaller pair cannot exceed the larger
    std::vector<double> lo_vals(n), hi_vals(n);
    for_each_index(cfg.exec, n, [&](std::size_t i) {
        const auto& q = samples[i];
        const double s_lo = std::min(q.s, q.u), s_hi = std::max(q.s, q.u);
        const double t_lo = std::min(q.t, q.v), t_hi = std::max(q.t, q.v);
        lo_vals[i] = op(s_lo, t_lo);
        hi_vals[i] = op(s_hi, t_hi);
        margins[i] = violation(lo_vals[i] <= hi_vals[i] + tol);
    });
    report.results.push_back(collect(NormAxiom::monotone, samples, margins,
                                     [&](std::size_t i) {
                                         const auto& q = samples[i];
                                         NormWitness w;
                                         w.s = std::min(q.s, q.u);
                                         w.t = std::min(q.t, q.v);
                                         w.u = std::max(q.s, q.u);
                                         w.v = std::max(q.t, q.v);
                                         w.values["op(lo)"] = lo_vals[i];
                                         w.values["op(hi)"] = hi_vals[i];
                                         return w;
                                     }));

    // commutative
    for_each_index(cfg.exec, n, [&](std::size_t i) {
        const auto& q = samples[i];
        lo_vals[i] = op(q.s, q.t);
        hi_vals[i] = op(q.t, q.s);
        margins[i] = violation(std::abs(lo_vals[i] - hi_vals[i]) <= tol);
    });
    report.results.push_back(collect(NormAxiom::commutative, samples, margins,
                                     [&](std::size_t i) {
                                         NormWitness w;
                                         w.s = samples[i].s;
                                         w.t = samples[i].t;
                                         w.values["op(s,t)"] = lo_vals[i];
                                         w.values["op(t,s)"] = hi_vals[i];
                                         return w;
                                     }));

    // associative: op(op(s,t),u) == op(s,op(t,u)); operands are clamped so a
    // range-breaking candidate still reaches this check instead of throwing
    for_each_index(cfg.exec, n, [&](std::size_t i) {
        const auto& q = samples[i];
        lo_vals[i] = op(clamp_unit(op(q.s, q.t)), q.u);
        hi_vals[i] = op(q.s, clamp_unit(op(q.t, q.u)));
        margins[i] = violation(std::abs(lo_vals[i] - hi_vals[i]) <= tol);
    });
    report.results.push_back(collect(NormAxiom::associative, samples, margins,
                                     [&](std::size_t i) {
                                         const auto& q = samples[i];
                                         NormWitness w;
                                         w.s = q.s;
                                         w.t = q.t;
                                         w.u = q.u;
                                         w.values["op(op(s,t),u)"] = lo_vals[i];
                                         w.values["op(s,op(t,u))"] = hi_vals[i];
                                         return w;
                                     }));

    // range: output stays in [0,1]
    for_each_index(cfg.exec, n, [&](std::size_t i) {
        const auto& q = samples[i];
        const double e = op(q.s, q.t);
        aux[i] = e;
        margins[i] = violation(e >= -tol && e <= 1.0 + tol);
    });
    report.results.push_back(collect(NormAxiom::range, samples, margins,
                                     [&](std::size_t i) {
                                         NormWitness w;
                                         w.s = samples[i].s;
                                         w.t = samples[i].t;
                                         w.values["op(s,t)"] = aux[i];
                                         return w;
                                     }));

    // continuity: bounded variation under perturbation of the first argument
    const double delta = cfg.continuity_delta;
    const double lip = cfg.continuity_lipschitz;
    for_each_index(cfg.exec, n, [&](std::size_t i) {
        const auto& q = samples[i];
        const double s2 = std::min(1.0, q.s + delta);
        const double eff = s2 - q.s;
        if (eff <= 0.0) {
            margins[i] = -1.0;
            aux[i] = 0.0;
            return;
        }
        const double diff = std::abs(op(s2, q.t) - op(q.s, q.t));
        aux[i] = diff;
        margins[i] = violation(diff <= lip * eff + tol);
    });
    report.results.push_back(collect(NormAxiom::continuity, samples, margins,
                                     [&](std::size_t i) {
                                         NormWitness w;
                                         w.s = samples[i].s;
                                         w.t = samples[i].t;
                                         w.values["|op(s+delta,t)-op(s,t)|"] = aux[i];
                                         w.values["bound"] = lip * delta + tol;
                                         return w;
                                     }));

    report.pass = std::all_of(report.results.begin(), report.results.end(),
                              [](const NormAxiomResult& r) { return r.pass; });
    return report;
}

NormAxiomReport check_norm_axioms(const TriangularNorm& norm,
                                  const NormCheckConfig& cfg) {
    return check_norm_axioms([&norm](double s, double t) { return norm(s, t); },
                             OpRole::tnorm, norm.name(), cfg);
}

NormAxiomReport check_norm_axioms(const TriangularConorm& conorm,
                                  const NormCheckConfig& cfg) {
    return check_norm_axioms(
        [&conorm](double s, double t) { return conorm(s, t); }, OpRole::tconorm,
        conorm.name(), cfg);
}

namespace {

std::size_t grid_size(double step) {
    if (!(step > 0.0) || step > 1.0) throw DomainError("grid_step must be in (0,1]");
    return static_cast<std::size_t>(std::ceil(1.0 / step));
}

double grid_value(std::size_t i, double step) {
    return std::min(1.0, static_cast<double>(i) * step);
}

}  // namespace

double solve_norm_lower(const TriangularNorm& norm, double s, double t,
                        double grid_step) {
    require_unit(s, "s");
    require_unit(t, "t");
    if (!(s > t)) throw PreconditionError("solve_norm_lower requires s > t");
    const std::size_t n = grid_size(grid_step);

    // predicate i -> norm(s, u_i) >= t is monotone in i, so the smallest
    // satisfying grid index is found by bisection over indices
    if (!(norm(s, grid_value(n, grid_step)) >= t)) {
        throw SearchFailure("no grid value u with norm(s,u) >= t; operation is not a t-norm");
    }
    if (norm(s, grid_value(0, grid_step)) >= t) return grid_value(0, grid_step);
    std::size_t lo = 0, hi = n;  // pred(lo) false, pred(hi) true
    while (hi - lo > 1) {
        const std::size_t mid = lo + (hi - lo) / 2;
        if (norm(s, grid_value(mid, grid_step)) >= t) {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    return grid_value(hi, grid_step);
}

DiagonalSolution solve_diagonal(const TriangularNorm& norm,
                                const TriangularConorm& conorm, double s,
                                double grid_step) {
    if (!(s > 0.0 && s < 1.0)) {
        throw PreconditionError("solve_diagonal requires s in (0,1)");
    }
    const std::size_t n = grid_size(grid_step);

    DiagonalSolution sol{};

    // smallest t with t ∘ t >= s
    {
        auto pred = [&](std::size_t i) {
            const double x = grid_value(i, grid_step);
            return norm(x, x) >= s;
        };
        if (!pred(n)) throw SearchFailure("no grid t with t∘t >= s");
        if (pred(0)) {
            sol.t = grid_value(0, grid_step);
        } else {
            std::size_t lo = 0, hi = n;
            while (hi - lo > 1) {
                const std::size_t mid = lo + (hi - lo) / 2;
                if (pred(mid)) {
                    hi = mid;
                } else {
                    lo = mid;
                }
            }
            sol.t = grid_value(hi, grid_step);
        }
    }

    // largest p with p • p <= s
    {
        auto pred = [&](std::size_t i) {
            const double x = grid_value(i, grid_step);
            return conorm(x, x) <= s;
        };
        if (!pred(0)) throw SearchFailure("no grid p with p•p <= s");
        if (pred(n)) {
            sol.p = grid_value(n, grid_step);
        } else {
            std::size_t lo = 0, hi = n;  // pred(lo) true, pred(hi) false
            while (hi - lo > 1) {
                const std::size_t mid = lo + (hi - lo) / 2;
                if (pred(mid)) {
                    lo = mid;
                } else {
                    hi = mid;
                }
            }
            sol.p = grid_value(lo, grid_step);
        }
    }

    return sol;
}

}  // namespace neutro
