/*
 * Copyright 2026 The hydrovqe Authors.
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

#include "hydrovqe/optimizer.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <random>

#include <Eigen/Dense>

namespace hvqe {

namespace {

struct BudgetExhausted {};
struct TargetReached {};

constexpr double kGradientStep = 1e-5;
constexpr int kWindow = 3;

class CountedObjective {
 public:
  CountedObjective(const Objective& f, const OptimizerSpec& spec, OptimizeResult& out)
      : f_(f), spec_(spec), out_(out) {}

  double operator()(std::span<const double> x) {
    if (out_.evals >= spec_.max_evals) throw BudgetExhausted{};
    const double e = f_(x);
    ++out_.evals;
    if (!std::isfinite(e)) {
      throw NumericError("objective returned a non-finite energy at evaluation " +
                         std::to_string(out_.evals));
    }
    if (out_.trace.empty() || e < out_.energy) {
      out_.energy = e;
      out_.params.assign(x.begin(), x.end());
    }
    out_.trace.push_back({out_.evals, e, out_.energy});
    if (spec_.stop_below && e <= *spec_.stop_below) throw TargetReached{};
    return e;
  }

  double operator()(const Eigen::VectorXd& x) {
    return (*this)(std::span<const double>(x.data(), static_cast<std::size_t>(x.size())));
  }

 private:
  const Objective& f_;
  const OptimizerSpec& spec_;
  OptimizeResult& out_;
};

class ConvergenceWindow {
 public:
  explicit ConvergenceWindow(double tol) : tol_(tol) {}
  bool accept(double change) {
    run_ = std::abs(change) < tol_ ? run_ + 1 : 0;
    return run_ >= kWindow;
  }

 private:
  double tol_;
  int run_ = 0;
};

Eigen::VectorXd gradient(CountedObjective& f, const Eigen::VectorXd& x) {
  Eigen::VectorXd g(x.size());
  Eigen::VectorXd probe = x;
  for (Eigen::Index i = 0; i < x.size(); ++i) {
    probe(i) = x(i) + kGradientStep;
    const double up = f(probe);
    probe(i) = x(i) - kGradientStep;
    const double down = f(probe);
    probe(i) = x(i);
    g(i) = (up - down) / (2 * kGradientStep);
  }
  return g;
}

// Quasi-Newton with inverse-Hessian BFGS updates and Armijo backtracking.
bool run_bfgs(CountedObjective& f, Eigen::VectorXd x, double tol) {
  const Eigen::Index n = x.size();
  double fx = f(x);
  if (n == 0) return true;
  Eigen::VectorXd g = gradient(f, x);
  Eigen::MatrixXd inv_h = Eigen::MatrixXd::Identity(n, n);
  ConvergenceWindow window(tol);
  bool fresh_metric = true;
  for (;;) {
    if (g.lpNorm<Eigen::Infinity>() < 1e-9) return true;
    Eigen::VectorXd dir = -inv_h * g;
    if (g.dot(dir) >= 0) {
      inv_h.setIdentity();
      dir = -g;
      fresh_metric = true;
    }
    double step = std::min(1.0, 1.0 / dir.norm());
    const double slope = g.dot(dir);
    Eigen::VectorXd x_new;
    double f_new = fx;
    bool decreased = false;
    for (int k = 0; k < 40; ++k, step *= 0.5) {
      x_new = x + step * dir;
      f_new = f(x_new);
      if (f_new <= fx + 1e-4 * step * slope) {
        decreased = true;
        break;
      }
    }
    if (!decreased) {
      if (fresh_metric) return true;
      inv_h.setIdentity();
      fresh_metric = true;
      continue;
    }
    const Eigen::VectorXd g_new = gradient(f, x_new);
    const Eigen::VectorXd s = x_new - x;
    const Eigen::VectorXd y = g_new - g;
    const double sy = s.dot(y);
    if (sy > 1e-12) {
      const double rho = 1.0 / sy;
      const Eigen::MatrixXd left =
          Eigen::MatrixXd::Identity(n, n) - rho * s * y.transpose();
      inv_h = left * inv_h * left.transpose() + rho * s * s.transpose();
      fresh_metric = false;
    }
    const double change = f_new - fx;
    x = x_new;
    fx = f_new;
    g = g_new;
    if (window.accept(change)) return true;
  }
}

bool run_nelder_mead(CountedObjective& f, const Eigen::VectorXd& start, double tol) {
  const Eigen::Index n = start.size();
  std::vector<Eigen::VectorXd> simplex{start};
  std::vector<double> values{f(start)};
  if (n == 0) return true;
  for (Eigen::Index i = 0; i < n; ++i) {
    Eigen::VectorXd v = start;
    v(i) += 0.1;
    values.push_back(f(v));
    simplex.push_back(std::move(v));
  }
  std::vector<std::size_t> order(simplex.size());
  ConvergenceWindow window(tol);
  for (;;) {
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });
    const std::size_t best = order.front();
    const std::size_t worst = order.back();
    const std::size_t second = order[order.size() - 2];
    if (window.accept(values[worst] - values[best])) return true;

    Eigen::VectorXd centroid = Eigen::VectorXd::Zero(n);
    for (std::size_t i = 0; i < simplex.size(); ++i) {
      if (i != worst) centroid += simplex[i];
    }
    centroid /= static_cast<double>(n);
    const Eigen::VectorXd reflected = centroid + (centroid - simplex[worst]);
    const double f_reflected = f(reflected);
    if (f_reflected < values[best]) {
      const Eigen::VectorXd expanded = centroid + 2.0 * (centroid - simplex[worst]);
      const double f_expanded = f(expanded);
      if (f_expanded < f_reflected) {
        simplex[worst] = expanded;
        values[worst] = f_expanded;
      } else {
        simplex[worst] = reflected;
        values[worst] = f_reflected;
      }
      continue;
    }
    if (f_reflected < values[second]) {
      simplex[worst] = reflected;
      values[worst] = f_reflected;
      continue;
    }
    const bool outside = f_reflected < values[worst];
    const Eigen::VectorXd contracted =
        outside ? Eigen::VectorXd(centroid + 0.5 * (reflected - centroid))
                : Eigen::VectorXd(centroid + 0.5 * (simplex[worst] - centroid));
    const double f_contracted = f(contracted);
    if (f_contracted < (outside ? f_reflected : values[worst])) {
      simplex[worst] = contracted;
      values[worst] = f_contracted;
      continue;
    }
    for (std::size_t i = 0; i < simplex.size(); ++i) {
      if (i == best) continue;
      simplex[i] = simplex[best] + 0.5 * (simplex[i] - simplex[best]);
      values[i] = f(simplex[i]);
    }
  }
}

// Simultaneous-perturbation stochastic approximation with the standard
// gain exponents 0.602 and 0.101.
bool run_spsa(CountedObjective& f, Eigen::VectorXd x, const OptimizerSpec& spec) {
  const Eigen::Index n = x.size();
  f(x);
  if (n == 0) return true;
  constexpr double kA = 0.2;
  constexpr double kC = 0.1;
  const double stability = 0.1 * std::max(1, spec.max_evals / 2);
  std::mt19937_64 rng(spec.seed);
  ConvergenceWindow window(spec.tolerance);
  double previous = std::numeric_limits<double>::quiet_NaN();
  Eigen::VectorXd delta(n);
  for (int k = 0;; ++k) {
    const double a_k = kA / std::pow(k + 1 + stability, 0.602);
    const double c_k = kC / std::pow(k + 1, 0.101);
    for (Eigen::Index i = 0; i < n; ++i) delta(i) = (rng() >> 63) ? 1.0 : -1.0;
    const double up = f(Eigen::VectorXd(x + c_k * delta));
    const double down = f(Eigen::VectorXd(x - c_k * delta));
    x -= a_k * (up - down) / (2 * c_k) * delta;
    const double level = 0.5 * (up + down);
    if (!std::isnan(previous) && window.accept(level - previous)) return true;
    previous = level;
  }
}

}  // namespace

OptimizerKind parse_optimizer_kind(std::string_view s) {
  if (s == "nelder_mead") return OptimizerKind::nelder_mead;
  if (s == "bfgs_numeric_gradient" || s == "bfgs") return OptimizerKind::bfgs_numeric_gradient;
  if (s == "spsa") return OptimizerKind::spsa;
  throw std::invalid_argument("unknown optimizer '" + std::string(s) + "'");
}

std::string to_string(OptimizerKind kind) {
  switch (kind) {
    case OptimizerKind::nelder_mead: return "nelder_mead";
    case OptimizerKind::bfgs_numeric_gradient: return "bfgs_numeric_gradient";
    case OptimizerKind::spsa: return "spsa";
  }
  return "?";
}

void validate(const OptimizerSpec& spec) {
  if (!(spec.tolerance > 0)) throw std::invalid_argument("optimizer tolerance must be positive");
  if (spec.max_evals < 1) throw std::invalid_argument("optimizer max_evals must be at least 1");
}

OptimizeResult optimize(const Objective& f, std::vector<double> start,
                        const OptimizerSpec& spec) {
  validate(spec);
  OptimizeResult out;
  CountedObjective counted(f, spec, out);
  const Eigen::VectorXd x0 =
      Eigen::Map<const Eigen::VectorXd>(start.data(), static_cast<Eigen::Index>(start.size()));
  try {
    switch (spec.kind) {
      case OptimizerKind::bfgs_numeric_gradient:
        out.converged = run_bfgs(counted, x0, spec.tolerance);
        break;
      case OptimizerKind::nelder_mead:
        out.converged = run_nelder_mead(counted, x0, spec.tolerance);
        break;
      case OptimizerKind::spsa:
        out.converged = run_spsa(counted, x0, spec);
        break;
    }
  } catch (const BudgetExhausted&) {
    out.converged = false;
  } catch (const TargetReached&) {
    out.converged = true;
  }
  return out;
}

std::vector<double> central_gradient(const Objective& f, std::span<const double> x,
                                     double h) {
  std::vector<double> probe(x.begin(), x.end());
  std::vector<double> g(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    probe[i] = x[i] + h;
    const double up = f(probe);
    probe[i] = x[i] - h;
    const double down = f(probe);
    probe[i] = x[i];
    g[i] = (up - down) / (2 * h);
  }
  return g;
}

}  // namespace hvqe
