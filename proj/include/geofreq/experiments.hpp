#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "geofreq/asymptotics.hpp"
#include "geofreq/volumes.hpp"

namespace geofreq {

/// One cell of a (g, lambda) grid experiment. All real-valued fields are held
/// at `precision_digits` working precision; lambda_actual = n/g exactly, and
/// every derived quantity (f, prediction, epsilon) uses lambda_actual, never
/// the requested lambda.
struct SweepRecord {
  long g = 0;
  long n = 0;
  Rational lambda_requested;
  Rational lambda_actual;
  Rational ratio;            // exact (1/4) num/den
  Real ratio_exact_log2;
  Real prediction_log2;
  Real normalized_ratio;     // ratio * 4^g * sqrt(3 pi g / 2)
  Real f_value;
  Real epsilon;              // ratio/prediction - 1, computed log-scale
  int precision_digits = 30;
};

/// Grid description: strictly ascending genera, nonnegative exact lambda
/// ratios; n is realized per cell as round(lambda*g), ties to even.
struct SweepSpec {
  std::vector<long> g_values;
  std::vector<Rational> lambda_values;
  int precision_digits = 30;
};

/// Exact ratio vs. conjectured prediction for one (g, n) cell.
inline SweepRecord epsilon_of(long g, long n, int digits) {
  SurfaceClass s(g, n);
  mpfr_prec_t prec = bits_for_digits(digits);

  SweepRecord rec;
  rec.g = g;
  rec.n = n;
  rec.lambda_requested = s.lambda;
  rec.lambda_actual = s.lambda;
  rec.ratio = ratio_exact(s);
  rec.precision_digits = digits;

  rec.ratio_exact_log2 = log2_of_exact(rec.ratio, digits).log2_magnitude();
  rec.prediction_log2 = detail::prediction_log2(Real(g, prec), Real(s.lambda, prec), prec);
  rec.f_value = f_lambda_real(Real(s.lambda, prec), prec);

  Real three(3, prec), two(2, prec);
  Real scale = (three * Real::pi(prec) * Real(g, prec) / two).sqrt();
  rec.normalized_ratio = (rec.ratio_exact_log2 + two * Real(g, prec)).exp2() * scale;
  rec.epsilon = (rec.ratio_exact_log2 - rec.prediction_log2).exp2() - Real(1, prec);
  return rec;
}

namespace detail {

inline void validate_spec(const SweepSpec& spec) {
  if (spec.g_values.empty()) throw std::invalid_argument("SweepSpec: g_values must be nonempty");
  for (std::size_t i = 0; i + 1 < spec.g_values.size(); ++i)
    if (spec.g_values[i] >= spec.g_values[i + 1])
      throw std::invalid_argument("SweepSpec: g_values must be strictly ascending");
  if (spec.lambda_values.empty())
    throw std::invalid_argument("SweepSpec: lambda_values must be nonempty");
  for (const Rational& l : spec.lambda_values)
    if (l.sign() < 0) throw std::invalid_argument("SweepSpec: lambda values must be nonnegative");
}

}  // namespace detail

/// Evaluates the grid as an order-preserving parallel map: one record per
/// (g, lambda) cell, emitted in (g, lambda) lexicographic order (the lambda
/// axis is sorted ascending). Output is a pure function of the spec,
/// bit-identical across runs and thread counts. `max_threads` 0 means
/// hardware concurrency.
inline std::vector<SweepRecord> run_sweep(const SweepSpec& spec, unsigned max_threads = 0) {
  detail::validate_spec(spec);

  std::vector<Rational> lambdas = spec.lambda_values;
  std::stable_sort(lambdas.begin(), lambdas.end());

  struct Cell {
    long g;
    Rational lambda;
    long n;
  };
  std::vector<Cell> cells;
  cells.reserve(spec.g_values.size() * lambdas.size());
  for (long g : spec.g_values)
    for (const Rational& l : lambdas) cells.push_back(Cell{g, l, (l * Rational(g)).round_half_even()});

  std::vector<std::optional<SweepRecord>> results(cells.size());
  std::vector<std::string> failures(cells.size());

  unsigned hw = std::thread::hardware_concurrency();
  unsigned workers = max_threads != 0 ? max_threads : (hw != 0 ? hw : 1);
  // The mpfr constant caches must be thread-local for concurrent use.
  if (!mpfr_buildopt_tls_p()) workers = 1;
  workers = std::min<unsigned>(workers, static_cast<unsigned>(cells.size()));

  std::atomic<std::size_t> next{0};
  auto work = [&]() {
    for (std::size_t i = next.fetch_add(1); i < cells.size(); i = next.fetch_add(1)) {
      try {
        SweepRecord rec = epsilon_of(cells[i].g, cells[i].n, spec.precision_digits);
        rec.lambda_requested = cells[i].lambda;
        results[i] = std::move(rec);
      } catch (const std::exception& e) {
        failures[i] = e.what();
      }
    }
  };

  if (workers <= 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned t = 0; t < workers; ++t) pool.emplace_back(work);
    for (std::thread& t : pool) t.join();
  }

  std::vector<SweepRecord> records;
  records.reserve(cells.size());
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (!results[i])
      throw std::runtime_error("run_sweep: cell (g = " + std::to_string(cells[i].g) +
                               ", n = " + std::to_string(cells[i].n) + ") failed: " + failures[i]);
    records.push_back(std::move(*results[i]));
  }
  return records;
}

/// Per-lambda convergence digest of a sweep.
struct ConvergenceSeries {
  Rational lambda;                              // requested lambda
  std::vector<std::pair<long, double>> abs_epsilon;  // (g, |epsilon|), g ascending
  bool analyzable = false;                      // needs >= 2 distinct g
  bool strictly_decreasing = false;
  int nonstrict_steps = 0;                      // steps with |eps| not strictly dropping
  bool decay_defined = false;                   // |eps|(g_min) > 0
  double decay_ratio = 0.0;                     // |eps|(g_max) / |eps|(g_min)
};

struct ConvergenceReport {
  std::vector<ConvergenceSeries> series;
  double uniformity_gap = 0.0;  // max over lambda of |epsilon| at the largest g
};

/// Groups records by requested lambda and reports monotonicity, decay ratios
/// and the uniformity gap.
inline ConvergenceReport analyze_convergence(const std::vector<SweepRecord>& records) {
  ConvergenceReport report;
  for (const SweepRecord& rec : records) {
    auto it = std::find_if(report.series.begin(), report.series.end(),
                           [&](const ConvergenceSeries& s) { return s.lambda == rec.lambda_requested; });
    if (it == report.series.end()) {
      report.series.push_back(ConvergenceSeries{rec.lambda_requested, {}, false, false, 0, false, 0.0});
      it = std::prev(report.series.end());
    }
    it->abs_epsilon.emplace_back(rec.g, rec.epsilon.abs().to_double());
  }

  for (ConvergenceSeries& s : report.series) {
    std::sort(s.abs_epsilon.begin(), s.abs_epsilon.end());
    s.analyzable = s.abs_epsilon.size() >= 2;
    if (!s.analyzable) continue;
    s.strictly_decreasing = true;
    for (std::size_t i = 0; i + 1 < s.abs_epsilon.size(); ++i) {
      if (s.abs_epsilon[i + 1].second >= s.abs_epsilon[i].second) {
        s.strictly_decreasing = false;
        ++s.nonstrict_steps;
      }
    }
    double first = s.abs_epsilon.front().second;
    s.decay_defined = first > 0.0;
    if (s.decay_defined) s.decay_ratio = s.abs_epsilon.back().second / first;
    report.uniformity_gap = std::max(report.uniformity_gap, s.abs_epsilon.back().second);
  }
  return report;
}

}  // namespace geofreq
