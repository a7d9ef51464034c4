// Copyright 2026 The sphull Authors
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

#include "sphull/experiments.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <cmath>
#include <exception>
#include <limits>
#include <mutex>
#include <numbers>
#include <thread>

#include "predicates.hpp"
#include "sphull/errors.hpp"
#include "sphull/expectations.hpp"
#include "sphull/hull.hpp"
#include "sphull/metrics.hpp"

namespace sphull {
namespace {

constexpr double kPi = std::numbers::pi;

// Substream keys. Retries use kRetryKey + attempt.
constexpr std::uint64_t kRetryKey = 0x5245545259000000ULL;
constexpr std::uint64_t kChordKey = 0x43484f5244000000ULL;
constexpr std::uint64_t kControlKey = 0x434f4e5452000000ULL;
constexpr int kMaxRetries = 16;
constexpr double kMaxFailureRate = 1e-4;

constexpr std::size_t kStatisticCount = 8;

// Runs fn(trial) for every trial in [0, trials) on `workers` threads. Each
// trial writes only its own output slot, so scheduling cannot leak into the
// results. The first exception is rethrown after all threads have joined.
template <class Fn>
void for_each_trial(long trials, unsigned workers, Fn&& fn) {
  if (workers <= 1 || trials < 2) {
    for (long i = 0; i < trials; ++i) fn(i);
    return;
  }
  workers = static_cast<unsigned>(
      std::min<long>(static_cast<long>(workers), trials));
  const long chunk = std::max<long>(1, trials / (16L * workers));
  std::atomic<long> next{0};
  std::atomic<bool> stop{false};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto work = [&] {
    while (!stop.load(std::memory_order_relaxed)) {
      const long begin = next.fetch_add(chunk);
      if (begin >= trials) return;
      const long end = std::min(trials, begin + chunk);
      try {
        for (long i = begin; i < end; ++i) fn(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!error) error = std::current_exception();
        stop = true;
        return;
      }
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
  for (std::thread& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

// Calls fn(stream) on the trial's own stream; if the draw turns out
// degenerate, redraws from reserved substreams. `failures` counts redraws.
template <class Fn>
auto with_retries(std::uint64_t seed, long trial, int& failures, Fn&& fn) {
  const RandomStream base(seed, static_cast<std::uint64_t>(trial));
  for (int attempt = 0; attempt <= kMaxRetries; ++attempt) {
    RandomStream stream =
        attempt == 0 ? base
                     : base.substream(kRetryKey + static_cast<std::uint64_t>(attempt));
    try {
      return fn(stream);
    } catch (const GeometryError&) {
      ++failures;
    }
  }
  throw Error("trial " + std::to_string(trial) +
              ": every redraw was degenerate");
}

long total_failures(const std::vector<int>& failures) {
  long total = 0;
  for (int f : failures) total += f;
  return total;
}

void check_failure_rate(long failures, long trials) {
  if (static_cast<double>(failures) >
      kMaxFailureRate * static_cast<double>(trials)) {
    throw Error("degenerate draws exceeded 0.01% of trials (" +
                std::to_string(failures) + " of " + std::to_string(trials) +
                ")");
  }
}

void check_trials(const TrialOptions& options) {
  if (options.trials < 1) throw DomainError("trials must be >= 1");
}

bool is_hull_statistic(Statistic s) {
  return s != Statistic::kChordCdf;
}

// Statistics of one trial of run(); NaN marks "not defined for this draw".
struct TrialValues {
  std::array<double, kStatisticCount> value{};
  bool euler_ok = true;
  bool chain_ok = true;
};

bool euler_holds(const PolytopeMetrics& m) {
  if (m.facet_count == 0) return true;
  const long v = static_cast<long>(m.vertex_count);
  const long e = static_cast<long>(m.edge_count);
  const long f = static_cast<long>(m.facet_count);
  return v - e + f == 2 && 2 * e == 3 * f;
}

double small_facet_fraction(const ConvexPolytope3& hull) {
  std::size_t small = 0;
  for (std::size_t i = 0; i < hull.facet_count(); ++i) {
    if (facet_cap_data(hull, i).is_small_facet) ++small;
  }
  return static_cast<double>(small) / static_cast<double>(hull.facet_count());
}

TrialValues run_trial(const ExperimentConfig& config, bool need_hull,
                      RandomStream& rng) {
  constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
  TrialValues out;
  out.value.fill(kNaN);
  const auto wants = [&](Statistic s) {
    return std::find(config.statistics.begin(), config.statistics.end(), s) !=
           config.statistics.end();
  };
  auto slot = [&](Statistic s) -> double& {
    return out.value[static_cast<std::size_t>(s)];
  };

  if (need_hull) {
    const std::vector<Vec3> points = sample_process(config.process, rng);
    PolytopeMetrics m;
    double small_fraction = kNaN;
    if (points.size() >= 3) {
      const ConvexPolytope3 hull = convex_hull(points);
      m = measure(hull);
      if (wants(Statistic::kFacetCaps)) small_fraction = small_facet_fraction(hull);
    } else {
      m = measure_point_set(points);
    }
    slot(Statistic::kWidth) = m.width;
    slot(Statistic::kArea) = m.area;
    slot(Statistic::kVolume) = m.volume;
    slot(Statistic::kEdgeLength) = m.edge_length;
    if (m.facet_count > 0) {
      slot(Statistic::kAcuteFraction) = static_cast<double>(m.acute_facets) /
                                        static_cast<double>(m.facet_count);
    }
    slot(Statistic::kFacetCaps) = small_fraction;
    if (!points.empty()) {
      double best = std::numeric_limits<double>::infinity();
      const Vec3 pole{0.0, 0.0, 1.0};
      for (const Vec3& x : points) best = std::min(best, distance(x, pole));
      slot(Statistic::kMinDistance) = best;
    }
    out.euler_ok = euler_holds(m);
    if (config.process.kind != ProcessKind::kHomeoid) {
      out.chain_ok = chain_is_decreasing(normalized_volume_chain(m));
    }
  }
  if (wants(Statistic::kChordCdf)) {
    RandomStream chord_rng = rng.substream(kChordKey);
    const auto [a, b] = sample_chord(chord_rng);
    slot(Statistic::kChordCdf) = distance(a, b);
  }
  return out;
}

double acute_facet_fraction(const PolytopeMetrics& m) {
  return static_cast<double>(m.acute_facets) /
         static_cast<double>(m.facet_count);
}

UnitVec3 north_pole() { return UnitVec3(0.0, 0.0, 1.0); }

// Orthonormal basis of the plane orthogonal to unit vector n.
std::pair<Vec3, Vec3> plane_basis(const Vec3& n) {
  const Vec3 helper = std::abs(n.x) < 0.9 ? Vec3{1.0, 0.0, 0.0}
                                          : Vec3{0.0, 1.0, 0.0};
  Vec3 u = cross(n, helper);
  u = u / norm(u);
  return {u, cross(n, u)};
}

}  // namespace

std::string to_string(Statistic s) {
  switch (s) {
    case Statistic::kWidth:
      return "width";
    case Statistic::kArea:
      return "area";
    case Statistic::kVolume:
      return "volume";
    case Statistic::kEdgeLength:
      return "edge_length";
    case Statistic::kAcuteFraction:
      return "acute_fraction";
    case Statistic::kMinDistance:
      return "min_distance";
    case Statistic::kFacetCaps:
      return "facet_caps";
    case Statistic::kChordCdf:
      return "chord_cdf";
  }
  return "unknown";
}

Statistic parse_statistic(const std::string& name) {
  std::string key = name;
  std::replace(key.begin(), key.end(), '-', '_');
  for (std::size_t i = 0; i < kStatisticCount; ++i) {
    const auto s = static_cast<Statistic>(i);
    if (to_string(s) == key) return s;
  }
  if (key == "min_dist") return Statistic::kMinDistance;
  throw DomainError("unknown statistic '" + name + "'");
}

unsigned resolve_workers(int requested) {
  if (requested > 0) return static_cast<unsigned>(requested);
  return std::max(1u, std::thread::hardware_concurrency());
}

bool RunResult::all_pass() const {
  for (const StatisticResult& s : statistics) {
    if (s.report && !s.report->pass) return false;
  }
  return euler_violations == 0 && chain_violations == 0;
}

std::optional<double> analytic_value(Statistic s, const ProcessSpec& process) {
  if (s == Statistic::kChordCdf) return 4.0 / 3.0;
  if (s == Statistic::kFacetCaps) return std::nullopt;
  const long n = process.n;
  switch (process.kind) {
    case ProcessKind::kUniform:
      switch (s) {
        case Statistic::kWidth:
          return expected_iv_uniform(IntrinsicIndex::kWidth, n);
        case Statistic::kArea:
          return expected_iv_uniform(IntrinsicIndex::kArea, n);
        case Statistic::kVolume:
          return expected_iv_uniform(IntrinsicIndex::kVolume, n);
        case Statistic::kEdgeLength:
          return n >= 3 ? expected_edge_length_uniform(n) : 0.0;
        case Statistic::kAcuteFraction:
          if (n >= 3) return 0.5;
          return std::nullopt;
        case Statistic::kMinDistance:
          return expected_min_distance(n);
        default:
          return std::nullopt;
      }
    case ProcessKind::kSymmetric:
      if (n < 3) return std::nullopt;
      switch (s) {
        case Statistic::kWidth:
          return expected_iv_symmetric(IntrinsicIndex::kWidth, n);
        case Statistic::kArea:
          return expected_iv_symmetric(IntrinsicIndex::kArea, n);
        case Statistic::kVolume:
          return expected_iv_symmetric(IntrinsicIndex::kVolume, n);
        default:
          return std::nullopt;
      }
    case ProcessKind::kPoisson:
      switch (s) {
        case Statistic::kWidth:
          return expected_iv_poisson(IntrinsicIndex::kWidth, process.rho);
        case Statistic::kArea:
          return expected_iv_poisson(IntrinsicIndex::kArea, process.rho);
        case Statistic::kVolume:
          return expected_iv_poisson(IntrinsicIndex::kVolume, process.rho);
        case Statistic::kEdgeLength:
          return expected_edge_length_poisson(process.rho);
        default:
          return std::nullopt;
      }
    case ProcessKind::kHomeoid: {
      const Ellipsoid& e = *process.ellipsoid;
      switch (s) {
        case Statistic::kWidth:
          return expected_iv_ellipsoid(IntrinsicIndex::kWidth, n, e);
        case Statistic::kArea:
          return expected_iv_ellipsoid(IntrinsicIndex::kArea, n, e);
        case Statistic::kVolume:
          return expected_iv_ellipsoid(IntrinsicIndex::kVolume, n, e);
        case Statistic::kEdgeLength:
          if (n >= 3) return expected_edge_length_ellipsoid(n, e);
          return std::nullopt;
        default:
          return std::nullopt;
      }
    }
  }
  return std::nullopt;
}

RunResult run(const ExperimentConfig& config) {
  if (config.trials < 1) throw DomainError("run: trials must be >= 1");
  if (config.histogram_bins < 2) throw DomainError("run: bins must be >= 2");
  if (config.statistics.empty()) throw DomainError("run: no statistics requested");
  const bool need_hull = std::any_of(config.statistics.begin(),
                                     config.statistics.end(), is_hull_statistic);
  if (need_hull && config.process.kind == ProcessKind::kSymmetric &&
      config.process.n == 2) {
    throw DomainError("run: two antipodal pairs are always coplanar");
  }
  if (config.process.kind == ProcessKind::kHomeoid &&
      std::find(config.statistics.begin(), config.statistics.end(),
                Statistic::kFacetCaps) != config.statistics.end()) {
    throw DomainError("run: facet caps need points on the unit sphere");
  }

  const long m = config.trials;
  std::vector<TrialValues> values(static_cast<std::size_t>(m));
  std::vector<int> failures(static_cast<std::size_t>(m), 0);
  for_each_trial(m, resolve_workers(config.workers), [&](long i) {
    const auto idx = static_cast<std::size_t>(i);
    values[idx] = with_retries(config.seed, i, failures[idx],
                               [&](RandomStream& rng) {
                                 return run_trial(config, need_hull, rng);
                               });
  });

  RunResult result;
  result.trials = m;
  result.failed_attempts = total_failures(failures);
  check_failure_rate(result.failed_attempts, m);
  for (const TrialValues& v : values) {
    if (need_hull && !v.euler_ok) ++result.euler_violations;
    if (need_hull && !v.chain_ok) ++result.chain_violations;
  }
  for (Statistic s : config.statistics) {
    StatisticResult r;
    r.statistic = s;
    r.samples.reserve(values.size());
    for (const TrialValues& v : values) {
      const double x = v.value[static_cast<std::size_t>(s)];
      if (!std::isnan(x)) r.samples.push_back(x);
    }
    r.summary = summarize(r.samples, config.histogram_bins);
    if (const auto target = analytic_value(s, config.process);
        target && r.summary.count > 0) {
      r.report = make_zreport(to_string(s), r.summary, *target);
    }
    result.statistics.push_back(std::move(r));
  }
  return result;
}

AcuteResult acute_fraction(long n, const TrialOptions& options) {
  if (n < 3) throw DomainError("acute_fraction: requires n >= 3");
  check_trials(options);
  std::vector<double> fractions(static_cast<std::size_t>(options.trials));
  std::vector<int> failures(fractions.size(), 0);
  for_each_trial(options.trials, resolve_workers(options.workers), [&](long i) {
    const auto idx = static_cast<std::size_t>(i);
    fractions[idx] = with_retries(options.seed, i, failures[idx],
                                  [&](RandomStream& rng) {
                                    const auto pts = sample_uniform_sphere(
                                        static_cast<std::size_t>(n), rng);
                                    return acute_facet_fraction(
                                        measure(convex_hull(pts)));
                                  });
  });
  check_failure_rate(total_failures(failures), options.trials);
  AcuteResult r;
  r.summary = summarize(fractions);
  r.report = make_zreport("acute_fraction", r.summary, 0.5);
  return r;
}

AcuteResult planar_acute_control(const TrialOptions& options) {
  check_trials(options);
  std::vector<double> acute(static_cast<std::size_t>(options.trials));
  for_each_trial(options.trials, resolve_workers(options.workers), [&](long i) {
    RandomStream rng(options.seed, static_cast<std::uint64_t>(i));
    std::array<Vec3, 3> p;
    for (Vec3& x : p) {
      const double phi = 2.0 * kPi * rng.uniform();
      x = {std::cos(phi), std::sin(phi), 0.0};
    }
    acute[static_cast<std::size_t>(i)] =
        triangle_is_acute(p[0], p[1], p[2]) ? 1.0 : 0.0;
  });
  AcuteResult r;
  r.summary = summarize(acute);
  r.report = make_zreport("planar_acute_fraction", r.summary, 0.25);
  return r;
}

bool ShapeSizeResult::all_pass() const {
  if (!chi_square_pass || !circumcircle_control.pass) return false;
  return std::all_of(buckets.begin(), buckets.end(),
                     [](const BucketRow& b) { return b.pass; });
}

ShapeSizeResult shape_size_independence(long n, std::size_t buckets,
                                        const TrialOptions& options) {
  if (n < 4) throw DomainError("shape_size_independence: requires n >= 4");
  if (buckets < 2) throw DomainError("shape_size_independence: buckets >= 2");
  check_trials(options);

  struct FacetSample {
    double radius;
    bool acute;
  };
  struct HullSample {
    std::vector<FacetSample> facets;
    double control_fraction = 0.0;
  };
  const auto m = static_cast<std::size_t>(options.trials);
  std::vector<HullSample> hulls(m);
  std::vector<int> failures(m, 0);
  for_each_trial(options.trials, resolve_workers(options.workers), [&](long i) {
    const auto idx = static_cast<std::size_t>(i);
    hulls[idx] = with_retries(options.seed, i, failures[idx], [&](RandomStream& rng) {
      const auto pts = sample_uniform_sphere(static_cast<std::size_t>(n), rng);
      const ConvexPolytope3 hull = convex_hull(pts);
      HullSample out;
      out.facets.reserve(hull.facet_count());
      RandomStream control = rng.substream(kControlKey);
      std::size_t control_acute = 0;
      const auto& v = hull.vertices();
      for (std::size_t f = 0; f < hull.facet_count(); ++f) {
        const FacetCapData cap = facet_cap_data(hull, f);
        out.facets.push_back({cap.circumradius, cap.is_acute});
        // Redraw the vertices uniformly on the facet's circumcircle, whose
        // center is the foot of the perpendicular from the origin.
        const Facet& t = hull.facets()[f];
        Vec3 normal = cross(v[t[1]] - v[t[0]], v[t[2]] - v[t[0]]);
        normal = normal / norm(normal);
        const Vec3 center = dot(normal, v[t[0]]) * normal;
        const auto [u, w] = plane_basis(normal);
        std::array<Vec3, 3> q;
        for (Vec3& x : q) {
          const double phi = 2.0 * kPi * control.uniform();
          x = center + cap.circumradius * (std::cos(phi) * u + std::sin(phi) * w);
        }
        if (triangle_is_acute(q[0], q[1], q[2])) ++control_acute;
      }
      out.control_fraction = static_cast<double>(control_acute) /
                             static_cast<double>(hull.facet_count());
      return out;
    });
  });
  check_failure_rate(total_failures(failures), options.trials);

  // Quantile edges of the pooled circumradii.
  std::vector<double> radii;
  for (const HullSample& h : hulls) {
    for (const FacetSample& f : h.facets) radii.push_back(f.radius);
  }
  std::sort(radii.begin(), radii.end());
  std::vector<double> edges(buckets + 1);
  edges.front() = radii.front();
  edges.back() = radii.back();
  for (std::size_t b = 1; b < buckets; ++b) {
    edges[b] = radii[b * radii.size() / buckets];
  }
  const auto bucket_of = [&](double r) {
    const auto it = std::upper_bound(edges.begin() + 1, edges.end() - 1, r);
    return static_cast<std::size_t>(it - (edges.begin() + 1));
  };

  // Pass 1: pooled fractions. Pass 2: cluster-robust variance, one cluster
  // per hull: var = m/(m-1) * sum_h (a_hb - p_b n_hb)^2 / N_b^2.
  std::vector<double> acute(buckets, 0.0), total(buckets, 0.0);
  for (const HullSample& h : hulls) {
    for (const FacetSample& f : h.facets) {
      const std::size_t b = bucket_of(f.radius);
      total[b] += 1.0;
      if (f.acute) acute[b] += 1.0;
    }
  }
  std::vector<double> p(buckets), resid(buckets, 0.0);
  for (std::size_t b = 0; b < buckets; ++b) {
    p[b] = total[b] > 0.0 ? acute[b] / total[b] : 0.0;
  }
  std::vector<double> a_h(buckets), n_h(buckets);
  for (const HullSample& h : hulls) {
    std::fill(a_h.begin(), a_h.end(), 0.0);
    std::fill(n_h.begin(), n_h.end(), 0.0);
    for (const FacetSample& f : h.facets) {
      const std::size_t b = bucket_of(f.radius);
      n_h[b] += 1.0;
      if (f.acute) a_h[b] += 1.0;
    }
    for (std::size_t b = 0; b < buckets; ++b) {
      const double d = a_h[b] - p[b] * n_h[b];
      resid[b] += d * d;
    }
  }
  const double md = static_cast<double>(m);
  const double correction = m > 1 ? md / (md - 1.0) : 1.0;

  ShapeSizeResult result;
  for (std::size_t b = 0; b < buckets; ++b) {
    BucketRow row;
    row.lo = edges[b];
    row.hi = edges[b + 1];
    row.count = static_cast<std::uint64_t>(total[b]);
    row.observed = p[b];
    row.expected = 0.5;
    row.std_error =
        total[b] > 0.0 ? std::sqrt(correction * resid[b]) / total[b] : 0.0;
    const ZReport z = make_zreport("acute_fraction", row.observed, row.expected,
                                   row.std_error);
    row.z = z.z;
    row.pass = z.pass;
    result.chi_square += row.z * row.z;
    result.buckets.push_back(row);
  }
  result.chi_square_critical =
      chi_square_quantile(static_cast<double>(buckets), 0.99);
  result.chi_square_pass = result.chi_square <= result.chi_square_critical;

  std::vector<double> control(m);
  for (std::size_t i = 0; i < m; ++i) control[i] = hulls[i].control_fraction;
  result.circumcircle_control =
      make_zreport("circumcircle_acute_fraction", summarize(control), 0.25);
  return result;
}

bool FacetProbabilityResult::all_pass() const {
  return std::all_of(buckets.begin(), buckets.end(),
                     [](const BucketRow& b) { return b.pass; });
}

FacetProbabilityResult facet_probability_check(long n, std::size_t buckets,
                                               const TrialOptions& options) {
  if (n < 3) throw DomainError("facet_probability_check: requires n >= 3");
  if (buckets < 1) throw DomainError("facet_probability_check: buckets >= 1");
  check_trials(options);

  struct TripleSample {
    double beta;
    bool avoided;
  };
  const auto m = static_cast<std::size_t>(options.trials);
  std::vector<TripleSample> samples(m);
  std::vector<int> failures(m, 0);
  const Vec3 origin{0.0, 0.0, 0.0};
  for_each_trial(options.trials, resolve_workers(options.workers), [&](long i) {
    const auto idx = static_cast<std::size_t>(i);
    samples[idx] = with_retries(options.seed, i, failures[idx], [&](RandomStream& rng) {
      const auto pts = sample_uniform_sphere(static_cast<std::size_t>(n), rng);
      const Vec3& a = pts[0];
      const Vec3& b = pts[1];
      const Vec3& c = pts[2];
      const FacetCapData cap = triangle_cap_data(a, b, c);
      // The small cap is the side of the plane away from the center.
      const int center_side = detail::orient3d(a, b, c, origin);
      bool avoided = true;
      for (std::size_t j = 3; j < pts.size() && avoided; ++j) {
        if (detail::orient3d(a, b, c, pts[j]) == -center_side) avoided = false;
      }
      return TripleSample{cap.small_cap_fraction, avoided};
    });
  });
  check_failure_rate(total_failures(failures), options.trials);

  const double width = 0.5 / static_cast<double>(buckets);
  std::vector<Accumulator> observed(buckets), expected(buckets), diff(buckets);
  const double power = static_cast<double>(n - 3);
  for (const TripleSample& s : samples) {
    const auto b = std::min(buckets - 1, static_cast<std::size_t>(s.beta / width));
    const double target = std::pow(1.0 - s.beta, power);
    const double hit = s.avoided ? 1.0 : 0.0;
    observed[b].add(hit);
    expected[b].add(target);
    diff[b].add(hit - target);
  }

  FacetProbabilityResult result;
  for (std::size_t b = 0; b < buckets; ++b) {
    BucketRow row;
    row.lo = width * static_cast<double>(b);
    row.hi = width * static_cast<double>(b + 1);
    row.count = observed[b].count();
    row.observed = observed[b].mean();
    row.expected = expected[b].mean();
    const SummaryStats d = summarize(diff[b]);
    row.std_error = d.std_error;
    if (row.count == 0) {
      row.pass = true;
    } else {
      const ZReport z = make_zreport("avoid_probability", d.mean, 0.0, d.std_error);
      row.z = z.z;
      row.pass = z.pass;
    }
    result.buckets.push_back(row);
  }
  return result;
}

double chord_cdf(double length) {
  if (length <= 0.0) return 0.0;
  if (length >= 2.0) return 1.0;
  return 0.25 * length * length;
}

ChordResult chord_cdf_test(const TrialOptions& options, std::size_t grid_points) {
  check_trials(options);
  if (grid_points < 2) throw DomainError("chord_cdf_test: grid_points >= 2");
  std::vector<double> lengths(static_cast<std::size_t>(options.trials));
  for_each_trial(options.trials, resolve_workers(options.workers), [&](long i) {
    RandomStream rng(options.seed, static_cast<std::uint64_t>(i));
    const auto [a, b] = sample_chord(rng);
    lengths[static_cast<std::size_t>(i)] = distance(a, b);
  });
  ChordResult r;
  r.samples = lengths.size();
  r.ks = ks_statistic(lengths, chord_cdf);
  r.critical = ks_critical_99(r.samples);
  r.pass = r.ks < r.critical;
  std::sort(lengths.begin(), lengths.end());
  for (std::size_t g = 0; g < grid_points; ++g) {
    const double l = 2.0 * static_cast<double>(g) /
                     static_cast<double>(grid_points - 1);
    const auto below = std::upper_bound(lengths.begin(), lengths.end(), l) -
                       lengths.begin();
    r.grid.push_back(l);
    r.empirical.push_back(static_cast<double>(below) /
                          static_cast<double>(lengths.size()));
    r.analytic.push_back(chord_cdf(l));
  }
  return r;
}

ScatterResult moment_scatter(const std::vector<long>& n_list, long trials_each,
                             std::uint64_t seed, int workers,
                             std::size_t curve_points) {
  if (n_list.empty()) throw DomainError("moment_scatter: empty n list");
  if (trials_each < 1) throw DomainError("moment_scatter: trials_each >= 1");
  if (curve_points < 2) throw DomainError("moment_scatter: curve_points >= 2");
  long max_n = 0;
  for (long n : n_list) {
    if (n < 4) throw DomainError("moment_scatter: every n must be >= 4");
    max_n = std::max(max_n, n);
  }

  ScatterResult result;
  for (long n : n_list) {
    // Each n gets its own family of streams so that lists can be extended
    // without changing existing rows.
    const std::uint64_t n_seed = mix64(seed ^ mix64(static_cast<std::uint64_t>(n)));
    std::vector<PolytopeMetrics> metrics(static_cast<std::size_t>(trials_each));
    std::vector<int> failures(metrics.size(), 0);
    for_each_trial(trials_each, resolve_workers(workers), [&](long i) {
      const auto idx = static_cast<std::size_t>(i);
      metrics[idx] = with_retries(n_seed, i, failures[idx], [&](RandomStream& rng) {
        const auto pts = sample_uniform_sphere(static_cast<std::size_t>(n), rng);
        return measure(convex_hull(pts));
      });
    });
    check_failure_rate(total_failures(failures), trials_each);

    std::vector<double> w, a, v;
    for (long i = 0; i < trials_each; ++i) {
      const PolytopeMetrics& pm = metrics[static_cast<std::size_t>(i)];
      ScatterRow row{n, i, pm.width, pm.area, pm.volume,
                     chain_is_decreasing(normalized_volume_chain(pm))};
      if (!row.chain_ok) ++result.chain_violations;
      result.rows.push_back(row);
      w.push_back(pm.width);
      a.push_back(pm.area);
      v.push_back(pm.volume);
    }
    const std::string tag = "(n=" + std::to_string(n) + ")";
    result.reports.push_back(make_zreport(
        "width" + tag, summarize(w), expected_iv_uniform(IntrinsicIndex::kWidth, n)));
    result.reports.push_back(make_zreport(
        "area" + tag, summarize(a), expected_iv_uniform(IntrinsicIndex::kArea, n)));
    result.reports.push_back(make_zreport(
        "volume" + tag, summarize(v), expected_iv_uniform(IntrinsicIndex::kVolume, n)));
  }

  // Geometric spacing in t from 3 to max n.
  const double t_max = static_cast<double>(max_n);
  for (std::size_t i = 0; i < curve_points; ++i) {
    const double frac = static_cast<double>(i) / static_cast<double>(curve_points - 1);
    const double t = i + 1 == curve_points ? t_max : 3.0 * std::pow(t_max / 3.0, frac);
    const IntrinsicTriple g = moment_curve(t);
    result.curve.push_back({t, g.width, g.area, g.volume});
  }
  return result;
}

std::vector<DeficiencyRow> deficiency_table(const std::vector<long>& n_list) {
  std::vector<DeficiencyRow> rows;
  rows.reserve(n_list.size());
  for (long n : n_list) rows.push_back(deficiency_row(n));
  return rows;
}

bool MinDistanceResult::all_pass() const {
  return std::all_of(reports.begin(), reports.end(),
                     [](const ZReport& r) { return r.pass; });
}

MinDistanceResult min_distance_experiment(long n, const TrialOptions& options) {
  if (n < 1) throw DomainError("min_distance_experiment: requires n >= 1");
  check_trials(options);
  const auto m = static_cast<std::size_t>(options.trials);
  std::vector<PoleDistance> d(m);
  const UnitVec3 pole = north_pole();
  for_each_trial(options.trials, resolve_workers(options.workers), [&](long i) {
    RandomStream rng(options.seed, static_cast<std::uint64_t>(i));
    const auto pts = sample_uniform_sphere(static_cast<std::size_t>(n), rng);
    d[static_cast<std::size_t>(i)] = min_distance_to_pole(pts, pole);
  });
  std::vector<double> r(m), phi(m), r2(m);
  for (std::size_t i = 0; i < m; ++i) {
    r[i] = d[i].euclidean;
    phi[i] = d[i].spherical;
    r2[i] = d[i].euclidean * d[i].euclidean;
  }
  MinDistanceResult out;
  out.euclidean = summarize(r);
  out.spherical = summarize(phi);
  out.squared = summarize(r2);
  out.reports.push_back(
      make_zreport("min_distance", out.euclidean, expected_min_distance(n)));
  out.reports.push_back(
      make_zreport("min_spherical", out.spherical, expected_min_spherical(n)));
  out.reports.push_back(make_zreport("min_distance_sq", out.squared,
                                     min_distance_moment(n, 2)));
  return out;
}

ConjectureReport conjecture_probe(long n, const TrialOptions& options) {
  if (n < 4) throw DomainError("conjecture_probe: requires n >= 4");
  check_trials(options);
  std::vector<PolytopeMetrics> metrics(static_cast<std::size_t>(options.trials));
  std::vector<int> failures(metrics.size(), 0);
  for_each_trial(options.trials, resolve_workers(options.workers), [&](long i) {
    const auto idx = static_cast<std::size_t>(i);
    metrics[idx] = with_retries(options.seed, i, failures[idx], [&](RandomStream& rng) {
      const auto pts = sample_uniform_sphere(static_cast<std::size_t>(n), rng);
      return measure(convex_hull(pts));
    });
  });
  check_failure_rate(total_failures(failures), options.trials);
  ConjectureReport r;
  r.n = n;
  for (const PolytopeMetrics& pm : metrics) {
    r.max_width = std::max(r.max_width, pm.width);
    r.max_area = std::max(r.max_area, pm.area);
    r.max_volume = std::max(r.max_volume, pm.volume);
  }
  r.model = model_quantities(n);
  r.width_exceeded = r.max_width > r.model.width;
  r.area_exceeded = r.max_area > r.model.area;
  r.volume_exceeded = r.max_volume > r.model.volume;
  return r;
}

}  // namespace sphull
