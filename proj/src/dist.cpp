/*
Copyright 2026 the hoct authors

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
#include "hoct/dist.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace hoct {

std::int64_t count_self_collisions(std::vector<std::int64_t> samples) {
  std::sort(samples.begin(), samples.end());
  std::int64_t pairs = 0;
  std::size_t i = 0;
  while (i < samples.size()) {
    std::size_t j = i;
    while (j < samples.size() && samples[j] == samples[i]) ++j;
    std::int64_t run = static_cast<std::int64_t>(j - i);
    pairs += run * (run - 1) / 2;
    i = j;
  }
  return pairs;
}

CollisionStats count_collisions(std::vector<std::int64_t> p,
                                std::vector<std::int64_t> q) {
  if (p.size() != q.size())
    throw std::invalid_argument("mismatched sample sizes");
  CollisionStats stats;
  stats.m = static_cast<std::int64_t>(p.size());
  std::sort(p.begin(), p.end());
  std::sort(q.begin(), q.end());

  auto runs = [](const std::vector<std::int64_t>& v, std::size_t i) {
    std::size_t j = i;
    while (j < v.size() && v[j] == v[i]) ++j;
    return j;
  };
  for (std::size_t i = 0; i < p.size();) {
    std::size_t j = runs(p, i);
    std::int64_t run = static_cast<std::int64_t>(j - i);
    stats.self_p += run * (run - 1) / 2;
    i = j;
  }
  for (std::size_t i = 0; i < q.size();) {
    std::size_t j = runs(q, i);
    std::int64_t run = static_cast<std::int64_t>(j - i);
    stats.self_q += run * (run - 1) / 2;
    i = j;
  }
  std::size_t i = 0, j = 0;
  while (i < p.size() && j < q.size()) {
    if (p[i] < q[j]) {
      ++i;
    } else if (p[i] > q[j]) {
      ++j;
    } else {
      std::size_t pi = runs(p, i), qj = runs(q, j);
      stats.cross += static_cast<std::int64_t>(pi - i) *
                     static_cast<std::int64_t>(qj - j);
      i = pi;
      j = qj;
    }
  }
  return stats;
}

double estimate_l2_norm_sq(const std::vector<std::int64_t>& samples) {
  std::int64_t m = static_cast<std::int64_t>(samples.size());
  if (m < 2)
    throw std::invalid_argument("norm estimator needs at least 2 samples");
  std::int64_t coll = count_self_collisions(samples);
  return static_cast<double>(coll) /
         (static_cast<double>(m) * static_cast<double>(m - 1) / 2.0);
}

TestVerdict l2_norm_test(const std::vector<std::int64_t>& samples,
                         double theta) {
  double est = estimate_l2_norm_sq(samples);
  return est <= theta / 2.0 ? TestVerdict::accept : TestVerdict::reject;
}

ClosenessResult l2_closeness_test(const std::vector<std::int64_t>& p,
                                  const std::vector<std::int64_t>& q,
                                  double xi, double b, double c31,
                                  double delta, bool strict) {
  if (xi <= 0 || delta <= 0)
    throw std::invalid_argument("xi and delta must be positive");
  if (p.size() != q.size())
    throw std::invalid_argument("mismatched sample sizes");
  std::int64_t m = static_cast<std::int64_t>(p.size());
  if (m < 2) throw std::invalid_argument("closeness test needs m >= 2");
  if (strict) {
    double bound = c31 * std::sqrt(b) / xi * std::log(1.0 / delta);
    if (static_cast<double>(m) <= bound)
      throw std::invalid_argument(
          "closeness test: m below the guarantee bound");
  }
  CollisionStats stats = count_collisions(p, q);
  double pairs = static_cast<double>(m) * static_cast<double>(m - 1) / 2.0;
  double est_p = static_cast<double>(stats.self_p) / pairs;
  double est_q = static_cast<double>(stats.self_q) / pairs;
  double est_cross = static_cast<double>(stats.cross) /
                     (static_cast<double>(m) * static_cast<double>(m));
  ClosenessResult out;
  out.estimate = est_p + est_q - 2.0 * est_cross;
  out.verdict =
      out.estimate <= 2.0 * xi ? TestVerdict::accept : TestVerdict::reject;
  return out;
}

}  // namespace hoct
