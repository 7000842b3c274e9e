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
#pragma once

#include <cstdint>
#include <vector>

namespace hoct {

enum class TestVerdict { accept, reject };

/// Collision counts over sample multisets. self = equal unordered pairs
/// within one multiset; cross = equal ordered pairs across two multisets of
/// equal size.
struct CollisionStats {
  std::int64_t m = 0;
  std::int64_t self_p = 0;
  std::int64_t self_q = 0;
  std::int64_t cross = 0;
};

/// Counts collisions in O(m log m); inputs need not be sorted.
std::int64_t count_self_collisions(std::vector<std::int64_t> samples);
CollisionStats count_collisions(std::vector<std::int64_t> p,
                                std::vector<std::int64_t> q);

/// Unbiased estimator of ||p||_2^2: self-collision fraction over C(m, 2)
/// pairs. Requires m >= 2.
double estimate_l2_norm_sq(const std::vector<std::int64_t>& samples);

/// Promise tester for the l2 norm: the guarantee distinguishes
/// ||p||^2 <= theta/4 from ||p||^2 > theta (with error 16*sqrt(n)/m);
/// inside the gap either verdict is allowed. The decision threshold sits at
/// the gap midpoint theta/2.
TestVerdict l2_norm_test(const std::vector<std::int64_t>& samples,
                         double theta);

struct ClosenessResult {
  TestVerdict verdict = TestVerdict::reject;
  double estimate = 0.0;  // unbiased estimate of ||p - q||_2^2
};

/// Promise tester for l2 closeness: accepts when ||p-q||^2 <= xi, rejects
/// when >= 4*xi; threshold at the midpoint 2*xi. When strict is set, the
/// sample-size precondition m > c31 * sqrt(b)/xi * ln(1/delta) is enforced
/// (paper-mode guarantees are void below it); practical mode passes strict
/// = false. Both sample sets must have the same size.
ClosenessResult l2_closeness_test(const std::vector<std::int64_t>& p,
                                  const std::vector<std::int64_t>& q,
                                  double xi, double b, double c31,
                                  double delta, bool strict);

}  // namespace hoct
