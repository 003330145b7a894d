// Copyright 2026 The qotto Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "doctest.h"

#include <sstream>

#include "qotto/validate.hpp"

using namespace qotto;

namespace {

const PropertyResult &find(const ValidationReport &r, const std::string &name) {
  for (const auto &p : r.results)
    if (p.name == name)
      return p;
  throw std::runtime_error("missing property " + name);
}

} // namespace

TEST_CASE("property suite") {
  const ValidationReport report = run_validation();
  CHECK(report.seconds < 60.0);
  CHECK(report.results.size() >= 20);

  for (const char *name :
       {"core.expm_unitarity", "propagator.unitarity", "propagator.cd_tracking",
        "engine.first_law_closure", "engine.swap_equals_reset", "engine.carnot_bound",
        "engine.sta_work_equals_ideal", "engine.otto_limit_ideal", "engine.eta1_at_least_eta2",
        "sweep.parallel_matches_serial", "engine.na_merges_with_otto"}) {
    INFO(name);
    CHECK(find(report, name).passed);
  }
  CHECK(find(report, "core.expm_unitarity").measured <= 1e-10);
  CHECK(find(report, "engine.first_law_closure").measured <= 1e-9);

  std::ostringstream os;
  print_report(os, report);
  CHECK(os.str().find("propagator.cd_tracking") != std::string::npos);
}

TEST_CASE("a mis-scaled CD field breaks tracking") {
  CHECK(cd_tracking_infidelity(200e-6) < 1e-6);
  CHECK(cd_tracking_infidelity(200e-6, 4096, 0.5) > 1e-2);

  ValidationOptions opts;
  opts.cd_gain = 0.5;
  const ValidationReport report = run_validation(opts);
  CHECK_FALSE(find(report, "propagator.cd_tracking").passed);
  CHECK_FALSE(report.all_passed());
}
