// Copyright 2026 The seedplan Authors.
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

// End-to-end acceptance checks. Prints one PASS/FAIL line per criterion and
// exits non-zero if any criterion fails.

#include <sys/wait.h>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "oracles.hpp"
#include "seedplan/balancer.hpp"
#include "seedplan/geometry.hpp"
#include "seedplan/grounding_io.hpp"
#include "seedplan/loadsim.hpp"
#include "seedplan/packer.hpp"
#include "seedplan/rope2d.hpp"
#include "seedplan/scaling.hpp"
#include "seedplan/videoplan.hpp"

namespace {

using Clock = std::chrono::steady_clock;

// Collects the first few violations of one criterion.
class Check {
 public:
  void Expect(bool ok, const std::string& what) {
    if (ok) return;
    if (failures_.size() < 5) failures_.push_back(what);
    ++count_;
  }
  bool ok() const { return count_ == 0; }
  std::string Summary() const {
    std::string s = std::to_string(count_) + " violation(s)";
    for (const auto& f : failures_) s += "; " + f;
    return s;
  }

 private:
  std::vector<std::string> failures_;
  std::size_t count_ = 0;
};

struct Outcome {
  bool pass;
  std::string detail;
};

Outcome Finish(const Check& c, const std::string& detail) {
  return {c.ok(), c.ok() ? detail : c.Summary()};
}

// 1. Video budget compliance.
Outcome VideoBudget() {
  using namespace seedplan::videoplan;
  const SamplingPolicy policy;
  std::mt19937_64 rng(1001);
  std::uniform_real_distribution<double> dur(0.0, 1e5);
  const double rates[] = {1.0, 2.0, 5.0};
  Check c;
  const auto start = Clock::now();
  int fallbacks = 0;
  for (int i = 0; i < 10000; ++i) {
    double d = dur(rng);
    if (d == 0.0) d = 1e5;  // keep the interval half-open at zero
    const double fps = rates[i % 3];
    const VideoPlan p = PlanVideo(d, fps, policy);
    c.Expect(p.total_tokens <= 81920,
             "over budget at d=" + std::to_string(d));
    std::int64_t best = 0;
    for (auto level : policy.levels) {
      if (p.nominal_frames * level <= policy.budget && level > best) best = level;
    }
    const bool needs_fallback =
        p.nominal_frames * policy.levels.back() > policy.budget;
    c.Expect(p.fallback_applied == needs_fallback,
             "fallback flag wrong at d=" + std::to_string(d));
    c.Expect(needs_fallback ? p.level == policy.levels.back() : p.level == best,
             "level not maximal at d=" + std::to_string(d));
    fallbacks += p.fallback_applied ? 1 : 0;
  }
  const double secs = std::chrono::duration<double>(Clock::now() - start).count();
  c.Expect(secs < 5.0, "runtime " + std::to_string(secs) + " s >= 5 s");
  return Finish(c, "10000 plans, " + std::to_string(fallbacks) +
                       " fallbacks, " + std::to_string(secs) + " s");
}

// 2. Worked video fixtures.
Outcome VideoFixtures() {
  using namespace seedplan::videoplan;
  Check c;
  const VideoPlan a = PlanVideo(100, 1);
  c.Expect(a.level == 640 && a.total_tokens == 64000 && !a.fallback_applied,
           "100 s fixture");
  const VideoPlan b = PlanVideo(200, 1);
  c.Expect(b.level == 384 && b.total_tokens == 76800 && !b.fallback_applied,
           "200 s fixture");
  const VideoPlan f = PlanVideo(1000, 1);
  c.Expect(f.fallback_applied && f.level == 128 && f.frame_count() == 640 &&
               f.total_tokens == 81920,
           "1000 s fixture");
  return Finish(c, "100 s/200 s/1000 s exact");
}

// 3. LPT bound against brute force.
Outcome LptBound() {
  using namespace seedplan::balancer;
  std::mt19937_64 rng(1003);
  Check c;
  const auto start = Clock::now();
  double worst_ratio = 0.0;
  for (int i = 0; i < 500; ++i) {
    const int m = 2 + i % 2;
    const int n = std::uniform_int_distribution<int>(1, 10)(rng);
    std::vector<double> costs(n);
    std::vector<WorkItem> items;
    for (int k = 0; k < n; ++k) {
      costs[k] = std::uniform_int_distribution<int>(1, 20)(rng);
      items.push_back({"j" + std::to_string(k), costs[k], 0});
    }
    const double greedy = BalanceLpt(items, m).makespan();
    const double best = oracle::OptimalMakespan(costs, m);
    const double bound = 4.0 / 3.0 - 1.0 / (3.0 * m);
    worst_ratio = std::max(worst_ratio, greedy / best);
    c.Expect(greedy <= bound * best + 1e-12,
             "instance " + std::to_string(i) + " ratio " +
                 std::to_string(greedy / best));
  }
  const double secs = std::chrono::duration<double>(Clock::now() - start).count();
  c.Expect(secs < 30.0, "runtime " + std::to_string(secs) + " s >= 30 s");
  return Finish(c, "500 instances, worst ratio " + std::to_string(worst_ratio) +
                       ", " + std::to_string(secs) + " s");
}

// 4. Packing invariants and FFD quality.
Outcome Packing() {
  using namespace seedplan::packer;
  std::mt19937_64 rng(1004);
  Check c;
  int oracle_checked = 0;
  for (int i = 0; i < 1000; ++i) {
    const std::int64_t cap = std::uniform_int_distribution<std::int64_t>(1, 48)(rng);
    const int n = std::uniform_int_distribution<int>(0, 8)(rng);
    std::vector<PackItem> items;
    std::vector<std::int64_t> lengths;
    for (int k = 0; k < n; ++k) {
      lengths.push_back(std::uniform_int_distribution<std::int64_t>(1, cap)(rng));
      items.push_back({"s" + std::to_string(k), lengths.back()});
    }
    const PackPlan plan = PackFfd(items, cap);
    std::map<std::string, int> seen;
    std::int64_t total = 0;
    for (std::size_t b = 0; b < plan.bins.size(); ++b) {
      const Bin& bin = plan.bins[b];
      c.Expect(bin.used() <= cap, "capacity exceeded");
      for (const auto& it : bin.items) ++seen[it.id];
      total += bin.used();
      for (std::int64_t x = 0; x < bin.used(); ++x) {
        for (std::int64_t y = 0; y < bin.used(); ++y) {
          const bool allowed = AttentionAllowed(plan, b, x, y);
          c.Expect(allowed == AttentionAllowed(plan, b, y, x), "asymmetric mask");
          c.Expect(allowed == (SegmentOf(plan, b, x) == SegmentOf(plan, b, y)),
                   "mask differs from segment equality");
        }
        c.Expect(AttentionAllowed(plan, b, x, x), "mask not reflexive");
      }
    }
    c.Expect(total == std::accumulate(lengths.begin(), lengths.end(),
                                      std::int64_t{0}),
             "length not conserved");
    bool once = seen.size() == items.size();
    for (const auto& [id, k] : seen) once = once && k == 1;
    c.Expect(once, "ids not preserved");
    c.Expect(static_cast<int>(plan.bins.size()) <=
                 oracle::OptimalBinCount(lengths, cap) + 1,
             "FFD more than one bin above optimal");
    ++oracle_checked;
  }
  return Finish(c, std::to_string(oracle_checked) +
                       " instances, all within optimal+1");
}

// 5. 2D RoPE.
Outcome Rope() {
  using namespace seedplan::rope2d;
  const RopeParams params{64, 10000.0};
  std::mt19937_64 rng(1005);
  std::normal_distribution<double> g;
  std::uniform_int_distribution<std::int64_t> pos(0, 128);
  Check c;
  double worst_norm = 0.0, worst_rel = 0.0;
  for (int i = 0; i < 1000; ++i) {
    std::vector<double> q(64), k(64);
    for (auto& v : q) v = g(rng);
    for (auto& v : k) v = g(rng);
    const PatchPosition pq{pos(rng), pos(rng)};
    const PatchPosition pk{pos(rng), pos(rng)};

    const auto r = RopeRotate(q, pq, params);
    long double n0 = 0, n1 = 0;
    for (int d = 0; d < 64; ++d) {
      n0 += static_cast<long double>(q[d]) * q[d];
      n1 += static_cast<long double>(r[d]) * r[d];
    }
    const double dn = std::abs(static_cast<double>(std::sqrt(n1) - std::sqrt(n0)));
    worst_norm = std::max(worst_norm, dn);
    c.Expect(dn <= 1e-9, "norm drift " + std::to_string(dn));

    const std::int64_t sx = std::min(pq.x, pk.x), sy = std::min(pq.y, pk.y);
    const double a = RopeDot(q, k, pq, pk, params);
    const double b = RopeDot(q, k, {pq.x - sx, pq.y - sy}, {pk.x - sx, pk.y - sy},
                             params);
    worst_rel = std::max(worst_rel, std::abs(a - b));
    c.Expect(std::abs(a - b) <= 1e-6, "relative identity off by " +
                                          std::to_string(std::abs(a - b)));

    const auto z = RopeRotate(q, {0, 0}, params);
    c.Expect(std::memcmp(z.data(), q.data(), q.size() * sizeof(double)) == 0,
             "zero position not bit-exact identity");
  }
  std::ostringstream s;
  s << "1000 draws, max norm drift " << worst_norm << ", max relative gap "
    << worst_rel;
  return Finish(c, s.str());
}

// 6. Scaling fits.
Outcome Scaling() {
  using namespace seedplan::scaling;
  Check c;
  std::mt19937_64 rng(1006);
  std::uniform_real_distribution<double> coef(-2.0, 2.0);
  for (int i = 0; i < 100; ++i) {
    const double slope = coef(rng), intercept = coef(rng);
    std::vector<double> xs, ys;
    for (int k = 0; k < 20; ++k) {
      xs.push_back(-5.0 + 0.7 * k);
      ys.push_back(slope * xs.back() + intercept);
    }
    const LineFit f = FitLine(xs, ys);
    c.Expect(std::abs(f.slope - slope) <= 1e-9 &&
                 std::abs(f.intercept - intercept) <= 1e-9,
             "synthetic line not recovered");
  }

  std::vector<double> xs, ys;
  for (int k = 0; k < 50; ++k) {
    const double tokens = std::pow(10.0, 9.0 + 0.06 * k);
    xs.push_back(std::log(tokens));
    ys.push_back(std::log(PredictLoss(fixtures::kOcrLoss, tokens)));
  }
  const LineFit ocr = FitLine(xs, ys);
  c.Expect(std::abs(ocr.slope - -0.1817) <= 1e-9, "OCR slope");
  c.Expect(std::abs(ocr.intercept - -0.7011) <= 1e-9, "OCR intercept");

  c.Expect(PredictMetric(fixtures::kChartQa, 1.0) == 0.7139, "ChartQA at loss 1");
  c.Expect(PredictMetric(fixtures::kInfoVqa, 1.0) == 0.5319, "InfoVQA at loss 1");
  std::ostringstream s;
  s.precision(12);
  s << "OCR refit slope " << ocr.slope << " intercept " << ocr.intercept;
  return Finish(c, s.str());
}

// 7. Geometry.
Outcome Geometry() {
  using namespace seedplan::geometry;
  std::mt19937_64 rng(1007);
  std::uniform_int_distribution<std::int64_t> dim(1, 16384);
  Check c;
  int clamped = 0;
  for (int i = 0; i < 10000; ++i) {
    const std::int64_t w = dim(rng), h = dim(rng);
    const ImagePlan p = PlanImage(w, h);
    c.Expect(p.target_w % 28 == 0 && p.target_h % 28 == 0, "not a multiple of 28");
    c.Expect(p.token_count * 4 == p.patch_count, "token/patch mismatch");
    for (auto [native, target] : {std::pair{w, p.target_w}, std::pair{h, p.target_h}}) {
      if (native < 14) {
        // Below half a tile the snap clamps up to the 28 px minimum.
        ++clamped;
        c.Expect(target == 28, "clamp did not yield 28");
      } else {
        c.Expect(std::llabs(target - native) <= 14,
                 "snap distance > 14 for " + std::to_string(native));
      }
    }
  }
  return Finish(c, "10000 sizes, " + std::to_string(clamped) +
                       " axes under the clamp exception");
}

// 8. Grounding grammar.
Outcome Grounding() {
  using namespace seedplan::grounding;
  std::mt19937_64 rng(1008);
  std::uniform_int_distribution<int> coord(0, 999);
  std::normal_distribution<double> real(0.0, 5.0);
  Check c;
  for (int i = 0; i < 10000; ++i) {
    Region r;
    switch (i % 3) {
      case 0: {
        const int a = coord(rng), b = coord(rng), x = coord(rng), y = coord(rng);
        r = NormalizedBox{std::min(a, b), std::min(x, y), std::max(a, b),
                          std::max(x, y)};
        break;
      }
      case 1:
        r = NormalizedPoint{coord(rng), coord(rng)};
        break;
      default: {
        Box3d b;
        for (auto& v : b.values) v = real(rng);
        r = b;
      }
    }
    c.Expect(ParseRegion(EmitRegion(r)) == r, "round trip failed: " + EmitRegion(r));
  }

  std::uniform_real_distribution<double> dim(1.0, 8192.0), unit(0.0, 1.0);
  for (int i = 0; i < 10000; ++i) {
    const double w = dim(rng), h = dim(rng);
    double x1 = unit(rng) * w, x2 = unit(rng) * w;
    double y1 = unit(rng) * h, y2 = unit(rng) * h;
    if (x1 > x2) std::swap(x1, x2);
    if (y1 > y2) std::swap(y1, y2);
    const NormalizedBox n = NormalizeBox({x1, y1, x2, y2}, w, h);
    const double tw = w / 999.0 * 0.5 + 0.5, th = h / 999.0 * 0.5 + 0.5;
    c.Expect(std::abs(Denormalize(n.x1, w) - x1) <= tw &&
                 std::abs(Denormalize(n.x2, w) - x2) <= tw &&
                 std::abs(Denormalize(n.y1, h) - y1) <= th &&
                 std::abs(Denormalize(n.y2, h) - y2) <= th,
             "denormalization outside half-bin bound");
    c.Expect(n.x1 <= n.x2 && n.y1 <= n.y2, "ordering not preserved");
  }

  const std::string fixture = "<point>766 708</point>";
  c.Expect(EmitRegion(ParseRegion(fixture)) == fixture, "point fixture");
  return Finish(c, "10000 round trips, 10000 boxes, fixture bit-exact");
}

// 9. Load simulator identity.
Outcome LoadSim() {
  using namespace seedplan::loadsim;
  std::mt19937_64 rng(1009);
  std::uniform_int_distribution<std::int64_t> width(1, 32);
  Check c;
  for (int i = 0; i < 1000; ++i) {
    const Topology t{width(rng), width(rng), width(rng)};
    const std::uint64_t bytes =
        std::uniform_int_distribution<std::uint64_t>(0, 1ull << 32)(rng);
    std::vector<std::uint64_t> images(std::uniform_int_distribution<int>(0, 64)(rng));
    for (auto& b : images) b = std::uniform_int_distribution<std::uint64_t>(1, 1 << 22)(rng);
    const IoReport r = SimulateIo(t, bytes, images);
    c.Expect(r.optimized_read_bytes * static_cast<std::uint64_t>(t.pp * t.tp) ==
                 r.naive_read_bytes,
             "read identity");
    const auto total = std::accumulate(images.begin(), images.end(), std::uint64_t{0});
    c.Expect(std::accumulate(r.pcie_bytes_per_device.begin(),
                             r.pcie_bytes_per_device.end(),
                             std::uint64_t{0}) == total,
             "filtered bytes not conserved");
  }
  return Finish(c, "1000 topologies");
}

// 10. CLI determinism and exit codes.
struct Proc {
  int code;
  std::string err;
};

std::string Slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

Proc Shell(const std::string& args, const std::filesystem::path& err_file) {
  const std::string cmd = std::string("'") + SEEDPLAN_CLI_PATH + "' " + args +
                          " >/dev/null 2>'" + err_file.string() + "'";
  const int status = std::system(cmd.c_str());
  const int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return {code, Slurp(err_file)};
}

Outcome CliDeterminism() {
  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path() / "seedplan_acceptance";
  fs::remove_all(dir);
  fs::create_directories(dir);
  const std::string fx = SEEDPLAN_FIXTURE_DIR;
  const fs::path err = dir / "stderr.txt";
  auto q = [](const std::string& s) { return "'" + s + "'"; };
  Check c;

  const std::string plan = (dir / "plan.json").string();
  const std::string assignment = (dir / "assignment.json").string();
  const std::vector<std::pair<std::string, std::string>> commands = {
      {"plan", "plan --manifest " + q(fx + "/manifest_mixed.jsonl") + " --max-len 4096"},
      {"balance", "balance --plan " + q(plan) + " --devices 4 --group-size 2"},
      {"fit", "fit --csv " + q(fx + "/ocr_line.csv") + " --mode power_law"},
      {"fit-metric", "fit --csv " + q(fx + "/metric_two_rows.csv") + " --mode metric"},
      {"predict", "predict --mode metric --slope -0.0968 --intercept 0.7139 --at 0.5"},
      {"simulate-io", "simulate-io --plan " + q(plan) +
                          " --dp 2 --pp 2 --tp 1 --bytes-per-rank 1000 --assignment " +
                          q(assignment)},
  };
  for (const auto& [name, args] : commands) {
    std::string outputs[2];
    for (int run = 0; run < 2; ++run) {
      const fs::path out = dir / (name + "." + std::to_string(run) + ".json");
      const Proc p = Shell(args + " --out " + q(out.string()), err);
      c.Expect(p.code == 0, name + " exited " + std::to_string(p.code) + ": " + p.err);
      outputs[run] = Slurp(out);
    }
    c.Expect(!outputs[0].empty() && outputs[0] == outputs[1],
             name + " output differs between runs");
    if (name == "plan") fs::copy_file(dir / "plan.0.json", plan,
                                      fs::copy_options::overwrite_existing);
    if (name == "balance") fs::copy_file(dir / "balance.0.json", assignment,
                                         fs::copy_options::overwrite_existing);
  }
  // simulate-io ran against the plan/assignment written above; rerun balance
  // now that the plan exists so every command saw real inputs.
  {
    const Proc p = Shell("balance --plan " + q(plan) + " --devices 4 --group-size 2 --out " +
                             q(assignment), err);
    c.Expect(p.code == 0, "balance rerun");
  }

  struct ErrorCase {
    std::string name;
    std::string args;
    int expect;
  };
  const std::vector<ErrorCase> cases = {
      {"malformed manifest", "plan --manifest " + q(fx + "/manifest_malformed.jsonl"), 2},
      {"oversize item", "plan --manifest " + q(fx + "/manifest_oversize.jsonl"), 2},
      {"missing manifest", "plan --manifest " + q(fx + "/nope.jsonl"), 2},
      {"group divisibility", "balance --plan " + q(plan) + " --devices 4 --group-size 3", 1},
      {"single-row csv", "fit --csv " + q(fx + "/single_row.csv"), 2},
      {"singular csv", "fit --csv " + q(fx + "/constant_x.csv"), 2},
      {"unknown flag", "plan --manifest " + q(fx + "/manifest_empty.jsonl") + " --bogus", 1},
      {"no subcommand", "", 1},
  };
  for (const auto& ec : cases) {
    const Proc p = Shell(ec.args, err);
    c.Expect(p.code == ec.expect, ec.name + ": exit " + std::to_string(p.code) +
                                      " expected " + std::to_string(ec.expect));
    bool one_json_line = std::count(p.err.begin(), p.err.end(), '\n') == 1;
    try {
      one_json_line = one_json_line && nlohmann::json::parse(p.err).contains("error");
    } catch (const nlohmann::json::exception&) {
      one_json_line = false;
    }
    c.Expect(one_json_line, ec.name + ": stderr is not one JSON line: " + p.err);
  }
  return Finish(c, std::to_string(commands.size()) + " commands byte-identical, " +
                       std::to_string(cases.size()) + " error paths");
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"1 video budget compliance", VideoBudget},
      {"2 worked video fixtures", VideoFixtures},
      {"3 balancer LPT bound", LptBound},
      {"4 packing invariants", Packing},
      {"5 2D RoPE", Rope},
      {"6 scaling fits", Scaling},
      {"7 geometry", Geometry},
      {"8 grounding grammar", Grounding},
      {"9 load simulator identity", LoadSim},
      {"10 CLI determinism", CliDeterminism},
  };
  int failed = 0;
  for (const auto& [name, run] : criteria) {
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o = {false, std::string("threw: ") + e.what()};
    }
    std::cout << (o.pass ? "[PASS] " : "[FAIL] ") << name << " -- " << o.detail
              << std::endl;
    failed += o.pass ? 0 : 1;
  }
  std::cout << (criteria.size() - failed) << "/" << criteria.size()
            << " acceptance criteria passed" << std::endl;
  return failed == 0 ? 0 : 1;
}
