#include "bcast/bench_report.hpp"

#include <algorithm>
#include <chrono>
#include <charconv>
#include <cstdio>
#include <exception>
#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>

#include "bcast/errors.hpp"
#include "bcast/peel.hpp"

namespace bcast {

namespace {

std::string format_double(double x) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, ptr);
}

double median(std::vector<double> v) {
  if (v.empty()) return 0;
  std::sort(v.begin(), v.end());
  const std::size_t m = v.size() / 2;
  return v.size() % 2 ? v[m] : (v[m - 1] + v[m]) / 2;
}

std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    auto pos = s.find(sep, start);
    out.emplace_back(s.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

template <class T>
T number(std::string_view s, int line_no) {
  T value{};
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty())
    throw parse_error("line " + std::to_string(line_no) + ": bad number '" + std::string(s) + "'");
  return value;
}

struct Speedup {
  std::string family;
  int n;
  std::uint64_t seed;
  double anchor_free;
  double anchored;
  double ratio() const { return anchor_free > 0 ? anchored / anchor_free : 0; }
};

std::vector<Speedup> pair_rows(const BenchReport& report) {
  std::vector<Speedup> out;
  for (const auto& a : report.rows) {
    if (a.solver != kAnchorFree) continue;
    for (const auto& b : report.rows)
      if (b.solver == kAnchored && b.family == a.family && b.n == a.n && b.seed == a.seed) {
        out.push_back({a.family, a.n, a.seed, a.median_seconds, b.median_seconds});
        break;
      }
  }
  return out;
}

}  // namespace

std::vector<FamilyAggregate> BenchReport::aggregates() const {
  std::vector<FamilyAggregate> out;
  auto pairs = pair_rows(*this);
  for (const auto& p : pairs) {
    auto it = std::find_if(out.begin(), out.end(), [&](auto& a) { return a.family == p.family; });
    if (it == out.end()) {
      out.push_back({p.family});
      it = out.end() - 1;
    }
    std::vector<double> ratios;
    for (const auto& q : pairs)
      if (q.family == p.family) ratios.push_back(q.ratio());
    it->cases = static_cast<int>(ratios.size());
    it->median_speedup = median(ratios);
    it->max_speedup = *std::max_element(ratios.begin(), ratios.end());
    if (p.n > it->max_n) {
      it->max_n = p.n;
      it->new_seconds = p.anchor_free;
      it->baseline_seconds = p.anchored;
    }
  }
  return out;
}

std::string render_csv(const BenchReport& report) {
  std::string out = "family,n,seed,solver,median_seconds,cost,threads\n";
  for (const auto& r : report.rows)
    out += r.family + ',' + std::to_string(r.n) + ',' + std::to_string(r.seed) + ',' + r.solver + ',' +
           format_double(r.median_seconds) + ',' + std::to_string(r.cost) + ',' + std::to_string(r.threads) + '\n';
  return out;
}

BenchReport parse_csv(std::string_view text) {
  BenchReport report;
  int line_no = 0;
  for (const auto& line : split(text, '\n')) {
    ++line_no;
    if (line.empty()) continue;
    if (line_no == 1) {
      if (line != "family,n,seed,solver,median_seconds,cost,threads") throw parse_error("unexpected CSV header");
      continue;
    }
    auto f = split(line, ',');
    if (f.size() != 7) throw parse_error("line " + std::to_string(line_no) + ": expected 7 fields");
    BenchRow r;
    r.family = f[0];
    r.n = number<int>(f[1], line_no);
    r.seed = number<std::uint64_t>(f[2], line_no);
    r.solver = f[3];
    r.median_seconds = number<double>(f[4], line_no);
    r.cost = number<std::int64_t>(f[5], line_no);
    r.threads = number<int>(f[6], line_no);
    report.rows.push_back(std::move(r));
  }
  return report;
}

std::string render_table(const BenchReport& report) {
  std::ostringstream out;
  char buf[256];
  std::snprintf(buf, sizeof buf, "%-14s %5s %6s %14s %12s %12s %6s\n", "family", "n", "seed", "anchor-free[s]",
                "anchored[s]", "speedup", "cost");
  out << buf;
  for (const auto& p : pair_rows(report)) {
    std::int64_t cost = 0;
    for (const auto& r : report.rows)
      if (r.family == p.family && r.n == p.n && r.seed == p.seed) cost = r.cost;
    std::snprintf(buf, sizeof buf, "%-14s %5d %6llu %14.6f %12.6f %11.2fx %6lld\n", p.family.c_str(), p.n,
                  static_cast<unsigned long long>(p.seed), p.anchor_free, p.anchored, p.ratio(),
                  static_cast<long long>(cost));
    out << buf;
  }
  out << '\n';
  std::snprintf(buf, sizeof buf, "%-14s %5s %6s %14s %12s %14s %12s\n", "family", "cases", "max n", "median speedup",
                "max speedup", "new time[s]", "baseline[s]");
  out << buf;
  for (const auto& a : report.aggregates()) {
    std::snprintf(buf, sizeof buf, "%-14s %5d %6d %13.2fx %11.2fx %14.6f %12.6f\n", a.family.c_str(), a.cases,
                  a.max_n, a.median_speedup, a.max_speedup, a.new_seconds, a.baseline_seconds);
    out << buf;
  }
  return out.str();
}

std::string render_speedup_csv(const BenchReport& report) {
  std::string out = "family,n,seed,speedup\n";
  for (const auto& p : pair_rows(report))
    out += p.family + ',' + std::to_string(p.n) + ',' + std::to_string(p.seed) + ',' + format_double(p.ratio()) + '\n';
  return out;
}

SuiteConfig parse_suite(std::string_view text) {
  SuiteConfig suite;
  int line_no = 0;
  for (auto line : split(text, '\n')) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    std::istringstream in(line);
    std::string token;
    std::optional<Family> family;
    std::vector<int> sizes;
    std::vector<std::uint64_t> seeds{0};
    std::optional<double> p;
    bool any = false;
    while (in >> token) {
      any = true;
      auto eq = token.find('=');
      if (eq == std::string::npos) throw parse_error("line " + std::to_string(line_no) + ": expected key=value");
      auto key = token.substr(0, eq);
      auto value = token.substr(eq + 1);
      if (key == "reps") {
        suite.reps = number<int>(value, line_no);
      } else if (key == "timeout") {
        suite.timeout_seconds = number<double>(value, line_no);
      } else if (key == "family") {
        try {
          family = parse_family(value);
        } catch (const std::invalid_argument& e) {
          throw parse_error("line " + std::to_string(line_no) + ": " + e.what());
        }
      } else if (key == "sizes") {
        for (auto& s : split(value, ',')) sizes.push_back(number<int>(s, line_no));
      } else if (key == "seeds") {
        seeds.clear();
        for (auto& s : split(value, ',')) seeds.push_back(number<std::uint64_t>(s, line_no));
      } else if (key == "p") {
        p = number<double>(value, line_no);
      } else {
        throw parse_error("line " + std::to_string(line_no) + ": unknown key '" + key + "'");
      }
    }
    if (!any) continue;
    if (family) {
      if (sizes.empty()) throw parse_error("line " + std::to_string(line_no) + ": family without sizes");
      for (int n : sizes)
        for (auto seed : seeds) suite.cases.push_back({*family, n, seed, p});
    } else if (!sizes.empty()) {
      throw parse_error("line " + std::to_string(line_no) + ": sizes without family");
    }
  }
  if (suite.reps < 1) throw parse_error("reps must be positive");
  return suite;
}

SuiteConfig default_suite() {
  return parse_suite(
      "reps=5\n"
      "family=barbell sizes=10,13,16,22,28\n"
      "family=cycle sizes=8,12,16,20,24,28,32\n"
      "family=path sizes=8,12,16,20,24,28,32,36,40\n"
      "family=random-tree sizes=10,20,30 seeds=1,2\n"
      "family=sparse-random sizes=10,20,30 seeds=1,2\n"
      "family=star sizes=10,20,40,80,120,160\n"
      "family=wheel sizes=10,20,30,40,50,60,70,75,80\n");
}

namespace {

struct Timed {
  double median_seconds;
  std::int64_t cost;
};

Timed time_solver(const Graph& g, PathRoutine routine, int reps, double timeout) {
  PeelOptions opts;
  opts.routine = routine;
  std::vector<double> samples;
  std::int64_t cost = -1;
  for (int r = 0; r < reps; ++r) {
    auto t0 = std::chrono::steady_clock::now();
    auto sol = solve_optimal(g, opts);
    auto t1 = std::chrono::steady_clock::now();
    double s = std::chrono::duration<double>(t1 - t0).count();
    if (s > timeout) throw std::runtime_error("benchmark solve exceeded timeout");
    if (cost >= 0 && cost != sol.cost()) throw invariant_error("solver cost changed between repetitions");
    cost = sol.cost();
    samples.push_back(s);
  }
  return {median(samples), cost};
}

}  // namespace

BenchReport run_bench(const SuiteConfig& suite, int threads, std::ostream* progress) {
  const int count = static_cast<int>(suite.cases.size());
  std::vector<BenchRow> rows(2 * static_cast<std::size_t>(count));
  std::exception_ptr failure;
  std::mutex mu;

  auto run_case = [&](int i) {
    const auto& c = suite.cases[i];
    Graph g = generate({c.family, c.n, c.seed, c.edge_probability});
    Timed fresh = time_solver(g, PathRoutine::anchor_free, suite.reps, suite.timeout_seconds);
    Timed base = time_solver(g, PathRoutine::anchored, suite.reps, suite.timeout_seconds);
    std::string family(to_string(c.family));
    if (fresh.cost != base.cost)
      throw invariant_error("cost mismatch on " + family + " n=" + std::to_string(c.n) + " seed=" +
                            std::to_string(c.seed) + ": " + std::to_string(fresh.cost) + " vs " +
                            std::to_string(base.cost));
    rows[2 * i] = {family, c.n, c.seed, std::string(kAnchorFree), fresh.median_seconds, fresh.cost, threads};
    rows[2 * i + 1] = {family, c.n, c.seed, std::string(kAnchored), base.median_seconds, base.cost, threads};
    if (progress) {
      std::lock_guard lock(mu);
      *progress << family << " n=" << c.n << " seed=" << c.seed << " cost=" << fresh.cost << '\n';
    }
  };

  if (threads <= 1) {
    for (int i = 0; i < count; ++i) run_case(i);
  } else {
#pragma omp parallel for num_threads(threads) schedule(dynamic, 1)
    for (int i = 0; i < count; ++i) {
      try {
        run_case(i);
      } catch (...) {
        std::lock_guard lock(mu);
        if (!failure) failure = std::current_exception();
      }
    }
    if (failure) std::rethrow_exception(failure);
  }
  return {std::move(rows)};
}

}  // namespace bcast
