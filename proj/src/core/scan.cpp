#include "core/scan.hpp"

#include <algorithm>
#include <atomic>
#include <condition_variable>
#include <fstream>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "core/families.hpp"
#include "core/graph6.hpp"

namespace qlap {

namespace {

struct ChunkResult {
  std::vector<std::string> lines;
  std::map<std::string, BoundCounts> counts;
  long long graphs = 0;
  long long proved_violations = 0;
  long long conjecture_violations = 0;
};

struct Item {
  // Exhaustive scans carry the edge mask; other sources carry text.
  unsigned long long mask = 0;
  std::string text;
};

class Source {
 public:
  virtual ~Source() = default;
  virtual long long count() const = 0;
  virtual Graph graph_at(long long idx) const = 0;
};

class ExhaustiveSource : public Source {
 public:
  explicit ExhaustiveSource(int n) : n_(n), count_(labelled_graph_count(n)) {}
  long long count() const override { return count_; }
  Graph graph_at(long long idx) const override {
    return graph_from_mask(n_, static_cast<unsigned long long>(idx));
  }

 private:
  int n_;
  long long count_;
};

class LineSource : public Source {
 public:
  explicit LineSource(std::vector<std::string> lines, bool graph6)
      : lines_(std::move(lines)), graph6_(graph6) {}
  long long count() const override { return static_cast<long long>(lines_.size()); }
  Graph graph_at(long long idx) const override {
    const std::string& s = lines_[static_cast<size_t>(idx)];
    return graph6_ ? parse_graph6(s) : construct_family(s);
  }

 private:
  std::vector<std::string> lines_;
  bool graph6_;
};

std::unique_ptr<Source> open_source(const ScanConfig& cfg) {
  switch (cfg.source) {
    case ScanConfig::Source::Exhaustive:
      if (cfg.n < 1 || cfg.n > kMaxEnumOrder)
        throw std::invalid_argument("exhaustive scan needs 1 <= n <= 8");
      return std::make_unique<ExhaustiveSource>(cfg.n);
    case ScanConfig::Source::File: {
      std::ifstream in(cfg.path);
      if (!in) throw std::runtime_error("cannot open graph6 file: " + cfg.path);
      std::vector<std::string> lines;
      std::string line;
      while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (!line.empty()) lines.push_back(line);
      }
      return std::make_unique<LineSource>(std::move(lines), true);
    }
    case ScanConfig::Source::Family:
      return std::make_unique<LineSource>(expand_family_range(cfg.family), false);
  }
  throw std::logic_error("unknown scan source");
}

bool emit_allowed(const ScanConfig& cfg, const BoundReport& r) {
  switch (cfg.emit) {
    case ScanConfig::Emit::Violations:
      if (!(r.applicable && !r.holds)) return false;
      break;
    case ScanConfig::Emit::Equalities:
      if (!r.equality) return false;
      break;
    case ScanConfig::Emit::All:
      break;
  }
  if (cfg.emit_bounds.empty()) return true;
  for (const auto& want : cfg.emit_bounds) {
    if (r.bound_id == want) return true;
    // Allow selecting an op with multi-record output by its op name.
    if (r.bound_id.size() > want.size() && r.bound_id.compare(0, want.size(), want) == 0 &&
        r.bound_id[want.size()] == ':')
      return true;
  }
  return false;
}

void process_range(const ScanConfig& cfg, const Source& src, long long lo, long long hi,
                   ChunkResult& out) {
  for (long long idx = lo; idx < hi; ++idx) {
    Graph g = src.graph_at(idx);
    ++out.graphs;
    if (g.order() < 2) continue;  // spectra-based checks need mu_{n-1}
    GraphContext ctx = GraphContext::make(g);
    std::string g6;
    for (BoundId id : cfg.bounds) {
      for (BoundReport& r : eval_bound(ctx, id, cfg.epsilon)) {
        BoundCounts& c = out.counts[r.bound_id];
        if (!r.applicable) {
          ++c.not_applicable;
        } else {
          ++c.checked;
          if (r.holds) ++c.held;
          if (r.equality) ++c.equality;
          if (!r.holds) {
            ++c.violated;
            if (report_is_proved(id, r))
              ++out.proved_violations;
            else
              ++out.conjecture_violations;
          }
        }
        if (emit_allowed(cfg, r)) {
          if (g6.empty()) g6 = write_graph6(g);
          out.lines.push_back(r.to_json_line(g6));
        }
      }
    }
  }
}

void merge(ScanSummary& total, const ChunkResult& part) {
  total.graphs += part.graphs;
  total.proved_violations += part.proved_violations;
  total.conjecture_violations += part.conjecture_violations;
  for (const auto& [id, c] : part.counts) {
    BoundCounts& t = total.per_bound[id];
    t.checked += c.checked;
    t.held += c.held;
    t.equality += c.equality;
    t.violated += c.violated;
    t.not_applicable += c.not_applicable;
  }
}

}  // namespace

ScanSummary run_scan(const ScanConfig& cfg, const ScanSink& sink) {
  if (cfg.bounds.empty()) throw std::invalid_argument("scan needs at least one bound");
  if (cfg.epsilon <= 0) throw std::invalid_argument("scan epsilon must be positive");
  auto src = open_source(cfg);
  const long long total = src->count();
  ScanSummary summary;
  const int jobs = std::max(1, cfg.jobs);

  if (jobs == 1) {
    const long long step = 4096;
    for (long long lo = 0; lo < total; lo += step) {
      ChunkResult part;
      process_range(cfg, *src, lo, std::min(total, lo + step), part);
      for (const auto& line : part.lines) sink(line);
      merge(summary, part);
    }
    return summary;
  }

  const long long chunk = std::max<long long>(1, std::min<long long>(4096, (total + jobs - 1) / jobs));
  const long long nchunks = total == 0 ? 0 : (total + chunk - 1) / chunk;
  std::vector<ChunkResult> results(static_cast<size_t>(nchunks));
  std::vector<char> done(static_cast<size_t>(nchunks), 0);
  std::atomic<long long> next{0};
  std::mutex mu;
  std::condition_variable cv;
  std::exception_ptr failure;

  auto worker = [&] {
    try {
      for (;;) {
        long long c = next.fetch_add(1);
        if (c >= nchunks) return;
        ChunkResult part;
        process_range(cfg, *src, c * chunk, std::min(total, (c + 1) * chunk), part);
        {
          std::lock_guard<std::mutex> lock(mu);
          results[static_cast<size_t>(c)] = std::move(part);
          done[static_cast<size_t>(c)] = 1;
        }
        cv.notify_all();
      }
    } catch (...) {
      std::lock_guard<std::mutex> lock(mu);
      if (!failure) failure = std::current_exception();
      cv.notify_all();
    }
  };

  std::vector<std::thread> pool;
  pool.reserve(jobs);
  for (int i = 0; i < jobs; ++i) pool.emplace_back(worker);

  for (long long c = 0; c < nchunks; ++c) {
    std::unique_lock<std::mutex> lock(mu);
    cv.wait(lock, [&] { return done[static_cast<size_t>(c)] || failure; });
    if (failure) break;
    ChunkResult part = std::move(results[static_cast<size_t>(c)]);
    lock.unlock();
    for (const auto& line : part.lines) sink(line);
    merge(summary, part);
  }

  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
  return summary;
}

}  // namespace qlap
