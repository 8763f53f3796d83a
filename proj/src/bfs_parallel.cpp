#include "flab/bfs_parallel.hpp"

#include <algorithm>
#include <atomic>
#include <barrier>
#include <stdexcept>
#include <thread>

namespace flab {

KernelRun bfs_parallel(const CsrMatrix& a, Vertex source, const Semiring& s,
                       unsigned workers) {
  if (workers == 0)
    throw std::invalid_argument("bfs_parallel needs at least one worker");
  if (source >= a.n_rows)
    throw std::invalid_argument("bfs source out of range");

  const Vertex n = a.n_rows;
  KernelRun run;
  run.variant = Variant::Parallel;
  BfsOutput& out = run.output;
  out.levels.assign(n, kUnreached);
  out.parents.assign(n, n);
  out.levels[source] = 0;
  out.frontier_sizes.push_back(1);

  std::vector<Scalar> xbuf(n, s.zero), ybuf(n, s.zero);
  xbuf[source] = s.one;
  std::vector<std::atomic<std::uint8_t>> t(n);
  for (auto& flag : t) flag.store(0, std::memory_order_relaxed);
  std::vector<Vertex> l(n);
  l[0] = source;

  struct Shared {
    Scalar* x = nullptr;
    Scalar* y = nullptr;
    std::uint64_t start = 0;
    std::uint64_t end = 1;
    std::uint32_t lvl = 1;
    bool done = false;
  } sh;
  sh.x = xbuf.data();
  sh.y = ybuf.data();

  std::vector<std::vector<Vertex>> local(workers);
  std::vector<std::uint64_t> counts(workers, 0);
  std::vector<OpReport> reports(workers);

  // The same barrier serves both synchronization points; the completion step
  // alternates between them and runs the level bookkeeping on one thread.
  bool after_publication = false;
  auto completion = [&]() noexcept {
    if (!after_publication) {
      after_publication = true;
      return;
    }
    after_publication = false;
    std::uint64_t total = 0;
    for (std::uint64_t c : counts) total += c;
    if (total == 0) {
      sh.done = true;
      return;
    }
    out.frontier_sizes.push_back(total);
    sh.start = sh.end;
    sh.end += total;
    sh.lvl += 1;
    std::swap(sh.x, sh.y);
  };
  std::barrier bar(static_cast<std::ptrdiff_t>(workers), completion);

  auto work = [&](unsigned w) {
    OpReport& rep = reports[w];
    std::vector<Vertex>& buf = local[w];
    for (;;) {
      const std::uint64_t len = sh.end - sh.start;
      const std::uint64_t lo = sh.start + len * w / workers;
      const std::uint64_t hi = sh.start + len * (w + 1) / workers;
      Scalar* x = sh.x;
      Scalar* y = sh.y;
      const std::uint32_t lvl = sh.lvl;

      for (std::uint64_t pos = lo; pos < hi; ++pos) {
        Vertex j = l[pos];
        Scalar xj = x[j];
        for (std::uint64_t k = a.row_ptr[j]; k < a.row_ptr[j + 1]; ++k) {
          Vertex i = a.col_idx[k];
          if (t[i].load(std::memory_order_relaxed) != 0) continue;
          // y[i] is provably zero here, matching the sequential accumulator.
          Scalar v = evaluate(s, s.zero, xj, a.values[k], rep);
          if (t[i].exchange(1, std::memory_order_relaxed) == 0) {
            y[i] = v;
            out.levels[i] = lvl;
            out.parents[i] = j;
            buf.push_back(i);
          } else {
            // Another worker won the claim inside the load..exchange window.
            rep.duplicates += 1;
          }
        }
        t[j].store(1, std::memory_order_relaxed);
        x[j] = s.zero;
      }
      counts[w] = buf.size();
      bar.arrive_and_wait();

      std::uint64_t off = sh.end;
      for (unsigned p = 0; p < w; ++p) off += counts[p];
      std::copy(buf.begin(), buf.end(), l.begin() + off);
      buf.clear();
      bar.arrive_and_wait();

      if (sh.done) break;
    }
  };

  if (workers == 1) {
    // Same code path, no thread spawn; keeps single-worker runs cheap.
    work(0);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work, w);
    for (std::thread& th : pool) th.join();
  }

  for (const OpReport& rep : reports) run.ops.absorb_counts(rep);
  out.reached = 0;
  for (std::uint64_t size : out.frontier_sizes) out.reached += size;
  run.ops.steps = out.frontier_sizes.size();
  run.ops.frontier_sizes = out.frontier_sizes;
  return run;
}

}  // namespace flab
