#pragma once

#include <functional>

namespace rota {

/// Parallelism request; threads == 0 means hardware concurrency.
struct ExecOptions {
  unsigned threads = 0;
};

unsigned resolve_threads(unsigned requested);

/// Runs body(worker) for worker in [0, workers) on separate threads and
/// joins them. Exceptions thrown by a worker are rethrown (lowest worker
/// index first).
void run_workers(unsigned workers, const std::function<void(unsigned)>& body);

}  // namespace rota
