#ifndef GMMDS_PARALLEL_HPP
#define GMMDS_PARALLEL_HPP

namespace gmmds {

// Worker count for internally parallel scans: the GMMDS_THREADS
// environment variable when set (clamped to [1, 256]), otherwise the
// hardware concurrency. Read on every call so tests can adjust it.
int worker_count();

}  // namespace gmmds

#endif
