#pragma once

namespace sfflab {

// Number of worker threads for the OpenMP kernels. Defaults to the OpenMP
// thread count; the SFFLAB_THREADS environment variable caps it.
int worker_thread_count();

}  // namespace sfflab
