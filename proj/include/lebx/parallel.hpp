#pragma once

namespace lebx {

/// Caps the OpenMP worker count; 0 restores the runtime default. Returns the
/// resulting maximum thread count.
int set_thread_count(int requested);

int thread_count();

}  // namespace lebx
