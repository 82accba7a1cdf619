#pragma once

#include <cstddef>
#include <functional>

namespace chroma {

// Worker cap used by parallel sections. 0 means "read CHROMA_THREADS, else 1".
void set_max_threads(int n);
int max_threads();

// Runs body(i) for i in [0, n) on up to max_threads() workers.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace chroma
