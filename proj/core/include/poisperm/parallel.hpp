// Copyright (c) 2026 The poisperm authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <functional>

namespace poisperm {

/// 0 means "use hardware concurrency"; anything else is used as given.
int resolve_thread_count(int requested);

/// Runs body(i) for i in [0, count) on up to `threads` workers. Work items
/// must write only to their own output slot; with that discipline the
/// result is identical for any thread count. The first exception thrown
/// by a body is rethrown on the caller after all workers join.
void parallel_for(std::size_t count, int threads,
                  const std::function<void(std::size_t)>& body);

}  // namespace poisperm
