// Copyright (c) 2026 The poisperm authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

namespace poisperm {

inline constexpr char kVersion[] = "0.1.0";

}  // namespace poisperm
