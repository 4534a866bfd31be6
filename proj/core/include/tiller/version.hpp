// Copyright 2026 The Tiller Project Authors. All rights reserved.
// Use of this source code is governed by the Apache License 2.0
// that can be found in the LICENSE file.

#ifndef TILLER_VERSION_H_
#define TILLER_VERSION_H_

namespace tiller {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace tiller

#endif  // TILLER_VERSION_H_
