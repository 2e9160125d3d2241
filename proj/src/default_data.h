// Copyright 2026 The Nightjar Authors.
// SPDX-License-Identifier: Apache-2.0

#ifndef NIGHTJAR_SRC_DEFAULT_DATA_H_
#define NIGHTJAR_SRC_DEFAULT_DATA_H_

#include <string_view>

namespace nightjar::internal {

extern const std::string_view kDefaultGazetteerJson;
extern const std::string_view kDefaultPoolJson;

}  // namespace nightjar::internal

#endif  // NIGHTJAR_SRC_DEFAULT_DATA_H_
