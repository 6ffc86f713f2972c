// Copyright 2026 The wstate Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef WSTATE_WSTATE_HPP
#define WSTATE_WSTATE_HPP

#include "wstate/dicke.hpp"
#include "wstate/error.hpp"
#include "wstate/generators.hpp"
#include "wstate/graph.hpp"
#include "wstate/io.hpp"
#include "wstate/isomorphism.hpp"
#include "wstate/matching.hpp"
#include "wstate/realizability.hpp"
#include "wstate/recognition.hpp"
#include "wstate/structure.hpp"

#endif  // WSTATE_WSTATE_HPP
