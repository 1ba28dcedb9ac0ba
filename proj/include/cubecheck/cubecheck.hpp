// Copyright 2026 The cubecheck Authors
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

#pragma once

#include "cubecheck/census.hpp"
#include "cubecheck/classify.hpp"
#include "cubecheck/convexity.hpp"
#include "cubecheck/coxeter.hpp"
#include "cubecheck/cycles.hpp"
#include "cubecheck/distance.hpp"
#include "cubecheck/enumerate.hpp"
#include "cubecheck/faces.hpp"
#include "cubecheck/generators.hpp"
#include "cubecheck/graph.hpp"
#include "cubecheck/graph6.hpp"
#include "cubecheck/patterns.hpp"
#include "cubecheck/symmetry.hpp"
#include "cubecheck/theta.hpp"
#include "cubecheck/traverse.hpp"
