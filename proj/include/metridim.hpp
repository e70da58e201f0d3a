// Copyright 2026 The metridim Authors
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

#include "metridim/error.hpp"
#include "metridim/graph.hpp"
#include "metridim/edge_list.hpp"
#include "metridim/random.hpp"
#include "metridim/generators.hpp"
#include "metridim/resolver.hpp"
#include "metridim/solvers.hpp"
#include "metridim/theory.hpp"
#include "metridim/expansion.hpp"
#include "metridim/csv.hpp"
#include "metridim/sweep.hpp"
