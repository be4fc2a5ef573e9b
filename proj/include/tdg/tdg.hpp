/*
 * Copyright 2026 The tdgir Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include "tdg/distance_factor.hpp"
#include "tdg/errors.hpp"
#include "tdg/instance.hpp"
#include "tdg/rational.hpp"
#include "tdg/reductions.hpp"
#include "tdg/solvers.hpp"
#include "tdg/source_problems.hpp"
#include "tdg/topology.hpp"
