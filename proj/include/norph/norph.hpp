/*
 *   Copyright 2026 The norph authors
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

#include "norph/common.hpp"
#include "norph/dot_export.hpp"
#include "norph/dp.hpp"
#include "norph/dp_instance.hpp"
#include "norph/metric.hpp"
#include "norph/nategory.hpp"
#include "norph/norphism.hpp"
#include "norph/poset.hpp"
#include "norph/problem_file.hpp"
#include "norph/random_gen.hpp"
#include "norph/rational.hpp"
#include "norph/verify.hpp"
