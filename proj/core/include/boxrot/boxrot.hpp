/**
 * Copyright 2026 The boxrot Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 * http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef BOXROT_BOXROT_HPP
#define BOXROT_BOXROT_HPP

#include "boxrot/annotations.hpp"
#include "boxrot/csv.hpp"
#include "boxrot/eiou.hpp"
#include "boxrot/error.hpp"
#include "boxrot/eval.hpp"
#include "boxrot/geometry.hpp"
#include "boxrot/random.hpp"
#include "boxrot/raster.hpp"
#include "boxrot/rotators.hpp"
#include "boxrot/ruloss.hpp"
#include "boxrot/shape_sampler.hpp"

#endif  // BOXROT_BOXROT_HPP
