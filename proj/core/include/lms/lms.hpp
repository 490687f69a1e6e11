/*
 * Copyright 2026 The lms Authors
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

#ifndef LMS_LMS_HPP
#define LMS_LMS_HPP

#include "lms/chains.hpp"
#include "lms/core.hpp"
#include "lms/gh.hpp"
#include "lms/io.hpp"
#include "lms/matrix.hpp"
#include "lms/models.hpp"
#include "lms/parallel.hpp"
#include "lms/quasimetric.hpp"
#include "lms/regions.hpp"
#include "lms/relation.hpp"
#include "lms/space.hpp"
#include "lms/timefn.hpp"

#endif  // LMS_LMS_HPP
