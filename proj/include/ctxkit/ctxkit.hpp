// Copyright 2026 The ctxkit Authors
//
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

#ifndef CTXKIT_CTXKIT_HPP
#define CTXKIT_CTXKIT_HPP

#include "ctxkit/automorphism.hpp"
#include "ctxkit/bits.hpp"
#include "ctxkit/enumerate.hpp"
#include "ctxkit/errors.hpp"
#include "ctxkit/hardy.hpp"
#include "ctxkit/io.hpp"
#include "ctxkit/logic.hpp"
#include "ctxkit/quantum.hpp"
#include "ctxkit/scenario.hpp"
#include "ctxkit/states.hpp"

#endif  // CTXKIT_CTXKIT_HPP
