// Copyright 2026 The palwidth Authors
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

#ifndef PALWIDTH_PALWIDTH_HPP
#define PALWIDTH_PALWIDTH_HPP

#include "certificate.hpp"
#include "context.hpp"
#include "decompose.hpp"
#include "errors.hpp"
#include "hnf.hpp"
#include "integer.hpp"
#include "magnus.hpp"
#include "nil2.hpp"
#include "palcalc.hpp"
#include "search.hpp"
#include "word.hpp"
#include "word_io.hpp"

#endif  // PALWIDTH_PALWIDTH_HPP
