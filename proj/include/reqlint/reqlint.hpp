// Copyright 2026 The Reqlint Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef REQLINT_REQLINT_HPP
#define REQLINT_REQLINT_HPP

#include "reqlint/analytics.hpp"
#include "reqlint/catalog.hpp"
#include "reqlint/checkers.hpp"
#include "reqlint/docmodel.hpp"
#include "reqlint/engine.hpp"
#include "reqlint/errors.hpp"
#include "reqlint/nlp.hpp"
#include "reqlint/report_io.hpp"
#include "reqlint/resources.hpp"
#include "reqlint/stemmer.hpp"
#include "reqlint/taxonomy.hpp"

#endif  // REQLINT_REQLINT_HPP
