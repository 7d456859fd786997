// Copyright 2026 The ginv Authors
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


#pragma once

/// \file ginv.hpp
/// \brief Umbrella header.

#include "ginv/builder.hpp"
#include "ginv/decision.hpp"
#include "ginv/graph.hpp"
#include "ginv/inversion.hpp"
#include "ginv/io.hpp"
#include "ginv/matrix.hpp"
#include "ginv/oracle.hpp"
#include "ginv/paths.hpp"
#include "ginv/reduce.hpp"
#include "ginv/unicyclic.hpp"
