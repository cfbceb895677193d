// Copyright 2026 The ntdyn Authors
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

#include "ntdyn/coloring.hpp"
#include "ntdyn/embedding.hpp"
#include "ntdyn/error.hpp"
#include "ntdyn/generators.hpp"
#include "ntdyn/io.hpp"
#include "ntdyn/oracle.hpp"
#include "ntdyn/reducer.hpp"
#include "ntdyn/stress.hpp"
