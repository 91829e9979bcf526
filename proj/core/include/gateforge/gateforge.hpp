// Copyright 2026 The gateforge Authors
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

#include "gateforge/canonical.hpp"
#include "gateforge/comm.hpp"
#include "gateforge/cost.hpp"
#include "gateforge/error.hpp"
#include "gateforge/gates.hpp"
#include "gateforge/linalg.hpp"
#include "gateforge/majorization.hpp"
#include "gateforge/protocol.hpp"
#include "gateforge/types.hpp"
