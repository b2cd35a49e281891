// Copyright 2026 The spinopto Authors
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

#include "spinopto/closed_dynamics.hpp"
#include "spinopto/commands.hpp"
#include "spinopto/concurrence.hpp"
#include "spinopto/config.hpp"
#include "spinopto/csv.hpp"
#include "spinopto/density_matrix.hpp"
#include "spinopto/dispersive.hpp"
#include "spinopto/errors.hpp"
#include "spinopto/fock_oracle.hpp"
#include "spinopto/frame.hpp"
#include "spinopto/open_dynamics.hpp"
#include "spinopto/rk4.hpp"
