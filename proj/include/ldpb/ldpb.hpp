// Copyright 2026 The LDP Bandits Authors
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

// Umbrella header.

#ifndef LDPB_LDPB_HPP_
#define LDPB_LDPB_HPP_

#include "ldpb/agents.hpp"
#include "ldpb/bounds.hpp"
#include "ldpb/config.hpp"
#include "ldpb/distributions.hpp"
#include "ldpb/errors.hpp"
#include "ldpb/format.hpp"
#include "ldpb/harness.hpp"
#include "ldpb/mechanism.hpp"
#include "ldpb/output.hpp"
#include "ldpb/random.hpp"

#endif  // LDPB_LDPB_HPP_
