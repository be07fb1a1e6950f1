// Copyright 2026 The xorgames Authors
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

#pragma once

#include "xorgames/certificate.hpp"
#include "xorgames/classical.hpp"
#include "xorgames/error.hpp"
#include "xorgames/experiments.hpp"
#include "xorgames/f2.hpp"
#include "xorgames/families.hpp"
#include "xorgames/game.hpp"
#include "xorgames/game_io.hpp"
#include "xorgames/integer.hpp"
#include "xorgames/pref_merp.hpp"
#include "xorgames/quantum.hpp"
#include "xorgames/refutation.hpp"
#include "xorgames/word.hpp"
