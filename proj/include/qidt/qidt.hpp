// Copyright 2026 The qidt Authors
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

#include "qidt/attack.hpp"
#include "qidt/bitstring.hpp"
#include "qidt/density.hpp"
#include "qidt/eigen.hpp"
#include "qidt/error.hpp"
#include "qidt/info.hpp"
#include "qidt/matrix.hpp"
#include "qidt/mub.hpp"
#include "qidt/rng.hpp"
#include "qidt/symmetrize.hpp"
#include "qidt/tolerances.hpp"
#include "qidt/zoo.hpp"
