// Copyright 2026 The neuralcode Authors
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

#include "neuralcode/analysis.hpp"
#include "neuralcode/collapse.hpp"
#include "neuralcode/complex.hpp"
#include "neuralcode/contractibility.hpp"
#include "neuralcode/error.hpp"
#include "neuralcode/face.hpp"
#include "neuralcode/homology.hpp"
#include "neuralcode/instances.hpp"
#include "neuralcode/io.hpp"
#include "neuralcode/realization.hpp"
