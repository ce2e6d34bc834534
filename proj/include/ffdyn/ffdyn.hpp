/*
   Copyright 2026 The ffdyn Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef FFDYN_FFDYN_HPP
#define FFDYN_FFDYN_HPP

#include "complexity.hpp"
#include "dynamics.hpp"
#include "errors.hpp"
#include "ffield.hpp"
#include "groupalg.hpp"
#include "intmath.hpp"
#include "poly.hpp"
#include "report.hpp"
#include "seqgen.hpp"
#include "verify.hpp"

#endif  // FFDYN_FFDYN_HPP
