// Copyright 2026 The cayley-degree Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#ifndef CAYLEY_CAYLEY_HPP
#define CAYLEY_CAYLEY_HPP

#include "errors.hpp"
#include "groups.hpp"
#include "exactnum.hpp"
#include "colour.hpp"
#include "spectra.hpp"
#include "galois.hpp"
#include "search.hpp"
#include "instance.hpp"
#include "report.hpp"

#endif  // CAYLEY_CAYLEY_HPP
