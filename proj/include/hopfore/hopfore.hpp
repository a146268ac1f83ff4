/*
   Copyright 2026 The hopfore Authors

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

#ifndef HOPFORE_HOPFORE_HPP
#define HOPFORE_HOPFORE_HPP

#include "hopfore/decomp/decompose.hpp"
#include "hopfore/exactnum/cyclotomic.hpp"
#include "hopfore/exactnum/matrix.hpp"
#include "hopfore/fusion/fusion.hpp"
#include "hopfore/fusion/grid.hpp"
#include "hopfore/greenring/presentation.hpp"
#include "hopfore/greenring/ring.hpp"
#include "hopfore/greenring/xbasis.hpp"
#include "hopfore/grouprep/algebra.hpp"
#include "hopfore/grouprep/group.hpp"
#include "hopfore/hopfmod/labels.hpp"
#include "hopfore/hopfmod/module.hpp"
#include "hopfore/io/expr.hpp"
#include "hopfore/io/json.hpp"

#endif
