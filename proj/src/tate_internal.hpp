/*
   Copyright 2026 The ellf2 Authors

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

#ifndef ELLF2_SRC_TATE_INTERNAL_HPP
#define ELLF2_SRC_TATE_INTERNAL_HPP

#include "ellf2/tate.hpp"

namespace ellf2::detail {

/// tate_algorithm with a precomputed nonzero discriminant.
LocalReduction tate_with_discriminant(const WeierstrassEq& e, const Place& place, BitPoly delta);

}  // namespace ellf2::detail

#endif  // ELLF2_SRC_TATE_INTERNAL_HPP
