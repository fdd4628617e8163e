/*
 Copyright 2026 The gridflow authors
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
#pragma once

namespace gridflow {

// Principal-branch Lambert W on y in (-1/e, 0): the solution w of w e^w = y
// with -1 < w < 0. Halley iteration with a guarded bisection fallback;
// residual |w e^w - y| <= 1e-14 |y|. Throws std::domain_error outside the
// open interval.
long double lambert_w_principal(long double y);

}  // namespace gridflow
