// Copyright 2026 The dqqpft Authors.
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

#include "dqqpft/quaternion.hpp"

#include <ostream>

namespace dqqpft {

std::ostream& operator<<(std::ostream& os, const Quaternion& q) {
  return os << '(' << q.w() << ", " << q.x() << "i, " << q.y() << "j, "
            << q.z() << "k)";
}

}  // namespace dqqpft
