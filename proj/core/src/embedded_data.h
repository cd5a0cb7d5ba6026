// Copyright 2026 The aspectlabel Authors.
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

// Contents of data/ compiled into the library (see core/CMakeLists.txt).

#ifndef ASPECTLABEL_EMBEDDED_DATA_H_
#define ASPECTLABEL_EMBEDDED_DATA_H_

#include <string_view>

namespace aspectlabel {
namespace embedded {

extern const std::string_view kFixtureConllu;
extern const std::string_view kFixtureExpected;
extern const std::string_view kFixturePositive;
extern const std::string_view kFixtureNegative;
extern const std::string_view kFixturePhrases;
extern const std::string_view kStopwordsEn;

}  // namespace embedded
}  // namespace aspectlabel

#endif  // ASPECTLABEL_EMBEDDED_DATA_H_
