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

#ifndef ASPECTLABEL_ASPECTLABEL_H_
#define ASPECTLABEL_ASPECTLABEL_H_

#include "aspectlabel/corpus.h"
#include "aspectlabel/eval.h"
#include "aspectlabel/fixtures.h"
#include "aspectlabel/labelling.h"
#include "aspectlabel/lexicon.h"
#include "aspectlabel/phrases.h"
#include "aspectlabel/rules.h"
#include "aspectlabel/tagger.h"
#include "aspectlabel/text.h"

#endif  // ASPECTLABEL_ASPECTLABEL_H_
