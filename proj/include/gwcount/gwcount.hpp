/*
   Copyright 2026 The gwcount Authors

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

// Umbrella header.

#include "gwcount/a1degree.hpp"
#include "gwcount/curvecount.hpp"
#include "gwcount/errors.hpp"
#include "gwcount/extension.hpp"
#include "gwcount/field.hpp"
#include "gwcount/gw.hpp"
#include "gwcount/io.hpp"
#include "gwcount/literal.hpp"
#include "gwcount/numbers.hpp"
#include "gwcount/picard.hpp"
#include "gwcount/squares.hpp"
#include "gwcount/transfer.hpp"
