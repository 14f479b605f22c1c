// Copyright 2026 The hotc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#ifndef HOT_ORACLE_HPP
#define HOT_ORACLE_HPP

#include "hot/oracle/basis.hpp"
#include "hot/oracle/link.hpp"
#include "hot/oracle/maps.hpp"
#include "hot/oracle/operator.hpp"

#endif  // HOT_ORACLE_HPP
