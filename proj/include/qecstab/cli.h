// Copyright 2026 The qecstab Authors
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

#ifndef QECSTAB_CLI_H
#define QECSTAB_CLI_H

#include <ostream>

namespace qecstab {

/// Entry point of the qecstab command line. Returns 0 on success, 1 when the requested check or
/// computation fails, 2 on a usage error.
int run_cli(int argc, const char *const *argv, std::ostream &out, std::ostream &err);

}  // namespace qecstab

#endif
