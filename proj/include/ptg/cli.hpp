// Copyright 2026 The ptg Authors.
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

#ifndef PTG_CLI_HPP_
#define PTG_CLI_HPP_

#include <ostream>
#include <string>
#include <vector>

namespace ptg {

// Command dispatcher behind the ptg binary. Subcommands:
//   validate FILE
//   score FILE
//   colour FILE [--budget N]
//   scan FILE [--conf K]
//   discharge FILE
//   prime FILE
//   switch FILE x u v y [--region R]
//   cuts FILE x u v y --class I [--region R] [--budget N]
// Exit codes: 0 property holds / artifact produced, 1 property fails (with
// witness), 2 parse or validation error, 3 unknown (budget or cap).
// PTG_BUDGET overrides the default solver budget; --budget overrides both.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ptg

#endif  // PTG_CLI_HPP_
