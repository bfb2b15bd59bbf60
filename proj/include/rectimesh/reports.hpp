// Copyright 2026 The rectimesh Authors.
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

#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "rectimesh/analysis.hpp"
#include "rectimesh/scatter.hpp"

namespace rectimesh {

// Human-readable breakdowns printed by the command-line tool. Every number
// in them comes from the corresponding library routine.

struct FsplLeg {
  double distance = 0.0;
  double frequency = 0.0;
};

struct LinkRequest {
  double p_tx = 0.0;
  std::vector<double> gains;
  std::vector<double> losses;
  double l_tx = 0.0;
  double g_tx = 0.0;
  std::optional<FsplLeg> fspl;
};

LinkBudget make_link_budget(const LinkRequest& request);
std::string link_report(const LinkRequest& request);

// {"g":[[re,im],...],"h":[[re,im],...]} with an optional "phi":[...] holding
// the starting configuration (all zero when absent).
RisChannel parse_ris_channels(std::string_view json_text);
std::string ris_report(const RisChannel& channel);

std::string pattern_report(const ScatterPattern& pattern, double p);

}  // namespace rectimesh
