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

#include "rectimesh/reports.hpp"

#include <algorithm>
#include <cstdarg>
#include <cstdio>
#include <numbers>

#include <json.hpp>

#include "rectimesh/error.hpp"

namespace rectimesh {

namespace {

[[gnu::format(printf, 2, 3)]] void appendf(std::string& out, const char* fmt, ...) {
  char buf[256];
  va_list args;
  va_start(args, fmt);
  const int n = std::vsnprintf(buf, sizeof buf, fmt, args);
  va_end(args);
  if (n > 0) out.append(buf, static_cast<std::size_t>(std::min<int>(n, sizeof buf - 1)));
}

double degrees(double rad) { return rad * 180.0 / std::numbers::pi; }

}  // namespace

LinkBudget make_link_budget(const LinkRequest& req) {
  LinkBudget b;
  b.p_tx = req.p_tx;
  if (req.g_tx != 0.0) b.gains.push_back({"G_TX", req.g_tx});
  for (std::size_t i = 0; i < req.gains.size(); ++i) {
    b.gains.push_back({"gain " + std::to_string(i + 1), req.gains[i]});
  }
  if (req.l_tx != 0.0) b.losses.push_back({"L_TX", req.l_tx});
  for (std::size_t i = 0; i < req.losses.size(); ++i) {
    b.losses.push_back({"loss " + std::to_string(i + 1), req.losses[i]});
  }
  if (req.fspl) b.losses.push_back({"FSPL", fspl(req.fspl->distance, req.fspl->frequency)});
  return b;
}

std::string link_report(const LinkRequest& req) {
  const LinkBudget b = make_link_budget(req);
  std::string out;
  appendf(out, "P_TX = %.2f dBm\n", b.p_tx);
  appendf(out, "EIRP = %.2f dBm\n", eirp(req.p_tx, req.l_tx, req.g_tx));
  for (const auto& g : b.gains) appendf(out, "+ %s = %.2f dB\n", g.label.c_str(), g.db);
  for (const auto& l : b.losses) appendf(out, "- %s = %.2f dB\n", l.label.c_str(), l.db);
  if (req.fspl) {
    const double lambda = kSpeedOfLight / req.fspl->frequency;
    appendf(out, "FSPL check (4*pi*d/lambda)^2 = %.2f dB\n",
            fspl_wavelength(req.fspl->distance, lambda));
  }
  appendf(out, "P_RX = %.2f dBm\n", received_power(b));
  return out;
}

RisChannel parse_ris_channels(std::string_view text) {
  using nlohmann::json;
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::parse_error, std::string("channels: ") + e.what());
  }
  auto complex_list = [&](const char* key) {
    std::vector<cplx> out;
    const auto it = doc.find(key);
    if (it == doc.end() || !it->is_array()) {
      throw Error(ErrorCode::parse_error, std::string("channels: missing array \"") + key + "\"");
    }
    for (const auto& e : *it) {
      if (!e.is_array() || e.size() != 2 || !e[0].is_number() || !e[1].is_number()) {
        throw Error(ErrorCode::parse_error,
                    std::string("channels: entries of \"") + key + "\" must be [re, im]");
      }
      out.emplace_back(e[0].get<double>(), e[1].get<double>());
    }
    return out;
  };
  if (!doc.is_object()) throw Error(ErrorCode::parse_error, "channels: expected an object");
  RisChannel ch;
  ch.g = complex_list("g");
  ch.h = complex_list("h");
  if (ch.g.size() != ch.h.size()) {
    throw Error(ErrorCode::length_mismatch, "channels: g and h lengths differ");
  }
  if (const auto it = doc.find("phi"); it != doc.end()) {
    if (!it->is_array()) throw Error(ErrorCode::parse_error, "channels: phi must be an array");
    for (const auto& v : *it) {
      if (!v.is_number()) throw Error(ErrorCode::parse_error, "channels: phi must be numeric");
      ch.phi.push_back(v.get<double>());
    }
  } else {
    ch.phi.assign(ch.g.size(), 0.0);
  }
  return ch;
}

std::string ris_report(const RisChannel& ch) {
  const double before = std::abs(composite_channel(ch.g, ch.h, ch.phi));
  const std::vector<double> phi = optimal_phases(ch.g, ch.h);
  const double after = std::abs(composite_channel(ch.g, ch.h, phi));
  std::string out;
  appendf(out, "atoms: %zu\n", ch.g.size());
  appendf(out, "|k| before = %.12g\n", before);
  appendf(out, "|k| after = %.12g\n", after);
  appendf(out, "sum |g||h| = %.12g\n", coherent_bound(ch.g, ch.h));
  for (std::size_t n = 0; n < phi.size(); ++n) {
    appendf(out, "phi[%zu] = %.12g rad\n", n, phi[n]);
  }
  return out;
}

std::string pattern_report(const ScatterPattern& pattern, double p) {
  std::string out;
  appendf(out, "peak angle = %.6f deg\n", degrees(peak_angle(pattern)));
  appendf(out, "peak intensity = %.9g m^2\n", pattern.peak_intensity);
  appendf(out, "sidelobes = %d\n", count_sidelobes(pattern));
  appendf(out, "predicted sidelobes (2p-1) = %d%s\n", sidelobe_count(p),
          sidelobe_law_applies(p) ? "" : " (2p not integral)");
  try {
    appendf(out, "hpbw = %.6f deg\n", degrees(hpbw(pattern)));
  } catch (const Error& e) {
    if (e.code() != ErrorCode::truncated_lobe) throw;
    out += "hpbw = truncated (main lobe reaches the domain edge)\n";
  }
  return out;
}

}  // namespace rectimesh
