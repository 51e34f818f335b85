// Copyright 2026 The nonclass Authors
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

#include "nonclass/state_spec.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <map>
#include <vector>

#include "nonclass/analytic.hpp"
#include "nonclass/output.hpp"

namespace nonclass {
namespace {

struct Field {
  std::string_view key;
  std::string_view value;
  std::size_t key_pos;
  std::size_t value_pos;
};

double parse_real(const Field& f) {
  if (f.value.empty()) throw ParseError("empty value for key '" + std::string(f.key) + "'", f.value_pos);
  double v = 0.0;
  const char* first = f.value.data();
  const char* end = first + f.value.size();
  // from_chars rejects a leading '+', accept it for convenience.
  if (*first == '+') ++first;
  const auto [ptr, ec] = std::from_chars(first, end, v);
  if (ec != std::errc() || ptr != end)
    throw ParseError("invalid number '" + std::string(f.value) + "'",
                     f.value_pos + static_cast<std::size_t>(ptr - f.value.data()));
  if (!std::isfinite(v))
    throw DomainError("non-finite value for key '" + std::string(f.key) + "'");
  return v;
}

int parse_int(const Field& f) {
  if (f.value.empty()) throw ParseError("empty value for key '" + std::string(f.key) + "'", f.value_pos);
  int v = 0;
  const char* end = f.value.data() + f.value.size();
  const auto [ptr, ec] = std::from_chars(f.value.data(), end, v);
  if (ec != std::errc() || ptr != end)
    throw ParseError("invalid integer '" + std::string(f.value) + "'",
                     f.value_pos + static_cast<std::size_t>(ptr - f.value.data()));
  return v;
}

Field split_field(std::string_view token, std::size_t pos) {
  const auto eq = token.find('=');
  if (eq == std::string_view::npos || eq == 0)
    throw ParseError("expected <key>=<value>", pos);
  return {token.substr(0, eq), token.substr(eq + 1), pos, pos + eq + 1};
}

}  // namespace

StateSpec parse_state_spec(std::string_view text) {
  const auto colon = text.find(':');
  if (colon == std::string_view::npos) throw ParseError("expected <family>:", text.size());
  const std::string_view family = text.substr(0, colon);

  std::vector<std::string_view> keys;
  if (family == "coherent") {
    keys = {"re", "im"};
  } else if (family == "svs") {
    keys = {"r", "phi"};
  } else if (family == "fock") {
    keys = {"n"};
  } else {
    throw ParseError("unknown family '" + std::string(family) + "'", 0);
  }

  std::string_view body = text.substr(colon + 1);
  const std::size_t body_pos = colon + 1;
  StateSpec spec;
  constexpr std::string_view kAdd = "+add=";
  if (const auto add = body.find(kAdd); add != std::string_view::npos) {
    const Field f{"add", body.substr(add + kAdd.size()), body_pos + add + 1,
                  body_pos + add + kAdd.size()};
    spec.added_photons = parse_int(f);
    if (spec.added_photons < 0) throw DomainError("added photon number must be >= 0");
    body = body.substr(0, add);
  }

  std::map<std::string_view, Field> fields;
  std::size_t start = 0;
  while (true) {
    const auto comma = body.find(',', start);
    const auto token = body.substr(start, comma == std::string_view::npos ? body.npos : comma - start);
    const Field f = split_field(token, body_pos + start);
    if (std::find(keys.begin(), keys.end(), f.key) == keys.end())
      throw ParseError("unknown key '" + std::string(f.key) + "' for family '" +
                           std::string(family) + "'",
                       f.key_pos);
    if (!fields.emplace(f.key, f).second)
      throw ParseError("duplicate key '" + std::string(f.key) + "'", f.key_pos);
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  for (const auto& key : keys)
    if (!fields.contains(key))
      throw ParseError("missing key '" + std::string(key) + "'", body_pos + body.size());

  if (family == "coherent") {
    spec.params = CoherentParams{parse_real(fields.at("re")), parse_real(fields.at("im"))};
  } else if (family == "svs") {
    const SqueezedParams sp{parse_real(fields.at("r")), parse_real(fields.at("phi"))};
    if (sp.r < 0.0) throw DomainError("squeeze parameter r must be >= 0 (fold the sign into phi)");
    spec.params = sp;
  } else {
    const FockParams fp{parse_int(fields.at("n"))};
    if (fp.n < 0) throw DomainError("photon number n must be >= 0");
    spec.params = fp;
  }
  return spec;
}

std::string render_state_spec(const StateSpec& spec) {
  std::string out;
  if (const auto* c = std::get_if<CoherentParams>(&spec.params)) {
    out = "coherent:re=" + format_real(c->re) + ",im=" + format_real(c->im);
  } else if (const auto* s = std::get_if<SqueezedParams>(&spec.params)) {
    out = "svs:r=" + format_real(s->r) + ",phi=" + format_real(s->phi);
  } else {
    out = "fock:n=" + std::to_string(std::get<FockParams>(spec.params).n);
  }
  if (spec.added_photons != 0) out += "+add=" + std::to_string(spec.added_photons);
  return out;
}

FockState build_state(const StateSpec& spec) {
  const int p = spec.added_photons;
  if (p < 0) throw DomainError("added photon number must be >= 0");
  const FockState base = std::visit(
      [&](const auto& params) -> FockState {
        using T = std::decay_t<decltype(params)>;
        if constexpr (std::is_same_v<T, CoherentParams>) {
          return make_coherent<double>({params.re, params.im}, spec.cutoff_override, p);
        } else if constexpr (std::is_same_v<T, SqueezedParams>) {
          return make_squeezed_vacuum<double>(params.r, params.phi, spec.cutoff_override, p);
        } else {
          if (params.n < 0) throw DomainError("photon number n must be >= 0");
          if (!spec.cutoff_override) return make_fock(params.n);
          if (*spec.cutoff_override < params.n)
            throw CutoffError("cutoff below the Fock photon number");
          FockState::Vector c = FockState::Vector::Zero(*spec.cutoff_override + 1);
          c(params.n) = 1.0;
          return FockState(std::move(c), 0.0);
        }
      },
      spec.params);
  return add_photons(base, p).first;
}

std::optional<AnalyticValue> analytic_reference(const StateSpec& spec) {
  const int p = spec.added_photons;
  if (const auto* c = std::get_if<CoherentParams>(&spec.params)) {
    if (p == 0) return AnalyticValue{0.0, "coherent"};
    const double alpha_sq = c->re * c->re + c->im * c->im;
    return AnalyticValue{analytic::dq_pac({p, alpha_sq}), "photon_added_coherent"};
  }
  if (const auto* s = std::get_if<SqueezedParams>(&spec.params)) {
    if (p == 0) return AnalyticValue{analytic::svs_dq(s->r), "squeezed_vacuum"};
    return AnalyticValue{analytic::pasv_dq({p, s->r, s->phi}), "photon_added_squeezed_vacuum"};
  }
  const int total = std::get<FockParams>(spec.params).n + p;
  if (total == 0) return AnalyticValue{0.0, "coherent"};
  return AnalyticValue{analytic::fock_nonclassicality(total).dq, "fock"};
}

}  // namespace nonclass
