// Copyright 2026 The xorgames Authors
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


// Decides a named family, prints its certificate and, for value < 1,
// builds and checks a refutation.
//
//   decide_family cg4

#include <iostream>

#include "xorgames/xorgames.hpp"

int main(int argc, char** argv) {
  using namespace xorgames;
  const std::string name = argc > 1 ? argv[1] : "cg3";
  const auto game = family_by_name(name);
  if (!game) {
    std::cerr << "unknown family " << name << "\n";
    return 2;
  }
  std::cout << serialize_game(*game);
  const DualityResult r = duality_check(*game);
  if (const auto* merp = std::get_if<MerpStrategy>(&r)) {
    std::cout << merp_to_json(*merp, game->k(), game->n()).dump() << "\n";
    std::cout << "simulated value " << simulate_merp(*game, *merp) << "\n";
    return 0;
  }
  const auto& pref = std::get<PrefSpecification>(r);
  std::cout << pref_to_json(pref).dump() << "\n";
  if (!is_symmetric(*game)) {
    std::cout << "not symmetric; no refutation is built\n";
    return 0;
  }
  const RefutationCertificate cert = build_refutation_symmetric(*game, pref.z, name);
  std::cout << "refutation of length " << cert.indices.size() << " verifies: "
            << (is_refutation(*game, cert.indices) ? "yes" : "no") << "\n"
            << "value <= " << value_upper_bound_from_refutation(game->m(), cert.indices.size())
            << "\n";
  return 0;
}
