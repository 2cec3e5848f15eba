// Copyright 2026 The Deedscan Authors.
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

// Writes the synthetic grid fixture to a directory:
//   deedscan_fixture <dir> [docs] [seed] [bytes-per-doc]

#include <cstdlib>
#include <iostream>
#include <string>

#include "synth.h"

int main(int argc, char **argv) {
  if (argc < 2 || argc > 5) {
    std::cerr << "usage: deedscan_fixture <dir> [docs] [seed] [bytes-per-doc]\n";
    return 2;
  }
  size_t docs = argc > 2 ? std::stoul(argv[2]) : 200;
  uint64_t seed = argc > 3 ? std::stoull(argv[3]) : 1;
  size_t bytes = argc > 4 ? std::stoul(argv[4]) : 0;
  try {
    deedscan::synth::WriteFixture(argv[1],
                                  deedscan::synth::MakeFixtureCorpus(docs, seed, bytes));
  } catch (const std::exception &e) {
    std::cerr << "deedscan_fixture: " << e.what() << "\n";
    return 1;
  }
  std::cout << "wrote " << docs << " deeds to " << argv[1] << "\n";
  return 0;
}
