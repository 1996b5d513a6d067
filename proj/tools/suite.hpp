/*
   Copyright 2026 The ffdescent Authors

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

#ifndef FFDESCENT_TOOLS_SUITE_HPP
#define FFDESCENT_TOOLS_SUITE_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "ffdescent/report.hpp"

namespace ffd::suite {

struct Options {
    std::uint64_t seed = 20261014;
    int trials = 40;  // Monte Carlo trials for the squareness criterion
    double cap = 1e9;  // candidate cap for the height-bound enumeration
    double lambda = 1.0;
    bool parallel = true;
    std::string filter;  // tag or id; empty runs everything
};

enum class Verdict { pass, fail, inconclusive };
std::string to_string(Verdict v);

struct Info {
    int id;
    std::string name;
    std::vector<std::string> tags;
};

struct Result {
    int id = 0;
    std::string name;
    Verdict verdict = Verdict::fail;
    std::string summary;
    json report;
};

const std::vector<Info>& criteria();
bool selected(const Info& c, const std::string& filter);

/// Deterministic in (id, options); timing never enters the report.
Result run(int id, const Options& opt);
std::vector<Result> run_all(const Options& opt);

}  // namespace ffd::suite

#endif
