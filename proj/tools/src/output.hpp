// Copyright 2026 The sphull Authors
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

// Tabular output shared by all commands: a CSV dialect with one comment line,
// a header row and shortest round-trip floats, or the same rows as JSON.

#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace sphull::cli {

inline constexpr int kSchemaVersion = 1;

// An empty cell is written as nothing in CSV and null in JSON.
using Cell = std::variant<std::monostate, std::int64_t, double, bool, std::string>;

struct Table {
  std::string command;
  // Echoed invocation settings. Settings that cannot change the numbers,
  // such as the worker count, are left out so outputs stay byte-identical.
  std::vector<std::pair<std::string, Cell>> config;
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;

  void add_row(std::vector<Cell> row);
};

// Shortest decimal that parses back to the same double.
std::string format_double(double x);

void write_csv(const Table& table, std::ostream& out);
void write_json(const Table& table, std::ostream& out);

}  // namespace sphull::cli
