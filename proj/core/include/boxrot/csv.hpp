/**
 * Copyright 2026 The boxrot Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 * http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef BOXROT_CSV_HPP
#define BOXROT_CSV_HPP

#include <filesystem>
#include <ostream>
#include <string>
#include <vector>

namespace boxrot {

// A CSV table with a fixed header. Cells are stored pre-formatted.
class CsvTable {
 public:
  explicit CsvTable(std::vector<std::string> header);

  const std::vector<std::string>& header() const { return header_; }
  const std::vector<std::vector<std::string>>& rows() const { return rows_; }

  // Throws InvalidArgument when the cell count differs from the header.
  void add_row(std::vector<std::string> cells);

  void write(std::ostream& out) const;
  void save(const std::filesystem::path& path) const;

 private:
  std::vector<std::string> header_;
  std::vector<std::vector<std::string>> rows_;
};

// Fixed 6-decimal rendering used for every floating-point CSV cell.
std::string format_real(double v);

}  // namespace boxrot

#endif  // BOXROT_CSV_HPP
