// Copyright 2026 The murlab Authors
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

#ifndef MURLAB_IO_HPP
#define MURLAB_IO_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace murlab::sim {
struct NoiseModel;
}

namespace murlab::io {

/// Locale-independent float formatting with 12 significant digits, the
/// contract for every numeric CSV cell.
std::string format_double(double v);

/// Comma-separated output with a fixed header; rows are checked against the
/// column count. Decimal separator is always '.'.
class CsvWriter {
  public:
    explicit CsvWriter(std::vector<std::string> header);

    CsvWriter& value(double v);
    CsvWriter& text(std::string_view s);
    CsvWriter& empty();
    void end_row();

    const std::string& str() const { return out_; }
    void write_file(const std::string& path) const;

  private:
    void cell(std::string_view s);

    size_t columns_;
    size_t in_row_ = 0;
    std::string out_;
};

/// SHA-256 digest, lowercase hex.
std::string sha256_hex(std::string_view data);
std::string sha256_file(const std::string& path);

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view data);

/// Overlay key=value noise settings from a plain-text file onto `noise`.
/// Recognized keys: prep_fidelity, detection_flip, shots, seed, depolarize.
/// Blank lines and lines starting with '#' are ignored; unknown keys fail.
void load_noise_config(const std::string& path, sim::NoiseModel& noise);

/// One named parameter of a run manifest, kept as a pre-rendered JSON
/// value so numeric parameters round-trip exactly.
struct ManifestParam {
    std::string key;
    std::string json_value;

    static ManifestParam number(std::string key, double v);
    static ManifestParam integer(std::string key, std::uint64_t v);
    static ManifestParam boolean(std::string key, bool v);
    static ManifestParam string(std::string key, std::string_view v);
};

/// Sidecar record sufficient to reproduce a command's outputs: command
/// name, parameters, tool version, timestamp, and output digests. Written
/// to "<first output>.manifest.json".
void write_manifest(const std::string& command, const std::vector<ManifestParam>& params,
                    const std::vector<std::string>& output_paths);

/// One plotted line of the SVG convenience output.
struct SvgSeries {
    std::string name;
    std::string color;
    std::vector<std::pair<double, double>> points;
};

/// Minimal text-only line plot; no plotting dependency, purely a visual aid
/// next to the CSV contract.
void write_svg(const std::string& path, const std::string& title,
               const std::vector<SvgSeries>& series);

}  // namespace murlab::io

#endif
