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

#include "murlab/io.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <ctime>
#include <fstream>
#include <sstream>

#include "murlab/errors.hpp"
#include "murlab/simlab.hpp"
#include "murlab/version.hpp"

namespace murlab::io {

std::string format_double(double v) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::general, 12);
    return std::string(buf, res.ptr);
}

CsvWriter::CsvWriter(std::vector<std::string> header) : columns_(header.size()) {
    for (size_t i = 0; i < header.size(); ++i) {
        if (i > 0) {
            out_.push_back(',');
        }
        out_ += header[i];
    }
    out_.push_back('\n');
}

void CsvWriter::cell(std::string_view s) {
    if (in_row_ >= columns_) {
        throw_domain(errkind::domain_error, "CSV row has more cells than the header");
    }
    if (in_row_ > 0) {
        out_.push_back(',');
    }
    out_ += s;
    ++in_row_;
}

CsvWriter& CsvWriter::value(double v) {
    cell(format_double(v));
    return *this;
}

CsvWriter& CsvWriter::text(std::string_view s) {
    cell(s);
    return *this;
}

CsvWriter& CsvWriter::empty() {
    cell("");
    return *this;
}

void CsvWriter::end_row() {
    if (in_row_ != columns_) {
        throw_domain(errkind::domain_error, "CSV row has fewer cells than the header");
    }
    out_.push_back('\n');
    in_row_ = 0;
}

void CsvWriter::write_file(const std::string& path) const { io::write_file(path, out_); }

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw_io("cannot open '" + path + "' for reading");
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    if (in.bad()) {
        throw_io("failed reading '" + path + "'");
    }
    return ss.str();
}

void write_file(const std::string& path, std::string_view data) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw_io("cannot open '" + path + "' for writing");
    }
    out.write(data.data(), static_cast<std::streamsize>(data.size()));
    if (!out) {
        throw_io("failed writing '" + path + "'");
    }
}

namespace {

std::string trim(std::string_view s) {
    const auto from = s.find_first_not_of(" \t\r\n");
    if (from == std::string_view::npos) {
        return "";
    }
    const auto to = s.find_last_not_of(" \t\r\n");
    return std::string(s.substr(from, to - from + 1));
}

double parse_double(const std::string& v, const std::string& key) {
    try {
        size_t used = 0;
        const double x = std::stod(v, &used);
        if (used != v.size()) {
            throw std::invalid_argument(v);
        }
        return x;
    } catch (const std::exception&) {
        throw_domain(errkind::domain_error, "bad numeric value for " + key + ": '" + v + "'");
    }
}

std::uint64_t parse_u64(const std::string& v, const std::string& key) {
    std::uint64_t x = 0;
    const auto res = std::from_chars(v.data(), v.data() + v.size(), x);
    if (res.ec != std::errc() || res.ptr != v.data() + v.size()) {
        throw_domain(errkind::domain_error, "bad integer value for " + key + ": '" + v + "'");
    }
    return x;
}

}  // namespace

void load_noise_config(const std::string& path, sim::NoiseModel& noise) {
    const std::string content = read_file(path);
    std::istringstream in(content);
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const std::string t = trim(line);
        if (t.empty() || t[0] == '#') {
            continue;
        }
        const auto eq = t.find('=');
        if (eq == std::string::npos) {
            throw_domain(errkind::domain_error,
                         "config line " + std::to_string(line_no) + " is not key=value: '" + t + "'");
        }
        const std::string key = trim(t.substr(0, eq));
        const std::string value = trim(t.substr(eq + 1));
        if (key == "prep_fidelity") {
            noise.prep_fidelity = parse_double(value, key);
        } else if (key == "detection_flip") {
            noise.detection_flip = parse_double(value, key);
        } else if (key == "depolarize") {
            noise.depolarize = parse_double(value, key);
        } else if (key == "shots") {
            noise.shots = parse_u64(value, key);
        } else if (key == "seed") {
            noise.seed = parse_u64(value, key);
        } else {
            throw_domain(errkind::domain_error, "unknown config key '" + key + "'");
        }
    }
}

ManifestParam ManifestParam::number(std::string key, double v) {
    return {std::move(key), format_double(v)};
}

ManifestParam ManifestParam::integer(std::string key, std::uint64_t v) {
    return {std::move(key), std::to_string(v)};
}

ManifestParam ManifestParam::boolean(std::string key, bool v) {
    return {std::move(key), v ? "true" : "false"};
}

ManifestParam ManifestParam::string(std::string key, std::string_view v) {
    std::string quoted = "\"";
    for (char c : v) {
        if (c == '"' || c == '\\') {
            quoted.push_back('\\');
        }
        quoted.push_back(c);
    }
    quoted.push_back('"');
    return {std::move(key), std::move(quoted)};
}

void write_manifest(const std::string& command, const std::vector<ManifestParam>& params,
                    const std::vector<std::string>& output_paths) {
    if (output_paths.empty()) {
        throw_domain(errkind::domain_error, "manifest needs at least one output");
    }
    const auto now = std::chrono::system_clock::now();
    const std::time_t tnow = std::chrono::system_clock::to_time_t(now);
    std::tm utc{};
    gmtime_r(&tnow, &utc);
    char stamp[32];
    std::strftime(stamp, sizeof(stamp), "%Y-%m-%dT%H:%M:%SZ", &utc);

    std::ostringstream j;
    j << "{\n";
    j << "  \"command\": \"" << command << "\",\n";
    j << "  \"version\": \"" << version_string() << "\",\n";
    j << "  \"timestamp_utc\": \"" << stamp << "\",\n";
    j << "  \"parameters\": {";
    for (size_t i = 0; i < params.size(); ++i) {
        j << (i ? ", " : "") << "\"" << params[i].key << "\": " << params[i].json_value;
    }
    j << "},\n";
    j << "  \"outputs\": [\n";
    for (size_t i = 0; i < output_paths.size(); ++i) {
        const std::string data = read_file(output_paths[i]);
        j << "    {\"path\": \"" << output_paths[i] << "\", \"sha256\": \"" << sha256_hex(data)
          << "\", \"bytes\": " << data.size() << "}" << (i + 1 < output_paths.size() ? "," : "")
          << "\n";
    }
    j << "  ]\n";
    j << "}\n";
    write_file(output_paths.front() + ".manifest.json", j.str());
}

void write_svg(const std::string& path, const std::string& title,
               const std::vector<SvgSeries>& series) {
    constexpr double kW = 720.0, kH = 480.0, kMargin = 60.0;
    double xmin = 0.0, xmax = 1.0, ymin = 0.0, ymax = 1.0;
    bool first = true;
    for (const auto& s : series) {
        for (const auto& [x, y] : s.points) {
            if (first) {
                xmin = xmax = x;
                ymin = ymax = y;
                first = false;
            } else {
                xmin = std::min(xmin, x);
                xmax = std::max(xmax, x);
                ymin = std::min(ymin, y);
                ymax = std::max(ymax, y);
            }
        }
    }
    if (xmax <= xmin) {
        xmax = xmin + 1.0;
    }
    if (ymax <= ymin) {
        ymax = ymin + 1.0;
    }
    auto px = [&](double x) { return kMargin + (x - xmin) / (xmax - xmin) * (kW - 2 * kMargin); };
    auto py = [&](double y) { return kH - kMargin - (y - ymin) / (ymax - ymin) * (kH - 2 * kMargin); };

    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kW << "\" height=\"" << kH
        << "\" viewBox=\"0 0 " << kW << " " << kH << "\">\n";
    svg << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    svg << "<text x=\"" << kW / 2 << "\" y=\"24\" text-anchor=\"middle\" font-size=\"16\">" << title
        << "</text>\n";
    svg << "<line x1=\"" << kMargin << "\" y1=\"" << kH - kMargin << "\" x2=\"" << kW - kMargin
        << "\" y2=\"" << kH - kMargin << "\" stroke=\"black\"/>\n";
    svg << "<line x1=\"" << kMargin << "\" y1=\"" << kMargin << "\" x2=\"" << kMargin << "\" y2=\""
        << kH - kMargin << "\" stroke=\"black\"/>\n";
    svg << "<text x=\"" << kMargin << "\" y=\"" << kH - kMargin + 18
        << "\" font-size=\"11\" text-anchor=\"middle\">" << format_double(xmin) << "</text>\n";
    svg << "<text x=\"" << kW - kMargin << "\" y=\"" << kH - kMargin + 18
        << "\" font-size=\"11\" text-anchor=\"middle\">" << format_double(xmax) << "</text>\n";
    svg << "<text x=\"" << kMargin - 6 << "\" y=\"" << kH - kMargin
        << "\" font-size=\"11\" text-anchor=\"end\">" << format_double(ymin) << "</text>\n";
    svg << "<text x=\"" << kMargin - 6 << "\" y=\"" << kMargin + 4
        << "\" font-size=\"11\" text-anchor=\"end\">" << format_double(ymax) << "</text>\n";
    double legend_y = kMargin;
    for (const auto& s : series) {
        svg << "<polyline fill=\"none\" stroke=\"" << s.color << "\" stroke-width=\"1.5\" points=\"";
        for (const auto& [x, y] : s.points) {
            svg << px(x) << "," << py(y) << " ";
        }
        svg << "\"/>\n";
        svg << "<text x=\"" << kW - kMargin + 4 << "\" y=\"" << legend_y << "\" font-size=\"11\" fill=\""
            << s.color << "\">" << s.name << "</text>\n";
        legend_y += 14.0;
    }
    svg << "</svg>\n";
    write_file(path, svg.str());
}

}  // namespace murlab::io
