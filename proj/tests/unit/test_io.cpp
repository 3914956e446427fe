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

#include <doctest.h>

#include <cstdio>
#include <filesystem>

#include "murlab/errors.hpp"
#include "murlab/io.hpp"
#include "murlab/simlab.hpp"

using namespace murlab;

namespace {
std::filesystem::path scratch_dir() {
    const auto dir = std::filesystem::temp_directory_path() / "murlab_io_tests";
    std::filesystem::create_directories(dir);
    return dir;
}
}  // namespace

TEST_CASE("doubles print with 12 significant digits and a dot") {
    CHECK(io::format_double(0.1) == "0.1");
    CHECK(io::format_double(1.0 / 3.0) == "0.333333333333");
    CHECK(io::format_double(3.141592653589793) == "3.14159265359");
    CHECK(io::format_double(0.0) == "0");
    CHECK(io::format_double(-2.5) == "-2.5");
}

TEST_CASE("CSV rows line up with the header") {
    io::CsvWriter csv({"a", "b"});
    csv.value(1.0).value(0.25);
    csv.end_row();
    csv.text("x").empty();
    csv.end_row();
    CHECK(csv.str() == "a,b\n1,0.25\nx,\n");

    io::CsvWriter bad({"a", "b"});
    bad.value(1.0);
    CHECK_THROWS_AS(bad.end_row(), Error);
    bad.value(2.0);
    CHECK_THROWS_AS(bad.value(3.0), Error);
}

TEST_CASE("sha256 reference vectors") {
    CHECK(io::sha256_hex("") ==
          "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
    CHECK(io::sha256_hex("abc") ==
          "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
    // multi-block input
    CHECK(io::sha256_hex(std::string(200, 'a')).size() == 64);
}

TEST_CASE("noise config overlay") {
    const auto path = scratch_dir() / "noise.cfg";
    io::write_file(path.string(),
                   "# lab defaults\nprep_fidelity = 0.99\ndetection_flip=0.001\n\nshots = 1234\n"
                   "seed=9\ndepolarize = 0.05\n");
    sim::NoiseModel noise;
    io::load_noise_config(path.string(), noise);
    CHECK(noise.prep_fidelity == doctest::Approx(0.99));
    CHECK(noise.detection_flip == doctest::Approx(0.001));
    CHECK(noise.shots == 1234);
    CHECK(noise.seed == 9);
    CHECK(noise.depolarize == doctest::Approx(0.05));

    io::write_file(path.string(), "bogus_key = 1\n");
    CHECK_THROWS_AS(io::load_noise_config(path.string(), noise), Error);
    io::write_file(path.string(), "shots = not_a_number\n");
    CHECK_THROWS_AS(io::load_noise_config(path.string(), noise), Error);
    try {
        io::load_noise_config((scratch_dir() / "missing.cfg").string(), noise);
        FAIL("expected IoError");
    } catch (const Error& e) {
        CHECK(e.kind() == errkind::io_error);
        CHECK(e.code() == ErrorCode::io);
    }
}

TEST_CASE("manifest records the digest of its outputs") {
    const auto out = scratch_dir() / "data.csv";
    io::write_file(out.string(), "a,b\n1,2\n");
    io::write_manifest("curve", {io::ManifestParam::number("sin_chi", 0.5)}, {out.string()});
    const std::string manifest = io::read_file(out.string() + ".manifest.json");
    CHECK(manifest.find("\"command\": \"curve\"") != std::string::npos);
    CHECK(manifest.find(io::sha256_file(out.string())) != std::string::npos);
    CHECK(manifest.find("\"sin_chi\": 0.5") != std::string::npos);
}

TEST_CASE("svg plot is self-contained text") {
    const auto out = scratch_dir() / "plot.svg";
    io::write_svg(out.string(), "demo", {{"line", "black", {{0.0, 0.0}, {1.0, 2.0}}}});
    const std::string svg = io::read_file(out.string());
    CHECK(svg.rfind("<svg", 0) == 0);
    CHECK(svg.find("polyline") != std::string::npos);
}
