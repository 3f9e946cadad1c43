#include <cstdint>
#include <filesystem>
#include <fstream>
#include <string>

#include <zlib.h>

#include "doctest.h"
#include "perfumes/errors.hpp"
#include "perfumes/sb3.hpp"

using namespace perfumes;
namespace fs = std::filesystem;

namespace {

fs::path fixture(const std::string &name) { return fs::path(FIXTURE_DIR) / name; }

std::string read_file(const fs::path &p) {
    std::ifstream in(p, std::ios::binary);
    REQUIRE(in.good());
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void put16(std::string &s, std::uint16_t v) {
    s.push_back(static_cast<char>(v & 0xff));
    s.push_back(static_cast<char>(v >> 8));
}
void put32(std::string &s, std::uint32_t v) {
    for (int i = 0; i < 4; ++i)
        s.push_back(static_cast<char>((v >> (8 * i)) & 0xff));
}

/// Single-member zip archive, stored (method 0).
std::string make_zip(const std::string &name, const std::string &data) {
    std::uint32_t crc = static_cast<std::uint32_t>(
        crc32(0, reinterpret_cast<const Bytef *>(data.data()), static_cast<uInt>(data.size())));
    std::string out;
    put32(out, 0x04034b50);
    put16(out, 20);
    put16(out, 0);
    put16(out, 0); // stored
    put16(out, 0);
    put16(out, 0);
    put32(out, crc);
    put32(out, static_cast<std::uint32_t>(data.size()));
    put32(out, static_cast<std::uint32_t>(data.size()));
    put16(out, static_cast<std::uint16_t>(name.size()));
    put16(out, 0);
    out += name;
    out += data;

    std::uint32_t cd_offset = static_cast<std::uint32_t>(out.size());
    put32(out, 0x02014b50);
    put16(out, 20);
    put16(out, 20);
    put16(out, 0);
    put16(out, 0);
    put16(out, 0);
    put16(out, 0);
    put32(out, crc);
    put32(out, static_cast<std::uint32_t>(data.size()));
    put32(out, static_cast<std::uint32_t>(data.size()));
    put16(out, static_cast<std::uint16_t>(name.size()));
    put16(out, 0);
    put16(out, 0);
    put16(out, 0);
    put16(out, 0);
    put32(out, 0);
    put32(out, 0); // local header offset
    out += name;
    std::uint32_t cd_size = static_cast<std::uint32_t>(out.size()) - cd_offset;

    put32(out, 0x06054b50);
    put16(out, 0);
    put16(out, 0);
    put16(out, 1);
    put16(out, 1);
    put32(out, cd_size);
    put32(out, cd_offset);
    put16(out, 0);
    return out;
}

} // namespace

TEST_CASE("decode_input_slot covers the slot encodings") {
    auto lit = sb3::decode_input_slot(R"([1,[4,"10"]])");
    CHECK(lit.type == sb3::InputSlot::Type::Literal);
    CHECK(lit.literal_kind == "number");
    CHECK(lit.value == "10");

    auto blk = sb3::decode_input_slot(R"([3,"blockXYZ",[10,""]])");
    CHECK(blk.type == sb3::InputSlot::Type::BlockRef);
    CHECK(blk.value == "blockXYZ");

    auto bc = sb3::decode_input_slot(R"([1,[11,"Let's start!","bid"]])");
    CHECK(bc.type == sb3::InputSlot::Type::BroadcastRef);
    CHECK(bc.value == "Let's start!");
    CHECK(bc.id == "bid");

    auto var = sb3::decode_input_slot(R"([2,[12,"score","vid"]])");
    CHECK(var.type == sb3::InputSlot::Type::VariableRef);
    CHECK(var.value == "score");

    auto lst = sb3::decode_input_slot(R"([1,[13,"items","lid"]])");
    CHECK(lst.type == sb3::InputSlot::Type::ListRef);
    CHECK(lst.value == "items");

    auto none = sb3::decode_input_slot(R"([1,null])");
    CHECK(none.type == sb3::InputSlot::Type::Empty);

    auto odd = sb3::decode_input_slot(R"([1,[99,"x"]])");
    CHECK(odd.type == sb3::InputSlot::Type::Literal);
    CHECK(odd.literal_kind == "unknown");
}

TEST_CASE("parse_project_json reads a whole project") {
    auto p = sb3::parse_project_json(read_file(fixture("mouse_check_loop.json")));
    REQUIRE(p.targets.size() == 2);
    CHECK(p.targets[0].is_stage);
    CHECK(p.targets[1].name == "Cat");
    const auto &blocks = p.targets[1].blocks;
    REQUIRE(blocks.contains("hat1"));
    CHECK(blocks.at("hat1").opcode == "event_whenflagclicked");
    CHECK(blocks.at("hat1").is_top_level);
    REQUIRE(blocks.contains("b_forever"));
    CHECK(blocks.at("b_forever").inputs.at("SUBSTACK").type == sb3::InputSlot::Type::BlockRef);
}

TEST_CASE("parse_project_json rejects malformed documents") {
    CHECK_THROWS_AS((void)sb3::parse_project_json("[]"), FormatError);
    CHECK_THROWS_AS((void)sb3::parse_project_json("{}"), FormatError);
    CHECK_THROWS_AS((void)sb3::parse_project_json("not json"), FormatError);
    // Stage is mandatory and unique.
    CHECK_THROWS_AS((void)sb3::parse_project_json(R"({"targets":[]})"), FormatError);
}

TEST_CASE("load_project handles bare json and zip archives") {
    auto direct = sb3::load_project(fixture("mouse_check_loop.json"));
    REQUIRE(direct.targets.size() == 2);

    auto tmp = fs::temp_directory_path() / "ingest_roundtrip.sb3";
    {
        std::ofstream out(tmp, std::ios::binary);
        out << make_zip("project.json", read_file(fixture("mouse_check_loop.json")));
    }
    auto zipped = sb3::load_project(tmp);
    REQUIRE(zipped.targets.size() == 2);
    CHECK(zipped.targets[1].blocks.size() == direct.targets[1].blocks.size());
    fs::remove(tmp);
}

TEST_CASE("load_project reports missing files and archives without project.json") {
    CHECK_THROWS_AS((void)sb3::load_project(fixture("does_not_exist.json")), IoError);

    auto tmp = fs::temp_directory_path() / "ingest_noproject.sb3";
    {
        std::ofstream out(tmp, std::ios::binary);
        out << make_zip("other.txt", "hello");
    }
    CHECK_THROWS_AS((void)sb3::load_project(tmp), FormatError);
    fs::remove(tmp);
}

TEST_CASE("parsing is deterministic") {
    auto text = read_file(fixture("broadcast_sent.json"));
    auto a = sb3::parse_project_json(text);
    auto b = sb3::parse_project_json(text);
    REQUIRE(a.targets.size() == b.targets.size());
    for (std::size_t i = 0; i < a.targets.size(); ++i) {
        CHECK(a.targets[i].name == b.targets[i].name);
        CHECK(a.targets[i].blocks.size() == b.targets[i].blocks.size());
    }
    CHECK(a.diagnostics == b.diagnostics);
}

TEST_CASE("blocks missing an opcode are schema errors") {
    std::string text = R"({
      "targets": [
        {"isStage": true, "name": "Stage", "variables": {}, "lists": {}, "broadcasts": {},
         "blocks": {"b1": {"next": null, "parent": null, "inputs": {}, "fields": {},
                    "shadow": false, "topLevel": true}}}
      ]
    })";
    CHECK_THROWS_AS((void)sb3::parse_project_json(text), SchemaError);
}
