#include "perfumes/sb3.hpp"

#include <cstdint>
#include <cstring>
#include <fstream>
#include <set>
#include <sstream>

#include <zlib.h>

#include <json.hpp>

#include "perfumes/errors.hpp"

using nlohmann::json;

namespace perfumes::sb3 {

namespace {

std::string read_file(const std::filesystem::path &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw IoError("cannot open file: " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    if (in.bad())
        throw IoError("read failed: " + path.string());
    return std::move(buf).str();
}

std::uint16_t le16(const unsigned char *p) {
    return static_cast<std::uint16_t>(p[0] | (p[1] << 8));
}

std::uint32_t le32(const unsigned char *p) {
    return static_cast<std::uint32_t>(p[0]) | (static_cast<std::uint32_t>(p[1]) << 8) |
           (static_cast<std::uint32_t>(p[2]) << 16) | (static_cast<std::uint32_t>(p[3]) << 24);
}

std::string inflate_raw(const unsigned char *data, std::size_t len, std::size_t expected) {
    std::string out(expected, '\0');
    z_stream zs{};
    if (inflateInit2(&zs, -MAX_WBITS) != Z_OK)
        throw FormatError("zlib init failed");
    zs.next_in = const_cast<unsigned char *>(data);
    zs.avail_in = static_cast<uInt>(len);
    zs.next_out = reinterpret_cast<unsigned char *>(out.data());
    zs.avail_out = static_cast<uInt>(out.size());
    int rc = inflate(&zs, Z_FINISH);
    inflateEnd(&zs);
    if (rc != Z_STREAM_END)
        throw FormatError("corrupt deflate stream in archive");
    out.resize(zs.total_out);
    return out;
}

// Minimal zip reader, just enough to pull project.json out of an sb3 archive.
// Supports stored and deflated members; no zip64.
std::string extract_zip_member(const std::string &bytes, const std::string &member) {
    const auto *b = reinterpret_cast<const unsigned char *>(bytes.data());
    const std::size_t n = bytes.size();

    // End-of-central-directory record: scan backwards over the comment.
    constexpr std::uint32_t kEocdSig = 0x06054b50;
    constexpr std::size_t kEocdMin = 22;
    if (n < kEocdMin)
        throw FormatError("archive too small");
    std::size_t eocd = std::string::npos;
    std::size_t scan_limit = n >= kEocdMin + 65535 ? n - kEocdMin - 65535 : 0;
    for (std::size_t i = n - kEocdMin + 1; i-- > scan_limit;) {
        if (le32(b + i) == kEocdSig) {
            eocd = i;
            break;
        }
    }
    if (eocd == std::string::npos)
        throw FormatError("no end-of-central-directory record");

    std::uint16_t entries = le16(b + eocd + 10);
    std::uint32_t cd_offset = le32(b + eocd + 16);

    constexpr std::uint32_t kCentralSig = 0x02014b50;
    std::size_t pos = cd_offset;
    for (std::uint16_t i = 0; i < entries; ++i) {
        if (pos + 46 > n || le32(b + pos) != kCentralSig)
            throw FormatError("corrupt central directory");
        std::uint16_t method = le16(b + pos + 10);
        std::uint32_t csize = le32(b + pos + 20);
        std::uint32_t usize = le32(b + pos + 24);
        std::uint16_t name_len = le16(b + pos + 28);
        std::uint16_t extra_len = le16(b + pos + 30);
        std::uint16_t comment_len = le16(b + pos + 32);
        std::uint32_t local_off = le32(b + pos + 42);
        if (pos + 46 + name_len > n)
            throw FormatError("corrupt central directory");
        std::string name(bytes, pos + 46, name_len);
        pos += 46u + name_len + extra_len + comment_len;
        if (name != member)
            continue;

        if (local_off + 30 > n || le32(b + local_off) != 0x04034b50)
            throw FormatError("corrupt local header");
        std::uint16_t lname = le16(b + local_off + 26);
        std::uint16_t lextra = le16(b + local_off + 28);
        std::size_t data_off = local_off + 30u + lname + lextra;
        if (data_off + csize > n)
            throw FormatError("truncated archive member");
        if (method == 0)
            return bytes.substr(data_off, csize);
        if (method == 8)
            return inflate_raw(b + data_off, csize, usize);
        throw FormatError("unsupported compression method " + std::to_string(method));
    }
    throw FormatError("archive has no " + member + " member");
}

InputSlot decode_slot_value(const json &raw) {
    if (!raw.is_array() || raw.empty())
        return InputSlot::empty();
    // raw[0] is the shadow state; raw[1] the value, raw[2] an obscured shadow.
    const json &val = raw.size() > 1 ? raw[1] : json();
    if (val.is_string())
        return InputSlot::block_ref(val.get<std::string>());
    if (val.is_null())
        return InputSlot::empty();
    if (!val.is_array() || val.empty() || !val[0].is_number_integer())
        return InputSlot::empty();

    int code = val[0].get<int>();
    auto text_at = [&](std::size_t i) -> std::string {
        if (i >= val.size())
            return "";
        if (val[i].is_string())
            return val[i].get<std::string>();
        if (val[i].is_number_integer())
            return std::to_string(val[i].get<long long>());
        if (val[i].is_number())
            return std::to_string(val[i].get<double>());
        return "";
    };
    switch (code) {
    case 4:
    case 5:
    case 6:
    case 7:
    case 8:
        return InputSlot::literal("number", text_at(1));
    case 9:
        return InputSlot::literal("color", text_at(1));
    case 10:
        return InputSlot::literal("string", text_at(1));
    case 11:
        return {InputSlot::Type::BroadcastRef, text_at(1), text_at(2), ""};
    case 12:
        return {InputSlot::Type::VariableRef, text_at(1), text_at(2), ""};
    case 13:
        return {InputSlot::Type::ListRef, text_at(1), text_at(2), ""};
    default:
        return InputSlot::literal("unknown", text_at(1));
    }
}

std::string mutation_string(const json &mut, const char *key) {
    auto it = mut.find(key);
    if (it == mut.end())
        return "";
    if (it->is_string())
        return it->get<std::string>();
    return it->dump();
}

RawBlock decode_block(const std::string &id, const json &jb, std::vector<std::string> &diagnostics) {
    RawBlock blk;
    auto op = jb.find("opcode");
    if (op == jb.end() || !op->is_string() || op->get<std::string>().empty())
        throw SchemaError("block " + id + " has no opcode");
    blk.opcode = op->get<std::string>();

    if (auto it = jb.find("next"); it != jb.end() && it->is_string())
        blk.next = it->get<std::string>();
    if (auto it = jb.find("parent"); it != jb.end() && it->is_string())
        blk.parent = it->get<std::string>();
    if (auto it = jb.find("shadow"); it != jb.end() && it->is_boolean())
        blk.is_shadow = it->get<bool>();
    if (auto it = jb.find("topLevel"); it != jb.end() && it->is_boolean())
        blk.is_top_level = it->get<bool>();

    if (auto it = jb.find("inputs"); it != jb.end() && it->is_object()) {
        for (auto &[name, slot] : it->items()) {
            InputSlot decoded = decode_slot_value(slot);
            if (decoded.literal_kind == "unknown")
                diagnostics.push_back("unknown input type code in block " + id + " input " + name);
            blk.inputs.emplace(name, std::move(decoded));
        }
    }
    if (auto it = jb.find("fields"); it != jb.end() && it->is_object()) {
        for (auto &[name, fv] : it->items()) {
            std::string value, fid;
            if (fv.is_array() && !fv.empty()) {
                if (fv[0].is_string())
                    value = fv[0].get<std::string>();
                else if (!fv[0].is_null())
                    value = fv[0].dump();
                if (fv.size() > 1 && fv[1].is_string())
                    fid = fv[1].get<std::string>();
            }
            blk.fields.emplace(name, std::make_pair(value, fid));
        }
    }
    if (auto it = jb.find("mutation"); it != jb.end() && it->is_object()) {
        blk.mutation_proccode = mutation_string(*it, "proccode");
        blk.mutation_argumentnames = mutation_string(*it, "argumentnames");
        blk.mutation_argumentids = mutation_string(*it, "argumentids");
        std::string warp = mutation_string(*it, "warp");
        blk.mutation_warp = (warp == "true" || warp == "1");
    }
    return blk;
}

RawTarget decode_target(const json &jt, std::vector<std::string> &diagnostics) {
    RawTarget t;
    if (auto it = jt.find("name"); it != jt.end() && it->is_string())
        t.name = it->get<std::string>();
    if (auto it = jt.find("isStage"); it != jt.end() && it->is_boolean())
        t.is_stage = it->get<bool>();
    if (auto it = jt.find("blocks"); it != jt.end() && it->is_object()) {
        for (auto &[id, jb] : it->items()) {
            if (!jb.is_object()) {
                // Top-level variable/list reporters are stored as bare arrays;
                // they are not statements and carry no perfume information.
                diagnostics.push_back("skipped non-object block entry " + id + " in target " + t.name);
                continue;
            }
            t.blocks.emplace(id, decode_block(id, jb, diagnostics));
        }
    }
    auto name_of = [](const json &v) -> std::string {
        if (v.is_array() && !v.empty() && v[0].is_string())
            return v[0].get<std::string>();
        if (v.is_string())
            return v.get<std::string>();
        return "";
    };
    if (auto it = jt.find("variables"); it != jt.end() && it->is_object())
        for (auto &[id, v] : it->items())
            t.variables.emplace(id, name_of(v));
    if (auto it = jt.find("lists"); it != jt.end() && it->is_object())
        for (auto &[id, v] : it->items())
            t.lists.emplace(id, name_of(v));
    if (auto it = jt.find("broadcasts"); it != jt.end() && it->is_object())
        for (auto &[id, v] : it->items())
            t.broadcasts.emplace(id, v.is_string() ? v.get<std::string>() : "");
    return t;
}

} // namespace

InputSlot decode_input_slot(const std::string &raw_json) {
    json parsed = json::parse(raw_json, nullptr, false);
    if (parsed.is_discarded())
        throw SchemaError("input slot is not valid JSON");
    return decode_slot_value(parsed);
}

RawProject parse_project_json(const std::string &text) {
    json doc = json::parse(text, nullptr, false);
    if (doc.is_discarded())
        throw FormatError("not parseable as project.json");
    if (!doc.is_object())
        throw FormatError("project.json top level is not an object");
    auto targets = doc.find("targets");
    if (targets == doc.end() || !targets->is_array())
        throw FormatError("project.json has no targets array");

    RawProject proj;
    std::set<std::string> names;
    for (const json &jt : *targets) {
        if (!jt.is_object())
            throw FormatError("target entry is not an object");
        RawTarget t = decode_target(jt, proj.diagnostics);
        if (!names.insert(t.name).second)
            throw FormatError("duplicate target name: " + t.name);
        proj.targets.push_back(std::move(t));
    }
    std::size_t stages = 0;
    for (const auto &t : proj.targets)
        stages += t.is_stage ? 1 : 0;
    if (stages != 1)
        throw FormatError("project must have exactly one stage, found " + std::to_string(stages));

    // Orphaned non-top-level blocks are surfaced, not guessed at.
    for (const auto &t : proj.targets)
        for (const auto &[id, blk] : t.blocks) {
            if (blk.parent && !t.blocks.contains(*blk.parent))
                proj.diagnostics.push_back("orphan block " + id + " in target " + t.name +
                                           " (parent " + *blk.parent + " missing)");
            if (blk.next && !t.blocks.contains(*blk.next))
                proj.diagnostics.push_back("dangling next reference from block " + id + " in target " +
                                           t.name);
        }
    return proj;
}

RawProject load_project(const std::filesystem::path &path) {
    std::error_code ec;
    if (!std::filesystem::exists(path, ec))
        throw IoError("no such file: " + path.string());
    std::string bytes = read_file(path);
    if (bytes.size() >= 2 && bytes[0] == 'P' && bytes[1] == 'K')
        bytes = extract_zip_member(bytes, "project.json");
    return parse_project_json(bytes);
}

} // namespace perfumes::sb3
