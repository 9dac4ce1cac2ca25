#ifndef TYFAM_CHECKPOINT_HPP
#define TYFAM_CHECKPOINT_HPP

#include <tyfam/certificate.hpp>
#include <tyfam/graph6.hpp>

#include <nlohmann/json.hpp>

#include <cstddef>
#include <filesystem>
#include <fstream>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <vector>

namespace tyfam {

enum class EnumMode { full_family, descendants_only };

inline std::string to_string(EnumMode m) {
  return m == EnumMode::full_family ? "full-family" : "descendants-only";
}

inline EnumMode enum_mode_from_string(const std::string& s) {
  if (s == "full-family")
    return EnumMode::full_family;
  if (s == "descendants-only")
    return EnumMode::descendants_only;
  throw std::invalid_argument("unknown enumeration mode '" + s + "'");
}

/**
 * Resumable enumeration state. On disk: one JSON header line, the visited
 * set as graph6 lines, a "#FRONTIER" line, then the unexpanded frontier as
 * graph6 lines in queue order.
 */
struct Checkpoint {
  static constexpr int format_version = 1;

  std::string seed_label;
  std::string seed_graph6;
  EnumMode mode = EnumMode::full_family;
  std::size_t size = 0;
  std::size_t expanded = 0;
  std::optional<std::size_t> max_members;
  std::vector<Certificate> visited;
  std::vector<Certificate> frontier;
};

class CheckpointError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

inline void checkpoint_write(std::ostream& out, const Checkpoint& cp) {
  nlohmann::ordered_json header;
  header["format"] = "tyfam-checkpoint";
  header["version"] = Checkpoint::format_version;
  header["seed"] = cp.seed_label;
  header["seed_graph6"] = cp.seed_graph6;
  header["mode"] = to_string(cp.mode);
  header["size"] = cp.size;
  header["expanded"] = cp.expanded;
  header["max_members"] = cp.max_members ? nlohmann::ordered_json(*cp.max_members)
                                         : nlohmann::ordered_json(nullptr);
  header["visited"] = cp.visited.size();
  header["frontier"] = cp.frontier.size();
  out << header.dump() << '\n';
  for (const auto& c : cp.visited)
    out << graph6_encode(graph_from_certificate(c)) << '\n';
  out << "#FRONTIER\n";
  for (const auto& c : cp.frontier)
    out << graph6_encode(graph_from_certificate(c)) << '\n';
  if (!out)
    throw CheckpointError("checkpoint: write failed");
}

inline Checkpoint checkpoint_read(std::istream& in) {
  std::string line;
  if (!std::getline(in, line))
    throw CheckpointError("checkpoint: missing header");
  nlohmann::json header;
  try {
    header = nlohmann::json::parse(line);
  } catch (const nlohmann::json::exception& e) {
    throw CheckpointError(std::string("checkpoint: bad header: ") + e.what());
  }
  Checkpoint cp;
  try {
    if (header.at("format").get<std::string>() != "tyfam-checkpoint")
      throw CheckpointError("checkpoint: unknown format");
    const int version = header.at("version").get<int>();
    if (version != Checkpoint::format_version)
      throw CheckpointError("checkpoint: unsupported version " + std::to_string(version));
    cp.seed_label = header.at("seed").get<std::string>();
    cp.seed_graph6 = header.at("seed_graph6").get<std::string>();
    cp.mode = enum_mode_from_string(header.at("mode").get<std::string>());
    cp.size = header.at("size").get<std::size_t>();
    cp.expanded = header.at("expanded").get<std::size_t>();
    if (!header.at("max_members").is_null())
      cp.max_members = header.at("max_members").get<std::size_t>();
  } catch (const nlohmann::json::exception& e) {
    throw CheckpointError(std::string("checkpoint: bad header: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw CheckpointError(std::string("checkpoint: ") + e.what());
  }

  bool in_frontier = false;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line == "#FRONTIER") {
      if (in_frontier)
        throw CheckpointError("checkpoint: duplicate #FRONTIER separator");
      in_frontier = true;
      continue;
    }
    Certificate c;
    try {
      c = canonical_certificate(graph6_decode(line));
    } catch (const std::invalid_argument& e) {
      throw CheckpointError("checkpoint: line " + std::to_string(line_no) + ": " + e.what());
    }
    (in_frontier ? cp.frontier : cp.visited).push_back(std::move(c));
  }
  if (!in_frontier)
    throw CheckpointError("checkpoint: missing #FRONTIER separator");
  if (header.contains("visited") && header["visited"].get<std::size_t>() != cp.visited.size())
    throw CheckpointError("checkpoint: visited count does not match header");
  if (header.contains("frontier") && header["frontier"].get<std::size_t>() != cp.frontier.size())
    throw CheckpointError("checkpoint: frontier count does not match header");

  std::unordered_set<Certificate, CertificateHash> seen(cp.visited.begin(), cp.visited.end());
  for (const auto& c : cp.frontier)
    if (!seen.contains(c))
      throw CheckpointError("checkpoint: frontier entry missing from visited set");
  return cp;
}

inline void checkpoint_save(const std::filesystem::path& path, const Checkpoint& cp) {
  // Write-then-rename so an interrupted save never clobbers the last good file.
  auto tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out)
      throw CheckpointError("checkpoint: cannot open " + tmp.string());
    checkpoint_write(out, cp);
  }
  std::filesystem::rename(tmp, path);
}

inline Checkpoint checkpoint_load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in)
    throw CheckpointError("checkpoint: cannot open " + path.string());
  return checkpoint_read(in);
}

} // namespace tyfam

#endif
