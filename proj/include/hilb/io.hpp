#ifndef HILB_IO_HPP
#define HILB_IO_HPP

#include <cstdint>
#include <map>
#include <string>
#include <string_view>

namespace hilb {

inline constexpr const char* kToolName = "hpoints";
inline constexpr const char* kToolVersion = "0.1.0";

// shortest round-trip decimal representation
std::string format_double(double v);
std::string format_fixed(double v, int decimals);

std::uint64_t fnv1a64(std::string_view data);
std::string hex64(std::uint64_t v);

// plain-text key=value configuration ('#' starts a comment)
std::map<std::string, std::string> parse_config_file(const std::string& path);

// canonical "k=v\n" serialization used for the embedded config hash
std::string canonical_config(const std::map<std::string, std::string>& kv);

// write via a temporary file and rename, so readers never see partial output
void write_file_atomic(const std::string& path, const std::string& content);

} // namespace hilb

#endif
