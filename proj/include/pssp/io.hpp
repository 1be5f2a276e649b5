#ifndef PSSP_IO_HPP
#define PSSP_IO_HPP

#include <filesystem>
#include <string>
#include <string_view>

#include "pssp/instance.hpp"

namespace pssp {

enum class InstanceFormat { Auto, Jsp, OspTaillard, OspGueretPrins, PsspJson };

InstanceFormat parse_format_name(std::string_view name);
const char* to_string(InstanceFormat format);

/// "n m" then n rows of m (machine, duration) pairs, machines 0-based.
/// Job j's k-th operation gets id j*m + k and partition j; each job is a chain.
Instance parse_jsp_standard(std::string_view text);

/**
 * Open-shop matrices, E empty. Label lines ("processing times :",
 * "machines :") and Taillard's six-number header are accepted; otherwise the
 * first line is "n m". Taillard: n rows of durations then n rows of machine
 * ids (1-based unless a 0 appears). Guéret-Prins: the machine matrix is
 * optional and defaults to column index.
 */
Instance parse_osp(std::string_view text, InstanceFormat flavour = InstanceFormat::OspTaillard);

/// {"machines", "partitions", "operations": [{"machine","partition","duration"}], "edges": [[i,j]]}
Instance parse_pssp_json(std::string_view text);
std::string write_pssp_json(const Instance& inst);

/// Extension first (.json, .jsp), then content sniffing.
InstanceFormat detect_format(const std::filesystem::path& path, std::string_view text);

Instance parse_instance(std::string_view text, InstanceFormat format);
Instance load_instance(const std::filesystem::path& path, InstanceFormat format = InstanceFormat::Auto);

std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::string_view content);

}  // namespace pssp

#endif  // PSSP_IO_HPP
