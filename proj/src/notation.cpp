// Copyright 2026 The dits Authors
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

#include "dits/notation.hpp"

#include <cctype>

#include "dits/error.hpp"

namespace dits {
namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
    std::vector<std::string_view> parts;
    std::size_t start = 0;
    while (true) {
        std::size_t pos = s.find(sep, start);
        if (pos == std::string_view::npos) {
            parts.push_back(s.substr(start));
            return parts;
        }
        parts.push_back(s.substr(start, pos - start));
        start = pos + 1;
    }
}

std::vector<std::vector<std::string>> split_blocks(std::string_view text, const GroundSet* ground) {
    std::vector<std::vector<std::string>> blocks;
    std::size_t offset = 0;
    for (std::string_view raw : split(text, '|')) {
        std::string_view block = trim(raw);
        std::vector<std::string> labels;
        if (block.find(',') != std::string_view::npos) {
            for (std::string_view label : split(block, ',')) {
                label = trim(label);
                if (label.empty()) throw ParseError("empty label in partition text", blocks.size(), offset);
                labels.emplace_back(label);
            }
        } else if (ground && ground->index_of(std::string(block))) {
            labels.emplace_back(block);
        } else {
            for (char c : block) {
                if (!std::isspace(static_cast<unsigned char>(c))) labels.emplace_back(1, c);
            }
        }
        blocks.push_back(std::move(labels));
        offset += raw.size() + 1;
    }
    return blocks;
}

}  // namespace

Partition parse_partition(std::string_view text, const GroundPtr& ground) {
    return make_partition(ground, split_blocks(text, ground.get()));
}

Partition parse_partition(std::string_view text) {
    auto blocks = split_blocks(text, nullptr);
    std::vector<std::string> labels;
    for (const auto& block : blocks) {
        if (block.empty()) throw Error(ErrorKind::EmptyBlock, "empty block in '" + std::string(text) + "'");
        for (const auto& label : block) {
            for (const auto& seen : labels) {
                if (seen == label) {
                    throw Error(ErrorKind::OverlappingBlocks, "'" + label + "' appears in more than one block");
                }
            }
            labels.push_back(label);
        }
    }
    return make_partition(make_ground(std::move(labels)), blocks);
}

std::string format_partition(const Partition& pi) {
    const GroundSet& ground = pi.ground();
    const bool compact = ground.single_char_labels();
    std::string out;
    for (std::size_t b = 0; b < pi.block_count(); ++b) {
        if (b > 0) out += '|';
        const auto& block = pi.blocks()[b];
        for (std::size_t j = 0; j < block.size(); ++j) {
            if (j > 0 && !compact) out += ',';
            out += ground.label(block[j]);
        }
    }
    return out;
}

std::string format_subset(const GroundSet& ground, const std::vector<std::size_t>& indices) {
    std::string out = "{";
    for (std::size_t j = 0; j < indices.size(); ++j) {
        if (j > 0) out += ',';
        out += ground.label(indices[j]);
    }
    return out + "}";
}

}  // namespace dits
