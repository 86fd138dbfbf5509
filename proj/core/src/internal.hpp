#pragma once

#include <cstdint>
#include <vector>

#include "sponge/model.hpp"
#include "sponge/parallel.hpp"

namespace sponge::detail {

/// Appends `steps` letters to every word whose level-|w| pillar corner is in
/// `corners` (flat, dim d). Output is in word order: the last letter varies fastest.
std::vector<std::int64_t> expand_words(const SpongeSpec& spec, std::vector<std::int64_t> corners, int steps,
                                       const Limits& limits);

/// Relabels `labels` so component ids follow first occurrence; returns the count.
std::size_t canonicalize_labels(std::vector<std::uint32_t>& labels);

}  // namespace sponge::detail
