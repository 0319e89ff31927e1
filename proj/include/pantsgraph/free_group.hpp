#pragma once

// Words in a free group; letter +k / -k stands for generator k and its inverse.

#include <span>
#include <vector>

namespace pantsgraph::free_group {

using Word = std::vector<int>;

Word inverse(std::span<const int> w);

/// Append `tail` to `head`, cancelling as it goes.
void append_reduced(Word& head, std::span<const int> tail);

Word reduce(std::span<const int> w);

/// Freely and cyclically reduced representative of the conjugacy class.
Word cyclic_reduce(std::span<const int> w);

/// Substitute images[|letter|] (or its inverse) for every letter and reduce.
Word substitute(std::span<const int> w, const std::vector<Word>& images);

}  // namespace pantsgraph::free_group
