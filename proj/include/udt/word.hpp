#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace udt {

// A word over {0,1}, stored as ASCII '0'/'1'.
using Word = std::string;

bool is_bits(std::string_view s) noexcept;

// Throws InvalidArgument unless s is a bitstring.
void require_bits(std::string_view s, std::string_view what);

// Shortlex successor: "" -> "0" -> "1" -> "00" -> ... Returns false on overflow
// past `max_len`.
bool next_shortlex(Word& w, std::size_t max_len);

// All words of length <= max_len in shortlex order.
std::vector<Word> words_up_to(std::size_t max_len);

// Bijection N0 <-> {0,1}*: i maps to bin(i + 1) without its leading 1.
Word index_to_word(std::uint64_t i);
std::uint64_t word_to_index(std::string_view w);

}  // namespace udt
