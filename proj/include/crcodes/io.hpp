#pragma once

#include <string>

#include "crcodes/code.hpp"

namespace crc {

// Code file: {"q","p","r","modulus","n","kind":"linear"|"explicit",
// "generator","parity","codewords"}; elements are indices 0..q-1.
std::string code_to_json(const Code& c);
Code code_from_json(const std::string& text);

Code read_code_file(const std::string& path);
void write_code_file(const std::string& path, const Code& c);

}  // namespace crc
