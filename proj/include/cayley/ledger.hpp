#pragma once

#include <string>

namespace cayley {

// The frozen sign and basis conventions the whole library is built on, as a
// single human-readable text.  Every verification report embeds a hash of
// this text, so reports produced under different conventions can never be
// compared silently.
const std::string& convention_ledger();

// FNV-1a (64-bit) fingerprint of the ledger text, as 16 hex digits.
std::string convention_ledger_hash();

} // namespace cayley
