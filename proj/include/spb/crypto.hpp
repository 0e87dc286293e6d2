#pragma once

#include <array>
#include <compare>
#include <cstdint>

#include "spb/bytes.hpp"
#include "spb/result.hpp"

namespace spb {

// Identity layer shared by every module: seeded Ed25519 key pairs, detached
// signatures, SHA-256 digests and truncated-digest account addresses. Key
// generation is deterministic per seed so whole simulations replay bit-exactly.

inline constexpr std::size_t kSeedLen = 32;
inline constexpr std::size_t kPublicKeyLen = 32;
inline constexpr std::size_t kSecretKeyLen = 64;
inline constexpr std::size_t kSignatureLen = 64;
inline constexpr std::size_t kHashLen = 32;
inline constexpr std::size_t kAddressLen = 20;

using Seed = std::array<std::uint8_t, kSeedLen>;

struct PublicKey {
    std::array<std::uint8_t, kPublicKeyLen> bytes{};
    auto operator<=>(const PublicKey&) const = default;
};

struct SecretKey {
    std::array<std::uint8_t, kSecretKeyLen> bytes{};
    auto operator<=>(const SecretKey&) const = default;
};

struct Signature {
    std::array<std::uint8_t, kSignatureLen> bytes{};
    auto operator<=>(const Signature&) const = default;
};

struct Hash {
    std::array<std::uint8_t, kHashLen> digest{};
    auto operator<=>(const Hash&) const = default;
    std::string hex() const { return to_hex(digest); }
};

struct Address {
    std::array<std::uint8_t, kAddressLen> bytes{};
    auto operator<=>(const Address&) const = default;
    std::string hex() const { return to_hex(bytes); }
};

struct KeyPair {
    PublicKey public_key;
    SecretKey secret_key;
};

KeyPair generate_keypair(const Seed& seed);

// Convenience for tests and genesis wiring: expands a 64-bit label into a
// full seed deterministically.
KeyPair keypair_from_label(std::uint64_t label);

Signature sign(const Bytes& message, const SecretKey& sk);
Signature sign(const std::uint8_t* data, std::size_t len, const SecretKey& sk);

bool verify(const Bytes& message, const Signature& sig, const PublicKey& pk);
bool verify(const std::uint8_t* data, std::size_t len, const Signature& sig, const PublicKey& pk);

Hash digest(const Bytes& data);
Hash digest(const std::uint8_t* data, std::size_t len);
Hash digest(std::string_view s);

Address derive_address(const PublicKey& pk);

std::optional<Address> address_from_hex(std::string_view s);
std::optional<Hash> hash_from_hex(std::string_view s);

}  // namespace spb
