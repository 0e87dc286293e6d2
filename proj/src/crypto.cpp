#include "spb/crypto.hpp"

#include <sodium.h>

#include <mutex>
#include <stdexcept>

namespace spb {

namespace {

void ensure_sodium() {
    static std::once_flag flag;
    std::call_once(flag, [] {
        if (sodium_init() < 0) throw std::runtime_error("libsodium initialization failed");
    });
}

}  // namespace

const char* errc_name(Errc e) {
    switch (e) {
        case Errc::Ok: return "Ok";
        case Errc::BadSignature: return "BadSignature";
        case Errc::BadKey: return "BadKey";
        case Errc::InsufficientFunds: return "InsufficientFunds";
        case Errc::InsufficientHold: return "InsufficientHold";
        case Errc::InsufficientEnergy: return "InsufficientEnergy";
        case Errc::DuplicateTx: return "DuplicateTx";
        case Errc::DuplicateCtp: return "DuplicateCtp";
        case Errc::UnknownAccount: return "UnknownAccount";
        case Errc::NoAccount: return "NoAccount";
        case Errc::AccountExists: return "AccountExists";
        case Errc::BadAuthoritySignature: return "BadAuthoritySignature";
        case Errc::NonPositiveAmount: return "NonPositiveAmount";
        case Errc::CtpNotFound: return "CtpNotFound";
        case Errc::AlreadySettled: return "AlreadySettled";
        case Errc::CtpExpired: return "CtpExpired";
        case Errc::BadCoE: return "BadCoE";
        case Errc::BadMeterSignature: return "BadMeterSignature";
        case Errc::EnergyMismatch: return "EnergyMismatch";
        case Errc::ExhaustedKeys: return "ExhaustedKeys";
        case Errc::UncertifiedSigner: return "UncertifiedSigner";
        case Errc::ConflictingRegistration: return "ConflictingRegistration";
        case Errc::NoRoute: return "NoRoute";
        case Errc::NoDeal: return "NoDeal";
        case Errc::EventInPast: return "EventInPast";
        case Errc::UnknownNode: return "UnknownNode";
        case Errc::OutOfRange: return "OutOfRange";
        case Errc::EmptyInput: return "EmptyInput";
        case Errc::InvalidArgument: return "InvalidArgument";
        case Errc::ConfigError: return "ConfigError";
    }
    return "Unknown";
}

KeyPair generate_keypair(const Seed& seed) {
    ensure_sodium();
    KeyPair kp;
    crypto_sign_seed_keypair(kp.public_key.bytes.data(), kp.secret_key.bytes.data(), seed.data());
    return kp;
}

KeyPair keypair_from_label(std::uint64_t label) {
    Bytes material;
    put_prefixed(material, std::string_view("spb.keypair.label"));
    put_u64(material, label);
    Seed seed{};
    seed = digest(material).digest;
    return generate_keypair(seed);
}

Signature sign(const std::uint8_t* data, std::size_t len, const SecretKey& sk) {
    ensure_sodium();
    Signature sig;
    crypto_sign_detached(sig.bytes.data(), nullptr, data, len, sk.bytes.data());
    return sig;
}

Signature sign(const Bytes& message, const SecretKey& sk) {
    return sign(message.data(), message.size(), sk);
}

bool verify(const std::uint8_t* data, std::size_t len, const Signature& sig, const PublicKey& pk) {
    ensure_sodium();
    return crypto_sign_verify_detached(sig.bytes.data(), data, len, pk.bytes.data()) == 0;
}

bool verify(const Bytes& message, const Signature& sig, const PublicKey& pk) {
    return verify(message.data(), message.size(), sig, pk);
}

Hash digest(const std::uint8_t* data, std::size_t len) {
    ensure_sodium();
    Hash h;
    crypto_hash_sha256(h.digest.data(), data, len);
    return h;
}

Hash digest(const Bytes& data) { return digest(data.data(), data.size()); }

Hash digest(std::string_view s) {
    return digest(reinterpret_cast<const std::uint8_t*>(s.data()), s.size());
}

Address derive_address(const PublicKey& pk) {
    Hash h = digest(pk.bytes.data(), pk.bytes.size());
    Address a;
    std::copy(h.digest.begin(), h.digest.begin() + kAddressLen, a.bytes.begin());
    return a;
}

std::optional<Address> address_from_hex(std::string_view s) {
    if (s.rfind("0x", 0) == 0 || s.rfind("0X", 0) == 0) s.remove_prefix(2);
    auto raw = from_hex(s);
    if (!raw || raw->size() != kAddressLen) return std::nullopt;
    Address a;
    std::copy(raw->begin(), raw->end(), a.bytes.begin());
    return a;
}

std::optional<Hash> hash_from_hex(std::string_view s) {
    if (s.rfind("0x", 0) == 0 || s.rfind("0X", 0) == 0) s.remove_prefix(2);
    auto raw = from_hex(s);
    if (!raw || raw->size() != kHashLen) return std::nullopt;
    Hash h;
    std::copy(raw->begin(), raw->end(), h.digest.begin());
    return h;
}

}  // namespace spb
