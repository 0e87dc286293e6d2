#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "spb/crypto.hpp"
#include "spb/result.hpp"

namespace spb {

// Certificate-of-Existence machinery. A meter commits to a batch of one-time
// public keys through a Merkle tree; a peer meter signs the root; receipts
// are then signed with fresh leaf keys that can be proven to belong to a
// certified tree without linking back to the meter.

struct MerkleTree {
    std::vector<Hash> leaves;              // digest(pk) per leaf, in order
    std::vector<std::vector<Hash>> levels; // levels[0] == leaves, top level holds the root
    Hash root;

    std::size_t leaf_count() const { return leaves.size(); }
    std::size_t depth() const { return levels.empty() ? 0 : levels.size() - 1; }
};

struct ProofStep {
    Hash sibling;
    bool sibling_on_right = false;
};

struct MerkleProof {
    std::uint32_t leaf_index = 0;
    std::vector<ProofStep> siblings;
};

struct CoECertificate {
    Hash root;
    PublicKey signer_pk;           // factory key of the peer meter that signed the root
    Signature signer_sig;          // over root
    Signature manufacturer_cert;   // manufacturer CA over signer_pk
};

// Trees are padded to a power of two by duplicating the trailing leaf so all
// proofs have uniform length.
Result<MerkleTree> build_merkle_tree(const std::vector<PublicKey>& pks);

Result<MerkleProof> membership_proof(const MerkleTree& tree, std::size_t leaf_index);

// Recompute the root implied by (pk, proof). Pure; never fails on malformed
// input, the caller compares against a trusted root.
Hash proof_root(const PublicKey& pk, const MerkleProof& proof);

bool verify_membership(const Hash& root, const PublicKey& pk, const MerkleProof& proof);

class MeterIdentity {
public:
    // A factory keypair is certified by the manufacturer CA at build time;
    // leaf keys are derived from the meter seed and rotated one per receipt.
    MeterIdentity(Seed meter_seed, std::size_t leaf_count);

    void install_factory_credentials(const KeyPair& factory, const Signature& manufacturer_cert);

    const KeyPair& factory_keypair() const { return factory_; }
    const std::optional<Signature>& manufacturer_cert() const { return manufacturer_cert_; }
    const MerkleTree& tree() const { return tree_; }
    const CoECertificate& certificate() const { return certificate_; }
    bool certified() const { return has_certificate_; }
    std::size_t next_leaf() const { return next_leaf_; }
    std::size_t leaf_count() const { return leaf_keys_.size(); }
    const KeyPair& leaf_keypair(std::size_t i) const { return leaf_keys_.at(i); }

    // Signs `root` with the factory key. Fails when this meter lacks
    // manufacturer certification.
    Result<CoECertificate> sign_root_for_peer(const Hash& root) const;

    void adopt_certificate(const CoECertificate& cert);

    // Next unused leaf key plus its membership proof; the index advances so
    // consecutive receipts never share a key.
    Result<std::pair<KeyPair, MerkleProof>> next_signing_key();

    // Discards the exhausted tree and derives a fresh batch of leaf keys.
    // The caller must obtain a new certificate before signing again.
    void rebuild_tree(std::size_t leaf_count);

private:
    void derive_leaves(std::size_t leaf_count);

    Seed meter_seed_{};
    std::uint64_t generation_ = 0;
    KeyPair factory_;
    std::optional<Signature> manufacturer_cert_;
    std::vector<KeyPair> leaf_keys_;
    MerkleTree tree_;
    CoECertificate certificate_;
    bool has_certificate_ = false;
    std::size_t next_leaf_ = 0;
};

// Full CoE check: manufacturer chain, root signature, and membership.
// Returns false on any malformed input instead of aborting.
bool verify_coe(const CoECertificate& cert, const PublicKey& pk, const MerkleProof& proof,
                const PublicKey& manufacturer_pk);

// Canonical length-prefixed layout: root(32) || signer_pk || signer_sig ||
// manufacturer_cert || leaf_index || proof entries. See docs/FORMATS.md.
Bytes serialize_coe_bundle(const CoECertificate& cert, const PublicKey& pk,
                           const MerkleProof& proof);
struct CoEBundle {
    CoECertificate cert;
    PublicKey pk;
    MerkleProof proof;
};
std::optional<CoEBundle> parse_coe_bundle(const Bytes& buf);

Signature manufacturer_certify(const SecretKey& manufacturer_sk, const PublicKey& meter_pk);

}  // namespace spb
