#include "spb/coe.hpp"

namespace spb {

namespace {

Hash hash_pair(const Hash& left, const Hash& right) {
    Bytes buf;
    buf.reserve(2 * kHashLen);
    put_raw(buf, left.digest);
    put_raw(buf, right.digest);
    return digest(buf);
}

Bytes root_signing_preimage(const Hash& root) {
    Bytes buf;
    put_prefixed(buf, std::string_view("spb.coe.root"));
    put_raw(buf, root.digest);
    return buf;
}

Bytes certify_preimage(const PublicKey& meter_pk) {
    Bytes buf;
    put_prefixed(buf, std::string_view("spb.coe.meter"));
    put_raw(buf, meter_pk.bytes);
    return buf;
}

}  // namespace

Result<MerkleTree> build_merkle_tree(const std::vector<PublicKey>& pks) {
    if (pks.empty()) return {Errc::EmptyInput, "merkle tree needs at least one leaf"};

    MerkleTree tree;
    tree.leaves.reserve(pks.size());
    for (const auto& pk : pks) tree.leaves.push_back(digest(pk.bytes.data(), pk.bytes.size()));

    std::vector<Hash> level = tree.leaves;
    tree.levels.push_back(level);
    while (level.size() > 1) {
        if (level.size() % 2 != 0) level.push_back(level.back());
        std::vector<Hash> next;
        next.reserve(level.size() / 2);
        for (std::size_t i = 0; i < level.size(); i += 2) {
            next.push_back(hash_pair(level[i], level[i + 1]));
        }
        level = std::move(next);
        tree.levels.push_back(level);
    }
    tree.root = level.front();
    return tree;
}

Result<MerkleProof> membership_proof(const MerkleTree& tree, std::size_t leaf_index) {
    if (leaf_index >= tree.leaf_count()) {
        return {Errc::OutOfRange, "leaf index past end of tree"};
    }
    MerkleProof proof;
    proof.leaf_index = static_cast<std::uint32_t>(leaf_index);
    std::size_t idx = leaf_index;
    for (std::size_t lvl = 0; lvl + 1 < tree.levels.size(); ++lvl) {
        const auto& nodes = tree.levels[lvl];
        std::size_t sibling = (idx % 2 == 0) ? idx + 1 : idx - 1;
        // Odd level: trailing node pairs with itself.
        if (sibling >= nodes.size()) sibling = idx;
        proof.siblings.push_back({nodes[sibling], idx % 2 == 0});
        idx /= 2;
    }
    return proof;
}

Hash proof_root(const PublicKey& pk, const MerkleProof& proof) {
    Hash acc = digest(pk.bytes.data(), pk.bytes.size());
    for (const auto& step : proof.siblings) {
        acc = step.sibling_on_right ? hash_pair(acc, step.sibling) : hash_pair(step.sibling, acc);
    }
    return acc;
}

bool verify_membership(const Hash& root, const PublicKey& pk, const MerkleProof& proof) {
    return proof_root(pk, proof) == root;
}

MeterIdentity::MeterIdentity(Seed meter_seed, std::size_t leaf_count) : meter_seed_(meter_seed) {
    derive_leaves(leaf_count);
}

void MeterIdentity::install_factory_credentials(const KeyPair& factory,
                                                const Signature& manufacturer_cert) {
    factory_ = factory;
    manufacturer_cert_ = manufacturer_cert;
}

void MeterIdentity::derive_leaves(std::size_t leaf_count) {
    leaf_keys_.clear();
    leaf_keys_.reserve(leaf_count);
    std::vector<PublicKey> pks;
    pks.reserve(leaf_count);
    for (std::size_t i = 0; i < leaf_count; ++i) {
        Bytes material;
        put_prefixed(material, std::string_view("spb.meter.leaf"));
        put_raw(material, meter_seed_);
        put_u64(material, generation_);
        put_u64(material, i);
        Seed leaf_seed = digest(material).digest;
        leaf_keys_.push_back(generate_keypair(leaf_seed));
        pks.push_back(leaf_keys_.back().public_key);
    }
    tree_ = build_merkle_tree(pks).take();
    next_leaf_ = 0;
    has_certificate_ = false;
}

Result<CoECertificate> MeterIdentity::sign_root_for_peer(const Hash& root) const {
    if (!manufacturer_cert_) {
        return {Errc::UncertifiedSigner, "signer lacks manufacturer certification"};
    }
    CoECertificate cert;
    cert.root = root;
    cert.signer_pk = factory_.public_key;
    cert.signer_sig = sign(root_signing_preimage(root), factory_.secret_key);
    cert.manufacturer_cert = *manufacturer_cert_;
    return cert;
}

void MeterIdentity::adopt_certificate(const CoECertificate& cert) {
    certificate_ = cert;
    has_certificate_ = true;
}

Result<std::pair<KeyPair, MerkleProof>> MeterIdentity::next_signing_key() {
    if (next_leaf_ >= leaf_keys_.size()) {
        return {Errc::ExhaustedKeys, "all leaf keys consumed; rebuild the tree"};
    }
    auto proof = membership_proof(tree_, next_leaf_);
    auto out = std::make_pair(leaf_keys_[next_leaf_], proof.take());
    ++next_leaf_;
    return out;
}

void MeterIdentity::rebuild_tree(std::size_t leaf_count) {
    ++generation_;
    derive_leaves(leaf_count);
}

bool verify_coe(const CoECertificate& cert, const PublicKey& pk, const MerkleProof& proof,
                const PublicKey& manufacturer_pk) {
    if (!verify(certify_preimage(cert.signer_pk), cert.manufacturer_cert, manufacturer_pk)) {
        return false;
    }
    if (!verify(root_signing_preimage(cert.root), cert.signer_sig, cert.signer_pk)) {
        return false;
    }
    return verify_membership(cert.root, pk, proof);
}

Bytes serialize_coe_bundle(const CoECertificate& cert, const PublicKey& pk,
                           const MerkleProof& proof) {
    Bytes out;
    put_raw(out, cert.root.digest);
    put_raw(out, cert.signer_pk.bytes);
    put_raw(out, cert.signer_sig.bytes);
    put_raw(out, cert.manufacturer_cert.bytes);
    put_raw(out, pk.bytes);
    put_u32(out, proof.leaf_index);
    put_u32(out, static_cast<std::uint32_t>(proof.siblings.size()));
    for (const auto& step : proof.siblings) {
        put_raw(out, step.sibling.digest);
        put_u8(out, step.sibling_on_right ? 1 : 0);
    }
    return out;
}

std::optional<CoEBundle> parse_coe_bundle(const Bytes& buf) {
    ByteReader r(buf);
    CoEBundle b;
    if (!r.fixed(b.cert.root.digest)) return std::nullopt;
    if (!r.fixed(b.cert.signer_pk.bytes)) return std::nullopt;
    if (!r.fixed(b.cert.signer_sig.bytes)) return std::nullopt;
    if (!r.fixed(b.cert.manufacturer_cert.bytes)) return std::nullopt;
    if (!r.fixed(b.pk.bytes)) return std::nullopt;
    auto idx = r.u32();
    auto count = r.u32();
    if (!idx || !count) return std::nullopt;
    b.proof.leaf_index = *idx;
    for (std::uint32_t i = 0; i < *count; ++i) {
        ProofStep step;
        if (!r.fixed(step.sibling.digest)) return std::nullopt;
        auto side = r.u8();
        if (!side || *side > 1) return std::nullopt;
        step.sibling_on_right = (*side == 1);
        b.proof.siblings.push_back(step);
    }
    if (!r.exhausted()) return std::nullopt;
    return b;
}

Signature manufacturer_certify(const SecretKey& manufacturer_sk, const PublicKey& meter_pk) {
    return sign(certify_preimage(meter_pk), manufacturer_sk);
}

}  // namespace spb
