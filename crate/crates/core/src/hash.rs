//! Stable, dependency-free hashing used for fingerprints and feature
//! buckets. `std::hash` is not guaranteed stable across releases, so
//! everything that persists or reproduces across runs goes through
//! these.

/// 64-bit FNV-1a.
pub fn fnv1a64(bytes: &[u8]) -> u64 {
    let mut h: u64 = 0xcbf2_9ce4_8422_2325;
    for &b in bytes {
        h ^= b as u64;
        h = h.wrapping_mul(0x0000_0100_0000_01b3);
    }
    h
}

/// 32-bit FNV-1a, the classic text-classifier bucket hash.
pub fn fnv1a32(bytes: &[u8]) -> u32 {
    let mut h: u32 = 2_166_136_261;
    for &b in bytes {
        h ^= b as u32;
        h = h.wrapping_mul(16_777_619);
    }
    h
}

/// splitmix64 finalizer; gives FNV output full-width bit diffusion,
/// which SimHash needs for its per-bit votes.
pub fn mix64(mut x: u64) -> u64 {
    x = x.wrapping_add(0x9e37_79b9_7f4a_7c15);
    x = (x ^ (x >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    x = (x ^ (x >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    x ^ (x >> 31)
}

/// Combine a seed with stream labels into a fresh 64-bit seed.
pub fn derive_seed(seed: u64, parts: &[u64]) -> u64 {
    let mut h = mix64(seed ^ 0x51ed_270b_8d5c_93bb);
    for &p in parts {
        h = mix64(h ^ p);
    }
    h
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fnv_known_values() {
        // reference vectors for the FNV-1a parameters
        assert_eq!(fnv1a32(b""), 0x811c9dc5);
        assert_eq!(fnv1a32(b"a"), 0xe40c292c);
        assert_eq!(fnv1a64(b""), 0xcbf29ce484222325);
    }

    #[test]
    fn mix_changes_low_bits() {
        // FNV of short strings differs mostly in low bits; the mix must
        // spread a single-bit input difference across the word.
        let a = mix64(fnv1a64(b"token1"));
        let b = mix64(fnv1a64(b"token2"));
        let flipped = (a ^ b).count_ones();
        assert!(flipped > 16, "poor diffusion: {flipped} bits");
    }

    #[test]
    fn derive_seed_separates_streams() {
        let s1 = derive_seed(7, &[1, 2]);
        let s2 = derive_seed(7, &[2, 1]);
        assert_ne!(s1, s2);
    }
}
