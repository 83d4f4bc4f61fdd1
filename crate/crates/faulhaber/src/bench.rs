//! Cost measurement for the coefficient methods: wall time plus exact
//! rational-operation counts, which are machine-independent.
//!
//! Every row also carries a checksum of the computed vector so a
//! benchmark run doubles as a correctness check: for a given k, all
//! methods must produce the same checksum.

use std::time::{Duration, Instant};

use crate::bernoulli::BernoulliCache;
use crate::coeffs::{coeffs_by_explicit_with, coeffs_by_method, FaulhaberCoeffs, Method};
use crate::ratnum::{op_counts, reset_op_counts, OpCounts};

/// One (k, method) measurement at even degree p = 2k.
#[derive(Debug, Clone)]
pub struct BenchRow {
    pub k: u32,
    pub p: u32,
    pub method: Method,
    pub wall: Duration,
    pub ops: OpCounts,
    /// FNV-1a over the canonical coefficient strings.
    pub checksum: u64,
}

/// FNV-1a, enough to compare coefficient vectors across methods.
fn fnv1a(bytes: &[u8], mut hash: u64) -> u64 {
    for &b in bytes {
        hash ^= b as u64;
        hash = hash.wrapping_mul(0x100_0000_01b3);
    }
    hash
}

pub fn coeffs_checksum(c: &FaulhaberCoeffs) -> u64 {
    let mut hash = 0xcbf2_9ce4_8422_2325;
    for fm in &c.f {
        hash = fnv1a(fm.to_string().as_bytes(), hash);
        hash = fnv1a(b";", hash);
    }
    if let Some(constant) = &c.constant {
        hash = fnv1a(constant.to_string().as_bytes(), hash);
    }
    hash
}

/// Geometric k sampling: powers of two up to k_max, plus k_max itself.
pub fn sample_k_values(k_max: u32) -> Vec<u32> {
    let mut ks = Vec::new();
    let mut k = 1;
    while k < k_max {
        ks.push(k);
        k *= 2;
    }
    ks.push(k_max);
    ks
}

/// Measure every requested method at p = 2k for each sampled k. Rows
/// come back sorted by k, then by method name. Each measurement starts
/// from cold state: the explicit method gets a fresh Bernoulli cache so
/// its operation count reflects the full cost of the path.
pub fn run_bench(k_values: &[u32], methods: &[Method]) -> Vec<BenchRow> {
    let mut rows = Vec::new();
    let mut methods = methods.to_vec();
    methods.sort_by_key(|m| m.name());
    methods.dedup();
    for &k in k_values {
        let p = 2 * k;
        for &method in &methods {
            reset_op_counts();
            let start = Instant::now();
            let coeffs = match method {
                Method::Explicit => {
                    let cache = BernoulliCache::new();
                    coeffs_by_explicit_with(&cache, p)
                }
                other => coeffs_by_method(p, other),
            }
            .expect("benchmark degrees are >= 2");
            let wall = start.elapsed();
            let ops = op_counts();
            rows.push(BenchRow { k, p, method, wall, ops, checksum: coeffs_checksum(&coeffs) });
        }
    }
    rows
}
