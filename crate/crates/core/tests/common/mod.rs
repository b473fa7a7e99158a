//! Random evidence generators and brute-force oracles shared by the
//! integration tests. The oracles work on dense power-set vectors and never
//! call into the library's combination or distance code.

#![allow(dead_code)]

use gevidence::{Frame, Gbpa, Subset};
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub const SEED: u64 = 0x5eed_0fe7_1d00;

pub fn rng() -> ChaCha8Rng {
    use rand::SeedableRng;
    ChaCha8Rng::seed_from_u64(SEED)
}

pub fn frame(n: usize) -> Frame {
    Frame::new((0..n).map(|i| format!("h{i}"))).unwrap()
}

/// Random assignment with up to `max_focal` focal sets. With
/// `open_world`, ∅ may receive mass.
pub fn random_gbpa(rng: &mut impl Rng, frame: &Frame, max_focal: usize, open_world: bool) -> Gbpa {
    let n = frame.len();
    let count = rng.gen_range(1..=max_focal);
    let mut sets: Vec<u64> = Vec::new();
    while sets.len() < count {
        let bits = if open_world && rng.gen_bool(0.2) {
            0
        } else {
            rng.gen_range(1..(1u64 << n))
        };
        if !sets.contains(&bits) {
            sets.push(bits);
        }
        if sets.len() == (1usize << n) - usize::from(!open_world) {
            break;
        }
    }
    let weights: Vec<f64> = sets.iter().map(|_| rng.gen_range(0.05..1.0)).collect();
    let total: f64 = weights.iter().sum();
    let pairs = sets
        .iter()
        .zip(&weights)
        .map(|(&b, &w)| (frame.subset_from_bits(b).unwrap(), w / total));
    Gbpa::new(frame.clone(), pairs).unwrap()
}

/// Masses on singletons only.
pub fn random_bayesian(rng: &mut impl Rng, frame: &Frame) -> Gbpa {
    let weights: Vec<f64> = (0..frame.len()).map(|_| rng.gen_range(0.05..1.0)).collect();
    let total: f64 = weights.iter().sum();
    Gbpa::new(
        frame.clone(),
        weights
            .iter()
            .enumerate()
            .map(|(i, w)| (frame.singleton(i).unwrap(), w / total)),
    )
    .unwrap()
}

pub fn dense(m: &Gbpa) -> Vec<f64> {
    let mut v = vec![0.0; 1 << m.frame().len()];
    for (s, x) in m.focal_elements() {
        v[s.bits() as usize] = x;
    }
    v
}

pub fn mass_of(v: &[f64], bits: u64) -> f64 {
    v[bits as usize]
}

/// Conjunctive combination on dense vectors: returns the unnormalized
/// products per intersection (index 0 collects the conflict).
pub fn dense_conjunctive(m1: &Gbpa, m2: &Gbpa) -> Vec<f64> {
    let a = dense(m1);
    let b = dense(m2);
    let mut out = vec![0.0; a.len()];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i & j] += x * y;
        }
    }
    out
}

/// Product-and-normalize, dense.
pub fn oracle_dempster(m1: &Gbpa, m2: &Gbpa) -> Vec<f64> {
    let conj = dense_conjunctive(m1, m2);
    let k = conj[0];
    let mut out: Vec<f64> = conj.iter().map(|x| x / (1.0 - k)).collect();
    out[0] = 0.0;
    out
}

pub fn oracle_gcr(m1: &Gbpa, m2: &Gbpa) -> Vec<f64> {
    let conj = dense_conjunctive(m1, m2);
    let k = conj[0];
    let mut out = vec![0.0; conj.len()];
    if (1.0 - k).abs() <= 1e-12 {
        out[0] = 1.0;
        return out;
    }
    let empty = dense(m1)[0] * dense(m2)[0];
    for i in 1..conj.len() {
        out[i] = (1.0 - empty) * conj[i] / (1.0 - k);
    }
    out[0] = empty;
    out
}

/// Full `2^N × 2^N` Jaccard matrix with `D(∅,∅) = 1`.
pub fn jaccard_matrix(n: usize) -> Vec<Vec<f64>> {
    let size = 1usize << n;
    (0..size)
        .map(|i| {
            (0..size)
                .map(|j| {
                    let u = (i | j).count_ones();
                    if u == 0 {
                        1.0
                    } else {
                        f64::from((i & j).count_ones()) / f64::from(u)
                    }
                })
                .collect()
        })
        .collect()
}

pub fn oracle_distance(m1: &Gbpa, m2: &Gbpa) -> f64 {
    let n = m1.frame().len();
    let d = jaccard_matrix(n);
    let a = dense(m1);
    let b = dense(m2);
    let diff: Vec<f64> = a.iter().zip(&b).map(|(x, y)| x - y).collect();
    let mut q = 0.0;
    for i in 0..diff.len() {
        for j in 0..diff.len() {
            q += diff[i] * d[i][j] * diff[j];
        }
    }
    (0.5 * q).max(0.0).sqrt()
}

/// Pignistic probabilities straight from the definition.
pub fn oracle_betp(m: &Gbpa) -> Vec<f64> {
    let n = m.frame().len();
    let v = dense(m);
    let empty = v[0];
    (0..n)
        .map(|w| {
            (1..v.len())
                .filter(|&s| s & (1 << w) != 0)
                .map(|s| v[s] / ((s.count_ones() as f64) * (1.0 - empty)))
                .sum()
        })
        .collect()
}

/// Maximum over all 2^N subsets of |BetP1(A) − BetP2(A)|.
pub fn oracle_dif_betp(m1: &Gbpa, m2: &Gbpa) -> f64 {
    let p1 = oracle_betp(m1);
    let p2 = oracle_betp(m2);
    let n = p1.len();
    (0u64..(1 << n))
        .map(|s| {
            let (mut x, mut y) = (0.0, 0.0);
            for w in 0..n {
                if s & (1 << w) != 0 {
                    x += p1[w];
                    y += p2[w];
                }
            }
            (x - y).abs()
        })
        .fold(0.0, f64::max)
}

pub fn max_abs_diff(m: &Gbpa, dense_expected: &[f64]) -> f64 {
    let got = dense(m);
    got.iter()
        .zip(dense_expected)
        .map(|(x, y)| (x - y).abs())
        .fold(0.0, f64::max)
}

pub fn gbpa_max_diff(a: &Gbpa, b: &Gbpa) -> f64 {
    max_abs_diff(a, &dense(b))
}

pub fn all_nonempty(frame: &Frame) -> Vec<Subset> {
    frame.power_set().filter(|s| !s.is_empty()).collect()
}
