use super::{ElementId, Matroid};
use crate::error::{Error, Result};

/// Vectors over the prime field GF(p); a set is independent when its
/// vectors are linearly independent.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearMatroid {
    prime: u64,
    dim: usize,
    vectors: Vec<Vec<u64>>,
}

impl LinearMatroid {
    /// Entries are reduced mod `prime`.
    pub fn new(prime: u64, dim: usize, vectors: Vec<Vec<u64>>) -> Result<Self> {
        if !is_prime(prime) || prime >= 1 << 31 {
            return Err(Error::Parameters(format!(
                "field size {prime} is not a prime below 2^31"
            )));
        }
        let mut reduced = Vec::with_capacity(vectors.len());
        for (i, v) in vectors.into_iter().enumerate() {
            if v.len() != dim {
                return Err(Error::Parameters(format!(
                    "vector {} has {} coordinates, expected {dim}",
                    i + 1,
                    v.len()
                )));
            }
            reduced.push(v.into_iter().map(|x| x % prime).collect());
        }
        Ok(Self {
            prime,
            dim,
            vectors: reduced,
        })
    }

    pub fn prime(&self) -> u64 {
        self.prime
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn vectors(&self) -> &[Vec<u64>] {
        &self.vectors
    }

    /// Rank of the given vectors by Gaussian elimination mod p.
    pub fn rank_of(&self, set: &[ElementId]) -> usize {
        let p = self.prime;
        let mut rows: Vec<Vec<u64>> = set.iter().map(|e| self.vectors[e.0].clone()).collect();
        let mut rank = 0;
        for col in 0..self.dim {
            let Some(pivot) = (rank..rows.len()).find(|&r| rows[r][col] != 0) else {
                continue;
            };
            rows.swap(rank, pivot);
            let inv = mod_pow(rows[rank][col], p - 2, p);
            for x in rows[rank].iter_mut().skip(col) {
                *x = *x * inv % p;
            }
            let (head, tail) = rows.split_at_mut(rank + 1);
            let pivot_row = &head[rank];
            for row in tail.iter_mut() {
                let factor = row[col];
                if factor == 0 {
                    continue;
                }
                for c in col..self.dim {
                    row[c] = (row[c] + p - factor * pivot_row[c] % p) % p;
                }
            }
            rank += 1;
            if rank == rows.len() {
                break;
            }
        }
        rank
    }
}

impl Matroid for LinearMatroid {
    fn ground_size(&self) -> usize {
        self.vectors.len()
    }

    fn independent(&self, set: &[ElementId]) -> bool {
        set.len() <= self.dim && self.rank_of(set) == set.len()
    }
}

pub(crate) fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

fn mod_pow(mut base: u64, mut exp: u64, modulus: u64) -> u64 {
    let mut acc = 1 % modulus;
    base %= modulus;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % modulus;
        }
        base = base * base % modulus;
        exp >>= 1;
    }
    acc
}
