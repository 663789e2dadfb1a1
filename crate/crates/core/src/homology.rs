//! Exact matrix ranks and reduced simplicial homology.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::vertex_set::VertexSet;

/// Coefficient field for homology.
#[derive(
    Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize,
)]
pub enum FieldChoice {
    #[default]
    Rationals,
    PrimeField(u32),
}

impl FieldChoice {
    pub fn prime(p: u32) -> Result<Self> {
        let is_prime = p >= 2 && (2..p).take_while(|d| d * d <= p).all(|d| p % d != 0);
        if !is_prime {
            return Err(Error::InvalidParameter(format!("{p} is not a prime")));
        }
        Ok(FieldChoice::PrimeField(p))
    }
}

impl fmt::Display for FieldChoice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldChoice::Rationals => write!(f, "q"),
            FieldChoice::PrimeField(p) => write!(f, "gf{p}"),
        }
    }
}

impl FromStr for FieldChoice {
    type Err = Error;

    /// Accepts `q`, `qq`, `rationals`, or `gfP` for a prime `P`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim().to_ascii_lowercase();
        match s.as_str() {
            "q" | "qq" | "rationals" => Ok(FieldChoice::Rationals),
            _ => match s.strip_prefix("gf").and_then(|p| p.parse::<u32>().ok()) {
                Some(p) => FieldChoice::prime(p),
                None => Err(Error::InvalidParameter(format!("unknown field {s:?}"))),
            },
        }
    }
}

/// Rank of an integer matrix over the given field.
pub fn rank(rows: &[Vec<i64>], field: FieldChoice) -> usize {
    match field {
        FieldChoice::Rationals => rank_rational(rows),
        FieldChoice::PrimeField(p) => rank_mod_p(rows, p as u64),
    }
}

/// Rank over `Q` by fraction-free (Bareiss) elimination, in `i128` while it
/// fits and in big integers otherwise.
pub fn rank_rational(rows: &[Vec<i64>]) -> usize {
    let small: Vec<Vec<i128>> = rows
        .iter()
        .map(|r| r.iter().map(|&x| x as i128).collect())
        .collect();
    match bareiss_i128(small) {
        Some(r) => r,
        None => {
            let big = rows
                .iter()
                .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
                .collect();
            bareiss_big(big)
        }
    }
}

fn bareiss_i128(mut a: Vec<Vec<i128>>) -> Option<usize> {
    let nrows = a.len();
    let ncols = a.first().map_or(0, |r| r.len());
    let mut prev: i128 = 1;
    let mut rank = 0;
    for col in 0..ncols {
        let Some(p) = (rank..nrows).find(|&r| a[r][col] != 0) else {
            continue;
        };
        a.swap(rank, p);
        let pivot = a[rank][col];
        for i in rank + 1..nrows {
            let lead = a[i][col];
            for j in col + 1..ncols {
                let x = pivot.checked_mul(a[i][j])?;
                let y = lead.checked_mul(a[rank][j])?;
                a[i][j] = x.checked_sub(y)? / prev;
            }
            a[i][col] = 0;
        }
        prev = pivot;
        rank += 1;
    }
    Some(rank)
}

fn bareiss_big(mut a: Vec<Vec<BigInt>>) -> usize {
    let nrows = a.len();
    let ncols = a.first().map_or(0, |r| r.len());
    let mut prev = BigInt::from(1);
    let mut rank = 0;
    for col in 0..ncols {
        let Some(p) = (rank..nrows).find(|&r| !a[r][col].is_zero()) else {
            continue;
        };
        a.swap(rank, p);
        let pivot = a[rank][col].clone();
        for i in rank + 1..nrows {
            let lead = a[i][col].clone();
            for j in col + 1..ncols {
                let v = (&pivot * &a[i][j] - &lead * &a[rank][j]) / &prev;
                a[i][j] = v;
            }
            a[i][col] = BigInt::zero();
        }
        prev = pivot;
        rank += 1;
    }
    rank
}

fn rank_mod_p(rows: &[Vec<i64>], p: u64) -> usize {
    let mut a: Vec<Vec<u64>> = rows
        .iter()
        .map(|r| r.iter().map(|&x| x.rem_euclid(p as i64) as u64).collect())
        .collect();
    let nrows = a.len();
    let ncols = a.first().map_or(0, |r| r.len());
    let inv = |x: u64| mod_pow(x, p - 2, p);
    let mut rank = 0;
    for col in 0..ncols {
        let Some(piv) = (rank..nrows).find(|&r| a[r][col] != 0) else {
            continue;
        };
        a.swap(rank, piv);
        let scale = inv(a[rank][col]);
        for j in col..ncols {
            a[rank][j] = a[rank][j] * scale % p;
        }
        for i in rank + 1..nrows {
            let f = a[i][col];
            if f == 0 {
                continue;
            }
            for j in col..ncols {
                a[i][j] = (a[i][j] + (p - f) * a[rank][j]) % p;
            }
        }
        rank += 1;
    }
    rank
}

fn mod_pow(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    r
}

/// Reduced homology of the complex on `ground` whose faces are the subsets
/// accepted by `is_face` (assumed closed under taking subsets).
///
/// Conventions: the void complex (no faces, not even `∅`) has no reduced
/// homology at all; the complex `{∅}` has `H̃_{-1}` of rank one. Both follow
/// from the augmented chain complex with `∅` in degree `-1`.
///
/// Returns the nonzero ranks keyed by homological dimension.
pub fn reduced_homology(
    ground: VertexSet,
    is_face: impl Fn(VertexSet) -> bool,
    field: FieldChoice,
) -> BTreeMap<i64, u64> {
    // faces[s] holds faces with s vertices, i.e. of dimension s - 1.
    let mut faces: Vec<Vec<VertexSet>> = vec![Vec::new(); ground.len() + 1];
    for t in ground.subsets() {
        if is_face(t) {
            faces[t.len()].push(t);
        }
    }
    let mut out = BTreeMap::new();
    if faces[0].is_empty() {
        return out;
    }
    while faces.last().is_some_and(|f| f.is_empty()) {
        faces.pop();
    }
    // ranks[s] = rank of the boundary from s-vertex faces to (s-1)-vertex faces
    let mut ranks = vec![0usize; faces.len() + 1];
    for s in 1..faces.len() {
        let index: HashMap<u64, usize> = faces[s - 1]
            .iter()
            .enumerate()
            .map(|(i, f)| (f.bits(), i))
            .collect();
        let mut m = vec![vec![0i64; faces[s].len()]; faces[s - 1].len()];
        for (c, &f) in faces[s].iter().enumerate() {
            for (pos, v) in f.iter().enumerate() {
                let sign = if pos % 2 == 0 { 1 } else { -1 };
                m[index[&f.without(v).bits()]][c] = sign;
            }
        }
        ranks[s] = rank(&m, field);
    }
    for s in 0..faces.len() {
        let h = faces[s].len() - ranks[s] - ranks[s + 1];
        if h > 0 {
            out.insert(s as i64 - 1, h as u64);
        }
    }
    out
}
