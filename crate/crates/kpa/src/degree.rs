//! Degrees in `N^k` and graded degrees in `Z^k`.

use serde::{Deserialize, Serialize};
use std::fmt;

/// An element of `N^k`: one count per colour.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Degree(pub Vec<u32>);

/// An element of `Z^k`, used for graded components `d(alpha) - d(beta)`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct GradeDegree(pub Vec<i64>);

impl Degree {
    pub fn zero(k: usize) -> Self {
        Degree(vec![0; k])
    }

    pub fn unit(k: usize, color: usize) -> Self {
        let mut v = vec![0; k];
        v[color] = 1;
        Degree(v)
    }

    pub fn ones(k: usize) -> Self {
        Degree(vec![1; k])
    }

    pub fn uniform(k: usize, value: u32) -> Self {
        Degree(vec![value; k])
    }

    pub fn k(&self) -> usize {
        self.0.len()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }

    pub fn total(&self) -> u64 {
        self.0.iter().map(|&c| u64::from(c)).sum()
    }

    /// Componentwise partial order.
    pub fn le(&self, other: &Degree) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn add(&self, other: &Degree) -> Degree {
        Degree(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// Componentwise difference; requires `other <= self`.
    pub fn sub(&self, other: &Degree) -> Degree {
        debug_assert!(other.le(self));
        Degree(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    /// Componentwise maximum (join).
    pub fn join(&self, other: &Degree) -> Degree {
        Degree(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| *a.max(b))
                .collect(),
        )
    }

    /// Componentwise minimum (meet).
    pub fn meet(&self, other: &Degree) -> Degree {
        Degree(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| *a.min(b))
                .collect(),
        )
    }

    pub fn scale(&self, factor: u32) -> Degree {
        Degree(self.0.iter().map(|c| c * factor).collect())
    }

    pub fn to_grade(&self) -> GradeDegree {
        GradeDegree(self.0.iter().map(|&c| i64::from(c)).collect())
    }

    /// `d(alpha) - d(beta)` as a point of `Z^k`.
    pub fn grade_sub(&self, other: &Degree) -> GradeDegree {
        GradeDegree(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| i64::from(*a) - i64::from(*b))
                .collect(),
        )
    }

    /// All degrees `d` with `lo <= d <= hi`, in colexicographic order
    /// (first colour varies fastest).
    pub fn box_range(lo: &Degree, hi: &Degree) -> Vec<Degree> {
        let k = lo.k();
        let mut out = Vec::new();
        let mut cur = lo.0.clone();
        loop {
            out.push(Degree(cur.clone()));
            let mut i = 0;
            loop {
                if i == k {
                    return out;
                }
                if cur[i] < hi.0[i] {
                    cur[i] += 1;
                    break;
                }
                cur[i] = lo.0[i];
                i += 1;
            }
        }
    }
}

impl GradeDegree {
    pub fn zero(k: usize) -> Self {
        GradeDegree(vec![0; k])
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }

    pub fn add(&self, other: &GradeDegree) -> GradeDegree {
        GradeDegree(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }
}

impl fmt::Display for Degree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.len() == 1 {
            return write!(f, "{}", self.0[0]);
        }
        write!(f, "(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for Degree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for GradeDegree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.len() == 1 {
            return write!(f, "{}", self.0[0]);
        }
        write!(f, "(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for GradeDegree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
