//! Integer partitions, Young diagrams and standard Young tableau counts.
//!
//! A [`Partition`] is stored in canonical form: strictly positive parts in
//! weakly decreasing order, no trailing zeros. Zero padding is always done
//! explicitly by the caller (see [`Partition::padded`] and [`Partition::add`]).

use std::fmt;
use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Default weight limit for [`Partition::syt_count_bruteforce`].
pub const DEFAULT_SYT_CAP: usize = 12;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Builds a partition, dropping trailing zeros.
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(
                parts.iter().map(|&p| p as i64).collect(),
            ));
        }
        Ok(Partition { parts })
    }

    /// Accepts signed input (as read from JSON) and rejects negative parts.
    pub fn from_signed(parts: &[i64]) -> Result<Self> {
        if parts.iter().any(|&p| p < 0) {
            return Err(Error::InvalidPartition(parts.to_vec()));
        }
        Partition::new(parts.iter().map(|&p| p as usize).collect())
            .map_err(|_| Error::InvalidPartition(parts.to_vec()))
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// The one-row partition `(k)`.
    pub fn row(k: usize) -> Self {
        Self::rectangle(1, k)
    }

    /// The one-column partition of `k` ones.
    pub fn column(k: usize) -> Self {
        Self::rectangle(k, 1)
    }

    /// `rows` parts all equal to `entry`; empty when `entry == 0`.
    pub fn rectangle(rows: usize, entry: usize) -> Self {
        if entry == 0 {
            return Self::empty();
        }
        Partition {
            parts: vec![entry; rows],
        }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Part `i` (zero-based), or 0 past the end.
    pub fn get(&self, i: usize) -> usize {
        self.parts.get(i).copied().unwrap_or(0)
    }

    pub fn weight(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Column lengths of the Young diagram.
    pub fn conjugate(&self) -> Partition {
        let width = self.get(0);
        let parts = (0..width)
            .map(|j| self.parts.iter().take_while(|&&p| p > j).count())
            .collect();
        Partition { parts }
    }

    pub fn contains(&self, other: &Partition) -> bool {
        other.len() <= self.len() && (0..other.len()).all(|i| self.parts[i] >= other.parts[i])
    }

    /// The parts zero-padded to `len` entries, as signed integers.
    pub fn padded(&self, len: usize) -> Vec<i64> {
        (0..len.max(self.len())).map(|i| self.get(i) as i64).collect()
    }

    /// Componentwise sum after zero-padding both operands to `pad_to`.
    pub fn add(&self, other: &Partition, pad_to: usize) -> Result<Partition> {
        for p in [self, other] {
            if p.len() > pad_to {
                return Err(Error::PartitionTooLong {
                    partition: p.to_string(),
                    len: p.len(),
                    max: pad_to,
                });
            }
        }
        let sum: Vec<usize> = (0..pad_to).map(|i| self.get(i) + other.get(i)).collect();
        Partition::new(sum.clone()).map_err(|_| Error::NonPartitionSum(sum))
    }

    /// All partitions obtained by adding one box, keeping at most `max_rows`
    /// rows. Output is lexicographically decreasing.
    pub fn pieri_add_box(&self, max_rows: usize) -> Vec<Partition> {
        let mut out = Vec::new();
        for i in 0..=self.len() {
            if i >= max_rows {
                break;
            }
            if i == 0 || self.parts[i - 1] > self.get(i) {
                let mut parts = self.parts.clone();
                if i == parts.len() {
                    parts.push(1);
                } else {
                    parts[i] += 1;
                }
                out.push(Partition { parts });
            }
        }
        out
    }

    /// All partitions obtained by removing one corner box.
    pub fn remove_corner(&self) -> Vec<Partition> {
        let q = self.len();
        (0..q)
            .filter(|&i| i + 1 == q || self.parts[i] > self.parts[i + 1])
            .map(|i| {
                let mut parts = self.parts.clone();
                parts[i] -= 1;
                if parts[i] == 0 {
                    parts.pop();
                }
                Partition { parts }
            })
            .collect()
    }

    /// Every partition of `weight` with at most `max_len` parts, in
    /// lexicographically decreasing order.
    pub fn all_of_weight(weight: usize, max_len: usize) -> Vec<Partition> {
        fn rec(
            rest: usize,
            cap: usize,
            slots: usize,
            cur: &mut Vec<usize>,
            out: &mut Vec<Partition>,
        ) {
            if rest == 0 {
                out.push(Partition { parts: cur.clone() });
                return;
            }
            if slots == 0 {
                return;
            }
            for p in (1..=cap.min(rest)).rev() {
                cur.push(p);
                rec(rest - p, p, slots - 1, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        rec(weight, weight, max_len, &mut Vec::new(), &mut out);
        out
    }

    /// Number of standard Young tableaux via the determinantal product
    ///
    /// `f = |λ|! / ∏ ℓ_i! · ∏_{i<j} (ℓ_i − ℓ_j)`, with `ℓ_i = λ_i + q − i`.
    ///
    /// Shapes with at most one row give 1.
    pub fn syt_count_formula(&self) -> BigUint {
        let q = self.len();
        if q <= 1 {
            return BigUint::one();
        }
        let shifted: Vec<usize> = (0..q).map(|i| self.parts[i] + q - 1 - i).collect();
        let mut num = factorial(self.weight());
        for i in 0..q {
            for j in i + 1..q {
                num *= BigUint::from(shifted[i] - shifted[j]);
            }
        }
        let den = shifted
            .iter()
            .fold(BigUint::one(), |acc, &l| acc * factorial(l));
        num / den
    }

    /// Counts labelings of the diagram by exhaustive placement of
    /// `1..=|λ|`, each new label going into an addable cell of the region
    /// filled so far. Refuses shapes heavier than `cap`.
    pub fn syt_count_bruteforce(&self, cap: usize) -> Result<BigUint> {
        let weight = self.weight();
        if weight > cap {
            return Err(Error::EnumerationCap { weight, cap });
        }
        fn place(shape: &[usize], filled: &mut [usize], left: usize) -> u64 {
            if left == 0 {
                return 1;
            }
            let mut count = 0;
            for i in 0..shape.len() {
                let j = filled[i];
                let room_in_row = j < shape[i];
                let cell_above_filled = i == 0 || filled[i - 1] > j;
                if room_in_row && cell_above_filled {
                    filled[i] += 1;
                    count += place(shape, filled, left - 1);
                    filled[i] -= 1;
                }
            }
            count
        }
        let mut filled = vec![0; self.len()];
        Ok(BigUint::from(place(&self.parts, &mut filled, weight)))
    }
}

fn factorial(n: usize) -> BigUint {
    (1..=n).fold(BigUint::one(), |acc, k| acc * BigUint::from(k))
}

/// `f^λ` as a signed integer, or zero when `λ` has more than `max_len` rows.
pub fn syt_count_bounded(lambda: &Partition, max_len: usize) -> BigInt {
    if lambda.len() > max_len {
        BigInt::zero()
    } else {
        BigInt::from(lambda.syt_count_formula())
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, "]")
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Partition{self}")
    }
}

/// Parses `[3,1]`, `3,1`, `3 1` or `[]`.
impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let inner = s.trim();
        let inner = inner
            .strip_prefix('[')
            .and_then(|t| t.strip_suffix(']'))
            .unwrap_or(inner);
        let mut parts = Vec::new();
        for tok in inner.split(|c: char| c == ',' || c.is_whitespace()) {
            if tok.is_empty() {
                continue;
            }
            let v: i64 = tok
                .parse()
                .map_err(|_| Error::Parse(format!("bad partition literal `{s}`")))?;
            parts.push(v);
        }
        Partition::from_signed(&parts)
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.parts.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let raw = Vec::<i64>::deserialize(deserializer)?;
        Partition::from_signed(&raw).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn weight_examples() {
        assert_eq!(Partition::empty().weight(), 0);
        assert_eq!(p(&[3, 1]).weight(), 4);
        // d = 2, r = 5
        assert_eq!(Partition::rectangle(2, 3).weight(), 2 * (5 - 2));
    }

    #[test]
    fn canonical_form_drops_trailing_zeros() {
        assert_eq!(p(&[2, 1, 0, 0]), p(&[2, 1]));
        assert!(Partition::new(vec![1, 2]).is_err());
        assert!(Partition::from_signed(&[2, -1]).is_err());
    }

    #[test]
    fn conjugate_examples() {
        assert_eq!(Partition::empty().conjugate(), Partition::empty());
        assert_eq!(Partition::row(4).conjugate(), Partition::column(4));
        assert_eq!(p(&[3, 1]).conjugate(), p(&[2, 1, 1]));
    }

    #[test]
    fn rectangle_examples() {
        assert_eq!(Partition::rectangle(2, 3), p(&[3, 3]));
        assert_eq!(Partition::rectangle(1, 4), Partition::row(4));
        assert_eq!(Partition::rectangle(3, 0), Partition::empty());
    }

    #[test]
    fn add_examples() {
        let eps = Partition::rectangle(2, 3);
        assert_eq!(p(&[1]).add(&eps, 2).unwrap(), p(&[4, 3]));
        assert_eq!(Partition::empty().add(&eps, 2).unwrap(), eps);
        let r = 6;
        assert_eq!(p(&[2]).add(&Partition::row(r - 1), 1).unwrap(), Partition::row(r + 1));
    }

    #[test]
    fn add_rejects_bad_operands() {
        assert!(matches!(
            p(&[1, 1, 1]).add(&p(&[1]), 2),
            Err(Error::PartitionTooLong { .. })
        ));
        assert!(p(&[1, 1]).add(&p(&[1]), 1).is_err());
        assert!(p(&[1]).add(&p(&[2, 2]), 2).is_ok());
    }

    #[test]
    fn pieri_examples() {
        assert_eq!(Partition::empty().pieri_add_box(2), vec![p(&[1])]);
        assert_eq!(p(&[1]).pieri_add_box(1), vec![p(&[2])]);
        assert_eq!(p(&[2, 1]).pieri_add_box(2), vec![p(&[3, 1]), p(&[2, 2])]);
        assert_eq!(
            p(&[2, 1]).pieri_add_box(3),
            vec![p(&[3, 1]), p(&[2, 2]), p(&[2, 1, 1])]
        );
    }

    #[test]
    fn syt_formula_examples() {
        for k in 1..7 {
            assert_eq!(Partition::row(k).syt_count_formula(), BigUint::one());
        }
        assert_eq!(p(&[2, 1]).syt_count_formula(), BigUint::from(2u32));
        assert_eq!(p(&[2, 2]).syt_count_formula(), BigUint::from(2u32));
        assert_eq!(Partition::empty().syt_count_formula(), BigUint::one());
    }

    #[test]
    fn syt_bruteforce_examples() {
        let cap = DEFAULT_SYT_CAP;
        assert_eq!(Partition::empty().syt_count_bruteforce(cap).unwrap(), BigUint::one());
        assert_eq!(Partition::column(5).syt_count_bruteforce(cap).unwrap(), BigUint::one());
        assert_eq!(p(&[3, 2]).syt_count_bruteforce(cap).unwrap(), BigUint::from(5u32));
        assert_eq!(
            Partition::row(13).syt_count_bruteforce(cap),
            Err(Error::EnumerationCap { weight: 13, cap: 12 })
        );
    }

    #[test]
    fn partition_counts_per_weight() {
        let counts: Vec<usize> = (0..=8).map(|w| Partition::all_of_weight(w, w).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 3, 5, 7, 11, 15, 22]);
        assert_eq!(
            Partition::all_of_weight(4, 2),
            vec![p(&[4]), p(&[3, 1]), p(&[2, 2])]
        );
    }

    #[test]
    fn parse_and_serde() {
        assert_eq!("[2,1]".parse::<Partition>().unwrap(), p(&[2, 1]));
        assert_eq!("[]".parse::<Partition>().unwrap(), Partition::empty());
        assert_eq!("3 1".parse::<Partition>().unwrap(), p(&[3, 1]));
        assert!("[1,x]".parse::<Partition>().is_err());
        assert!("[1,2]".parse::<Partition>().is_err());
        assert_eq!(serde_json::to_string(&p(&[3, 1])).unwrap(), "[3,1]");
        assert_eq!(serde_json::to_string(&Partition::empty()).unwrap(), "[]");
        let back: Partition = serde_json::from_str("[4,2,2]").unwrap();
        assert_eq!(back, p(&[4, 2, 2]));
        assert!(serde_json::from_str::<Partition>("[1,3]").is_err());
    }
}
