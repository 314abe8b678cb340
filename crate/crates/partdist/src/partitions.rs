//! Integer partitions of n and their vector representations.
//!
//! A partition is stored canonically as its weakly decreasing part list; the
//! multiplicity vector (m_1, ..., m_n) and the zero-padded partition vector
//! are derived views. Enumeration is in reverse-lexicographic order on part
//! lists, so (n) comes first and (1, ..., 1) last.

use std::fmt;

use thiserror::Error;

use crate::exact::{factorial, Integer};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PartitionError {
    #[error("parts must be positive and weakly decreasing")]
    InvalidParts,
    #[error("multiplicity vector of length {len} has weighted sum {weighted_sum}")]
    InvalidMultiplicities { len: usize, weighted_sum: usize },
    #[error("{part} is not a part of the partition")]
    MissingPart { part: usize },
}

/// A partition of n: weakly decreasing positive parts summing to n.
///
/// The empty partition is the unique partition of 0. Ordering is
/// lexicographic on part lists, so for fixed n the descending order matches
/// the enumeration order.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Partition {
    parts: Vec<usize>,
    n: usize,
}

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self, PartitionError> {
        let decreasing = parts.windows(2).all(|w| w[0] >= w[1]);
        if !decreasing || parts.last().is_some_and(|&p| p == 0) {
            return Err(PartitionError::InvalidParts);
        }
        Ok(Self::from_sorted(parts))
    }

    pub fn empty() -> Self {
        Self { parts: Vec::new(), n: 0 }
    }

    fn from_sorted(parts: Vec<usize>) -> Self {
        let n = parts.iter().sum();
        Self { parts, n }
    }

    /// The size n (sum of parts).
    pub fn n(&self) -> usize {
        self.n
    }

    /// The length l (number of parts).
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// How many times `part` occurs.
    pub fn multiplicity_of(&self, part: usize) -> usize {
        self.parts.iter().filter(|&&p| p == part).count()
    }

    /// Run-length encoding (part, multiplicity), largest part first.
    pub fn part_multiplicities(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        PartRuns { parts: &self.parts, pos: 0 }
    }

    /// The multiplicity vector (m_1, ..., m_n).
    pub fn to_multiplicity(&self) -> MultiplicityVector {
        let mut m = vec![0; self.n];
        for &part in &self.parts {
            m[part - 1] += 1;
        }
        MultiplicityVector { m }
    }

    /// The part list padded with zeros to length n.
    pub fn to_partition_vector(&self) -> PartitionVector {
        let mut lambda = self.parts.clone();
        lambda.resize(self.n, 0);
        PartitionVector { lambda }
    }

    /// Removes one occurrence of `part`, giving a partition of n - part.
    ///
    /// Restricted to partitions containing `part`, this is a bijection onto
    /// the partitions of n - part; [`Partition::insert_part`] inverts it.
    pub fn delete_part(&self, part: usize) -> Result<Partition, PartitionError> {
        match self.parts.iter().position(|&p| p == part) {
            Some(idx) => {
                let mut parts = self.parts.clone();
                parts.remove(idx);
                Ok(Self::from_sorted(parts))
            }
            None => Err(PartitionError::MissingPart { part }),
        }
    }

    /// Adds one occurrence of `part` (>= 1), giving a partition of n + part.
    pub fn insert_part(&self, part: usize) -> Partition {
        assert!(part >= 1, "parts are positive");
        let idx = self.parts.partition_point(|&p| p >= part);
        let mut parts = self.parts.clone();
        parts.insert(idx, part);
        Self::from_sorted(parts)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_tuple(f, &self.parts)
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Partition{self}")
    }
}

struct PartRuns<'a> {
    parts: &'a [usize],
    pos: usize,
}

impl Iterator for PartRuns<'_> {
    type Item = (usize, usize);

    fn next(&mut self) -> Option<(usize, usize)> {
        let part = *self.parts.get(self.pos)?;
        let start = self.pos;
        while self.pos < self.parts.len() && self.parts[self.pos] == part {
            self.pos += 1;
        }
        Some((part, self.pos - start))
    }
}

/// The multiplicity vector of a partition of n: length n, entry j counts the
/// part j, and sum(j * m_j) = n.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct MultiplicityVector {
    m: Vec<usize>,
}

impl MultiplicityVector {
    pub fn new(m: Vec<usize>) -> Result<Self, PartitionError> {
        let weighted_sum = m.iter().enumerate().map(|(idx, &mj)| (idx + 1) * mj).sum::<usize>();
        if weighted_sum != m.len() {
            return Err(PartitionError::InvalidMultiplicities { len: m.len(), weighted_sum });
        }
        Ok(Self { m })
    }

    /// The size n, which equals the vector length.
    pub fn n(&self) -> usize {
        self.m.len()
    }

    /// Entries m_1, ..., m_n (m_1 first).
    pub fn as_slice(&self) -> &[usize] {
        &self.m
    }

    pub fn to_partition(&self) -> Partition {
        let mut parts = Vec::new();
        for (idx, &mj) in self.m.iter().enumerate().rev() {
            for _ in 0..mj {
                parts.push(idx + 1);
            }
        }
        Partition::from_sorted(parts)
    }
}

impl fmt::Display for MultiplicityVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_tuple(f, &self.m)
    }
}

impl fmt::Debug for MultiplicityVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MultiplicityVector{self}")
    }
}

/// A partition's part list padded with zeros to length n.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PartitionVector {
    lambda: Vec<usize>,
}

impl PartitionVector {
    /// The size n, which equals the vector length.
    pub fn n(&self) -> usize {
        self.lambda.len()
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.lambda
    }
}

impl fmt::Display for PartitionVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_tuple(f, &self.lambda)
    }
}

impl fmt::Debug for PartitionVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PartitionVector{self}")
    }
}

fn write_tuple(f: &mut fmt::Formatter<'_>, values: &[usize]) -> fmt::Result {
    write!(f, "(")?;
    for (i, v) in values.iter().enumerate() {
        if i > 0 {
            write!(f, ",")?;
        }
        write!(f, "{v}")?;
    }
    write!(f, ")")
}

/// Iterator over all partitions of n in reverse-lexicographic order.
pub struct Partitions {
    next: Option<Vec<usize>>,
}

/// Enumerates the partitions of n, (n) first and (1, ..., 1) last.
/// n = 0 yields exactly the empty partition.
pub fn enumerate_partitions(n: usize) -> Partitions {
    let first = if n == 0 { Vec::new() } else { vec![n] };
    Partitions { next: Some(first) }
}

impl Iterator for Partitions {
    type Item = Partition;

    fn next(&mut self) -> Option<Partition> {
        let current = self.next.take()?;
        self.next = successor(&current);
        Some(Partition::from_sorted(current))
    }
}

/// The next part list in reverse-lexicographic order, or None at (1, ..., 1).
fn successor(a: &[usize]) -> Option<Vec<usize>> {
    // Decrement the rightmost part > 1, then redistribute everything to its
    // right (plus the removed unit) greedily under the new cap.
    let k = a.iter().rposition(|&p| p > 1)?;
    let mut next = a[..=k].to_vec();
    next[k] -= 1;
    let cap = next[k];
    let mut rem = a.len() - k;
    while rem > 0 {
        let part = cap.min(rem);
        next.push(part);
        rem -= part;
    }
    Some(next)
}

/// The number of permutations in S_n with cycle type `p`:
/// n! / (1^{m_1} 2^{m_2} ... n^{m_n} m_1! m_2! ... m_n!).
pub fn count_permutations_of_type(p: &Partition) -> Integer {
    let mut denom = Integer::from(1u32);
    for (part, mult) in p.part_multiplicities() {
        denom *= Integer::from(part).pow(mult as u32) * factorial(mult);
    }
    factorial(p.n()) / denom
}

/// p(n), the number of partitions of n, by the pentagonal-number recurrence.
///
/// Independent of [`enumerate_partitions`]; used to cross-check it.
pub fn partition_count(n: usize) -> u64 {
    let mut table = vec![0i128; n + 1];
    table[0] = 1;
    for m in 1..=n {
        let mut sum: i128 = 0;
        let mut k = 1usize;
        loop {
            let g1 = k * (3 * k - 1) / 2;
            if g1 > m {
                break;
            }
            let sign: i128 = if k % 2 == 1 { 1 } else { -1 };
            sum += sign * table[m - g1];
            let g2 = k * (3 * k + 1) / 2;
            if g2 <= m {
                sum += sign * table[m - g2];
            }
            k += 1;
        }
        table[m] = sum;
    }
    u64::try_from(table[n]).expect("p(n) fits in u64 for supported n")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn enumerates_the_seven_partitions_of_five_in_order() {
        let got: Vec<_> = enumerate_partitions(5).collect();
        let want = [
            vec![5],
            vec![4, 1],
            vec![3, 2],
            vec![3, 1, 1],
            vec![2, 2, 1],
            vec![2, 1, 1, 1],
            vec![1, 1, 1, 1, 1],
        ];
        assert_eq!(got.len(), 7);
        for (g, w) in got.iter().zip(want.iter()) {
            assert_eq!(g.parts(), w.as_slice());
        }
    }

    #[test]
    fn zero_has_exactly_the_empty_partition() {
        let got: Vec<_> = enumerate_partitions(0).collect();
        assert_eq!(got, vec![Partition::empty()]);
    }

    #[test]
    fn enumeration_count_matches_pentagonal_recurrence() {
        assert_eq!(enumerate_partitions(20).count() as u64, 627);
        for n in 0..=25 {
            assert_eq!(enumerate_partitions(n).count() as u64, partition_count(n), "n = {n}");
        }
    }

    #[test]
    fn multiplicity_vectors_for_table_entries() {
        assert_eq!(p(&[3, 1, 1]).to_multiplicity().as_slice(), &[2, 0, 1, 0, 0]);
        assert_eq!(p(&[5]).to_multiplicity().as_slice(), &[0, 0, 0, 0, 1]);
        assert_eq!(p(&[1, 1, 1, 1, 1]).to_multiplicity().as_slice(), &[5, 0, 0, 0, 0]);
    }

    #[test]
    fn multiplicity_round_trip() {
        let m = MultiplicityVector::new(vec![1, 2, 0, 0, 0]).unwrap();
        assert_eq!(m.to_partition(), p(&[2, 2, 1]));
        assert_eq!(MultiplicityVector::new(vec![]).unwrap().to_partition(), Partition::empty());
        for part in enumerate_partitions(8) {
            assert_eq!(part.to_multiplicity().to_partition(), part);
        }
    }

    #[test]
    fn multiplicity_vector_rejects_bad_weighted_sum() {
        assert_eq!(
            MultiplicityVector::new(vec![1, 2, 0, 0]),
            Err(PartitionError::InvalidMultiplicities { len: 4, weighted_sum: 5 })
        );
    }

    #[test]
    fn partition_vector_pads_with_zeros() {
        assert_eq!(p(&[4, 1]).to_partition_vector().as_slice(), &[4, 1, 0, 0, 0]);
        assert_eq!(p(&[1, 1, 1, 1, 1]).to_partition_vector().as_slice(), &[1, 1, 1, 1, 1]);
        assert!(Partition::empty().to_partition_vector().as_slice().is_empty());
    }

    #[test]
    fn delete_part_removes_one_occurrence() {
        assert_eq!(p(&[3, 2]).delete_part(2).unwrap(), p(&[3]));
        assert_eq!(p(&[2, 2, 1]).delete_part(2).unwrap(), p(&[2, 1]));
        assert_eq!(
            p(&[3, 2]).delete_part(4),
            Err(PartitionError::MissingPart { part: 4 })
        );
    }

    #[test]
    fn partitions_of_nine_containing_four_match_partitions_of_five() {
        let with_four = enumerate_partitions(9).filter(|q| q.multiplicity_of(4) >= 1).count();
        assert_eq!(with_four as u64, partition_count(5));
        assert_eq!(with_four, 7);
    }

    #[test]
    fn delete_insert_invert_each_other() {
        for n in 0..=12 {
            for part in enumerate_partitions(n) {
                for i in 1..=n {
                    if part.multiplicity_of(i) >= 1 {
                        let smaller = part.delete_part(i).unwrap();
                        assert_eq!(smaller.n(), n - i);
                        assert_eq!(smaller.insert_part(i), part);
                    }
                }
            }
        }
    }

    #[test]
    fn permutation_counts_for_s3() {
        assert_eq!(count_permutations_of_type(&p(&[3])), Integer::from(2));
        assert_eq!(count_permutations_of_type(&p(&[2, 1])), Integer::from(3));
        assert_eq!(count_permutations_of_type(&p(&[1, 1, 1])), Integer::from(1));
    }

    #[test]
    fn permutation_counts_sum_to_n_factorial() {
        for n in 0..=10 {
            let total: Integer = enumerate_partitions(n)
                .map(|q| count_permutations_of_type(&q))
                .sum();
            assert_eq!(total, factorial(n), "n = {n}");
        }
    }

    #[test]
    fn new_rejects_invalid_part_lists() {
        assert_eq!(Partition::new(vec![1, 2]), Err(PartitionError::InvalidParts));
        assert_eq!(Partition::new(vec![2, 0]), Err(PartitionError::InvalidParts));
        assert!(Partition::new(vec![]).is_ok());
    }

    #[test]
    fn display_formats() {
        assert_eq!(p(&[3, 1, 1]).to_string(), "(3,1,1)");
        assert_eq!(Partition::empty().to_string(), "()");
        assert_eq!(p(&[3, 1, 1]).to_multiplicity().to_string(), "(2,0,1,0,0)");
        assert_eq!(p(&[4, 1]).to_partition_vector().to_string(), "(4,1,0,0,0)");
    }
}
