use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use super::CoxeterError;

/// An off-diagonal Coxeter label `m_ij`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Label {
    Finite(u32),
    Infinite,
}

impl Label {
    pub fn finite(self) -> Option<u32> {
        match self {
            Label::Finite(m) => Some(m),
            Label::Infinite => None,
        }
    }

    pub fn is_commuting(self) -> bool {
        self == Label::Finite(2)
    }
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Label::Finite(m) => write!(f, "{m}"),
            Label::Infinite => f.write_str("inf"),
        }
    }
}

impl From<u32> for Label {
    fn from(m: u32) -> Self {
        Label::Finite(m)
    }
}

/// Symmetric Coxeter matrix. Pairs never set default to 2.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CoxeterMatrix {
    rank: usize,
    labels: Vec<Label>,
}

impl CoxeterMatrix {
    /// The rank-`n` matrix of `(Z/2)^n`: all off-diagonal labels 2.
    pub fn new(rank: usize) -> Self {
        let mut labels = vec![Label::Finite(2); rank * rank];
        for i in 0..rank {
            labels[i * rank + i] = Label::Finite(1);
        }
        CoxeterMatrix { rank, labels }
    }

    pub fn from_labels<I, L>(rank: usize, entries: I) -> Result<Self, CoxeterError>
    where
        I: IntoIterator<Item = (usize, usize, L)>,
        L: Into<Label>,
    {
        let mut m = CoxeterMatrix::new(rank);
        for (i, j, l) in entries {
            m.set(i, j, l.into())?;
        }
        Ok(m)
    }

    /// Triangle group matrix with `m_01 = a`, `m_02 = b`, `m_12 = c`.
    pub fn triangle(a: u32, b: u32, c: u32) -> Result<Self, CoxeterError> {
        Self::from_labels(3, [(0, 1, a), (0, 2, b), (1, 2, c)])
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn set(&mut self, i: usize, j: usize, label: Label) -> Result<(), CoxeterError> {
        if i >= self.rank || j >= self.rank {
            return Err(CoxeterError::IndexOutOfRange { index: i.max(j), rank: self.rank });
        }
        if i == j {
            return Err(CoxeterError::DiagonalLabel(i));
        }
        if let Label::Finite(m) = label {
            if m < 2 {
                return Err(CoxeterError::InvalidLabel { i, j, m });
            }
        }
        self.labels[i * self.rank + j] = label;
        self.labels[j * self.rank + i] = label;
        Ok(())
    }

    /// `m_ij`; the diagonal reads as `Finite(1)`.
    pub fn get(&self, i: usize, j: usize) -> Label {
        self.labels[i * self.rank + j]
    }

    /// Principal submatrix on the given generators, in the given order.
    pub fn restrict(&self, gens: &[usize]) -> CoxeterMatrix {
        let n = gens.len();
        let mut labels = Vec::with_capacity(n * n);
        for &i in gens {
            for &j in gens {
                labels.push(self.get(i, j));
            }
        }
        CoxeterMatrix { rank: n, labels }
    }

    /// Simultaneous row/column permutation: new index `k` is old `perm[k]`.
    pub fn permute(&self, perm: &[usize]) -> CoxeterMatrix {
        assert_eq!(perm.len(), self.rank);
        self.restrict(perm)
    }

    /// Off-diagonal pairs `i < j` whose label is not 2.
    pub fn non_commuting_pairs(&self) -> impl Iterator<Item = (usize, usize, Label)> + '_ {
        (0..self.rank).flat_map(move |i| {
            (i + 1..self.rank).filter_map(move |j| {
                let l = self.get(i, j);
                (!l.is_commuting()).then_some((i, j, l))
            })
        })
    }

    pub fn has_infinite_label(&self) -> bool {
        self.non_commuting_pairs().any(|(_, _, l)| l == Label::Infinite)
    }
}
