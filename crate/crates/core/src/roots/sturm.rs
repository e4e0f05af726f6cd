use alloc::vec::Vec;
use core::cmp::Ordering;

use num_rational::BigRational;

use crate::polyalg::IntPoly;

/// A point of the extended real line used as a Sturm evaluation point.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Point {
    NegInf,
    At(BigRational),
    PosInf,
}

impl From<BigRational> for Point {
    fn from(x: BigRational) -> Self {
        Point::At(x)
    }
}

/// Signed remainder sequence `a, b, -rem(a, b), ...`, each member scaled by
/// a positive constant to stay primitive over the integers.
#[derive(Clone, Debug)]
pub struct RemainderSequence {
    chain: Vec<IntPoly>,
}

impl RemainderSequence {
    pub fn new(a: &IntPoly, b: &IntPoly) -> Self {
        let mut chain = Vec::new();
        if a.is_zero() {
            return Self { chain };
        }
        chain.push(a.clone());
        let mut prev = a.clone();
        let mut cur = b.clone();
        while !cur.is_zero() {
            let next = -prev.rem_primitive(&cur).expect("current member is nonzero");
            chain.push(cur.clone());
            prev = cur;
            cur = next;
        }
        Self { chain }
    }

    pub fn members(&self) -> &[IntPoly] {
        &self.chain
    }

    pub fn variations(&self, x: &Point) -> usize {
        let mut count = 0;
        let mut last = Ordering::Equal;
        for p in &self.chain {
            let s = match x {
                Point::NegInf => p.sign_at_neg_inf(),
                Point::PosInf => p.sign_at_pos_inf(),
                Point::At(v) => p.sign_at(v),
            };
            if s == Ordering::Equal {
                continue;
            }
            if last != Ordering::Equal && s != last {
                count += 1;
            }
            last = s;
        }
        count
    }

    /// Cauchy index of `b/a` over `(lo, hi)`: `Var(lo) - Var(hi)`.
    pub fn cauchy_index(&self, lo: &Point, hi: &Point) -> i64 {
        self.variations(lo) as i64 - self.variations(hi) as i64
    }
}

/// Sturm sequence of the squarefree part of a polynomial.
#[derive(Clone, Debug)]
pub struct SturmSequence {
    seq: RemainderSequence,
}

impl SturmSequence {
    pub fn new(p: &IntPoly) -> Self {
        let q = p.squarefree_part();
        let dq = q.derivative();
        Self { seq: RemainderSequence::new(&q, &dq) }
    }

    /// The squarefree polynomial the sequence starts with.
    pub fn base(&self) -> &IntPoly {
        &self.seq.members()[0]
    }

    /// Number of distinct real roots in `(lo, hi]`.
    pub fn count(&self, lo: &Point, hi: &Point) -> usize {
        if self.seq.members().is_empty() {
            return 0;
        }
        let (vl, vh) = (self.seq.variations(lo), self.seq.variations(hi));
        vl.saturating_sub(vh)
    }

    pub fn count_all(&self) -> usize {
        self.count(&Point::NegInf, &Point::PosInf)
    }
}

/// Number of distinct real roots of `p` in `(lo, hi]`.
pub fn sturm_count(p: &IntPoly, lo: &BigRational, hi: &BigRational) -> usize {
    if lo >= hi || p.is_zero() {
        return 0;
    }
    SturmSequence::new(p).count(&Point::At(lo.clone()), &Point::At(hi.clone()))
}
