//! Signs and sign vectors over a ground set.

use std::fmt;
use std::ops::{Mul, Neg};

use crate::subset::Subset;

/// The sign of an exact quantity.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Sign {
    Minus,
    Zero,
    Plus,
}

impl Sign {
    pub fn of_i64(v: i64) -> Self {
        match v.cmp(&0) {
            std::cmp::Ordering::Less => Sign::Minus,
            std::cmp::Ordering::Equal => Sign::Zero,
            std::cmp::Ordering::Greater => Sign::Plus,
        }
    }

    pub fn as_i8(self) -> i8 {
        match self {
            Sign::Minus => -1,
            Sign::Zero => 0,
            Sign::Plus => 1,
        }
    }

    pub fn is_zero(self) -> bool {
        self == Sign::Zero
    }

    pub fn is_positive(self) -> bool {
        self == Sign::Plus
    }

    pub fn is_negative(self) -> bool {
        self == Sign::Minus
    }

    pub fn as_char(self) -> char {
        match self {
            Sign::Minus => '-',
            Sign::Zero => '0',
            Sign::Plus => '+',
        }
    }

    pub fn from_char(c: char) -> Option<Self> {
        match c {
            '-' => Some(Sign::Minus),
            '0' => Some(Sign::Zero),
            '+' => Some(Sign::Plus),
            _ => None,
        }
    }
}

impl Neg for Sign {
    type Output = Sign;
    fn neg(self) -> Sign {
        match self {
            Sign::Minus => Sign::Plus,
            Sign::Zero => Sign::Zero,
            Sign::Plus => Sign::Minus,
        }
    }
}

impl Mul for Sign {
    type Output = Sign;
    fn mul(self, rhs: Sign) -> Sign {
        match (self, rhs) {
            (Sign::Zero, _) | (_, Sign::Zero) => Sign::Zero,
            (a, b) if a == b => Sign::Plus,
            _ => Sign::Minus,
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.as_char())
    }
}

/// A sign vector over ground elements `0..n`; used for circuits,
/// cocircuits, and general signed subsets.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SignedSet {
    signs: Vec<Sign>,
}

impl SignedSet {
    pub fn zero(n: usize) -> Self {
        SignedSet {
            signs: vec![Sign::Zero; n],
        }
    }

    pub fn from_signs(signs: Vec<Sign>) -> Self {
        SignedSet { signs }
    }

    /// Builds a sign vector from its positive and negative parts.
    pub fn from_parts(n: usize, plus: &[usize], minus: &[usize]) -> Self {
        let mut s = SignedSet::zero(n);
        for &e in plus {
            s.signs[e] = Sign::Plus;
        }
        for &e in minus {
            s.signs[e] = Sign::Minus;
        }
        s
    }

    pub fn ground_size(&self) -> usize {
        self.signs.len()
    }

    pub fn sign(&self, e: usize) -> Sign {
        self.signs[e]
    }

    pub fn set_sign(&mut self, e: usize, s: Sign) {
        self.signs[e] = s;
    }

    pub fn signs(&self) -> &[Sign] {
        &self.signs
    }

    pub fn support(&self) -> Subset {
        let mut s = Subset::EMPTY;
        for (e, &v) in self.signs.iter().enumerate() {
            if !v.is_zero() {
                s = s.with(e);
            }
        }
        s
    }

    pub fn is_zero(&self) -> bool {
        self.signs.iter().all(|s| s.is_zero())
    }

    /// Nonempty support, every support sign `+`.
    pub fn is_positive(&self) -> bool {
        !self.is_zero() && self.signs.iter().all(|s| !s.is_negative())
    }

    pub fn negated(&self) -> Self {
        SignedSet {
            signs: self.signs.iter().map(|&s| -s).collect(),
        }
    }

    /// Flips the signs on `a`.
    pub fn reoriented(&self, a: Subset) -> Self {
        let mut out = self.clone();
        for e in a.iter() {
            if e < out.signs.len() {
                out.signs[e] = -out.signs[e];
            }
        }
        out
    }

    /// The representative of `{X, -X}` whose minimum support element is
    /// positive. Zero vectors are their own representative.
    pub fn canonical(&self) -> Self {
        match self.support().min() {
            Some(e) if self.signs[e].is_negative() => self.negated(),
            _ => self.clone(),
        }
    }

    pub fn is_canonical(&self) -> bool {
        match self.support().min() {
            Some(e) => self.signs[e].is_positive(),
            None => true,
        }
    }

    /// Restriction to `keep`, reindexed by ascending order of `keep`.
    pub fn restricted(&self, keep: Subset) -> SignedSet {
        SignedSet {
            signs: keep.iter().map(|e| self.signs[e]).collect(),
        }
    }
}

impl fmt::Display for SignedSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "{{}}");
        }
        let mut first = true;
        for (e, &s) in self.signs.iter().enumerate() {
            if s.is_zero() {
                continue;
            }
            if !first {
                write!(f, " ")?;
            }
            first = false;
            write!(f, "{}{}", if s.is_positive() { '+' } else { '-' }, e + 1)?;
        }
        Ok(())
    }
}

impl fmt::Debug for SignedSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonicalization_flips_on_negative_minimum() {
        let s = SignedSet::from_parts(4, &[2], &[0]);
        let c = s.canonical();
        assert_eq!(c, SignedSet::from_parts(4, &[0], &[2]));
        assert!(c.is_canonical());
        assert_eq!(c.negated().canonical(), c);
    }

    #[test]
    fn reorientation_is_an_involution() {
        let s = SignedSet::from_parts(5, &[0, 3], &[1]);
        let a = Subset::from_elems(&[1, 3, 4]);
        assert_eq!(s.reoriented(a).reoriented(a), s);
        assert_eq!(s.reoriented(a).support(), s.support());
    }

    #[test]
    fn display_is_one_based() {
        let s = SignedSet::from_parts(4, &[0], &[1]);
        assert_eq!(format!("{s}"), "+1 -2");
    }
}
