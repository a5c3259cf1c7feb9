//! Chirotope-based oriented matroids: bases, fundamental circuits and
//! cocircuits, full circuit/cocircuit enumeration, duality, minors,
//! reorientation, and acyclicity tests.
//!
//! A chirotope is stored as a dense sign array over the lexicographically
//! ordered sorted `r`-subsets of the ground set. Evaluation on an arbitrary
//! `r`-tuple sorts the tuple and multiplies by the permutation parity;
//! tuples with repeated entries evaluate to zero.

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{OmError, Result};
use crate::sign::{Sign, SignedSet};
use crate::subset::{binomial, k_subsets, sort_with_parity, subset_rank, Subset, MAX_GROUND};

/// A linearly ordered ground set. Elements are the indices `0..n`; the
/// index order is the order used for activities. Labels are display-only
/// and ignored by equality.
#[derive(Clone, Debug)]
pub struct GroundSet {
    n: usize,
    labels: Option<Vec<String>>,
}

impl GroundSet {
    pub fn new(n: usize) -> Result<Self> {
        if n > MAX_GROUND {
            return Err(OmError::GroundTooLarge(n));
        }
        Ok(GroundSet { n, labels: None })
    }

    pub fn with_labels(n: usize, labels: Vec<String>) -> Result<Self> {
        let mut g = GroundSet::new(n)?;
        if labels.len() != n {
            return Err(OmError::LabelsNotDistinct);
        }
        let distinct: BTreeSet<&String> = labels.iter().collect();
        if distinct.len() != n {
            return Err(OmError::LabelsNotDistinct);
        }
        g.labels = Some(labels);
        Ok(g)
    }

    pub fn size(&self) -> usize {
        self.n
    }

    /// Display name of an element: its label, or the 1-based index.
    pub fn label(&self, e: usize) -> String {
        match &self.labels {
            Some(ls) => ls[e].clone(),
            None => (e + 1).to_string(),
        }
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }
}

/// An oriented matroid of rank `r` on `0..n`, as a chirotope.
#[derive(Clone)]
pub struct Chirotope {
    ground: GroundSet,
    rank: usize,
    signs: Vec<Sign>,
}

impl PartialEq for Chirotope {
    fn eq(&self, other: &Self) -> bool {
        self.ground.n == other.ground.n && self.rank == other.rank && self.signs == other.signs
    }
}

impl Eq for Chirotope {}

impl fmt::Debug for Chirotope {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Chirotope(n={}, r={}, ", self.ground.n, self.rank)?;
        for s in &self.signs {
            write!(f, "{s}")?;
        }
        write!(f, ")")
    }
}

impl Chirotope {
    /// Builds a chirotope from its dense sign array over lex-ordered
    /// `rank`-subsets. Rejects wrong lengths and the identically zero map.
    pub fn from_signs(ground: GroundSet, rank: usize, signs: Vec<Sign>) -> Result<Self> {
        if rank > ground.n {
            return Err(OmError::InvalidChirotope(format!(
                "rank {rank} exceeds ground size {}",
                ground.n
            )));
        }
        let expected = binomial(ground.n, rank) as usize;
        if signs.len() != expected {
            return Err(OmError::InvalidChirotope(format!(
                "sign array has length {}, expected C({}, {rank}) = {expected}",
                signs.len(),
                ground.n
            )));
        }
        if signs.iter().all(|s| s.is_zero()) {
            return Err(OmError::InvalidChirotope("identically zero".into()));
        }
        Ok(Chirotope {
            ground,
            rank,
            signs,
        })
    }

    pub fn from_fn(
        ground: GroundSet,
        rank: usize,
        mut f: impl FnMut(&[usize]) -> Sign,
    ) -> Result<Self> {
        let signs = k_subsets(ground.n, rank).map(|s| f(&s)).collect();
        Chirotope::from_signs(ground, rank, signs)
    }

    pub fn ground(&self) -> &GroundSet {
        &self.ground
    }

    pub fn n(&self) -> usize {
        self.ground.n
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn signs(&self) -> &[Sign] {
        &self.signs
    }

    /// Value on a strictly ascending `rank`-subset.
    pub fn chi_sorted(&self, elems: &[usize]) -> Sign {
        debug_assert!(elems.windows(2).all(|w| w[0] < w[1]));
        debug_assert_eq!(elems.len(), self.rank);
        self.signs[subset_rank(self.ground.n, elems)]
    }

    pub fn chi_subset(&self, s: Subset) -> Sign {
        self.chi_sorted(&s.elems())
    }

    /// Value on an arbitrary tuple: zero on repeats, otherwise the sign of
    /// the sorted subset times the sorting parity.
    pub fn chi_tuple(&self, tuple: &[usize]) -> Sign {
        let mut t = tuple.to_vec();
        match sort_with_parity(&mut t) {
            None => Sign::Zero,
            Some(odd) => {
                let s = self.chi_sorted(&t);
                if odd {
                    -s
                } else {
                    s
                }
            }
        }
    }

    /// Globally negated chirotope (same oriented matroid).
    pub fn negated(&self) -> Self {
        Chirotope {
            ground: self.ground.clone(),
            rank: self.rank,
            signs: self.signs.iter().map(|&s| -s).collect(),
        }
    }

    /// The `rank`-subsets with nonzero sign, in lexicographic order.
    pub fn bases(&self) -> Vec<Subset> {
        k_subsets(self.ground.n, self.rank)
            .enumerate()
            .filter(|(i, _)| !self.signs[*i].is_zero())
            .map(|(_, s)| Subset::from_elems(&s))
            .collect()
    }

    pub fn is_basis(&self, s: Subset) -> bool {
        s.len() == self.rank && !self.chi_subset(s).is_zero()
    }

    /// Matroid rank of a subset, as the largest intersection with a basis.
    pub fn rank_of(&self, s: Subset) -> usize {
        self.bases()
            .iter()
            .map(|&b| (b & s).len())
            .max()
            .unwrap_or(0)
    }

    pub fn is_loop(&self, e: usize) -> bool {
        self.bases().iter().all(|b| !b.contains(e))
    }

    pub fn is_coloop(&self, e: usize) -> bool {
        self.bases().iter().all(|b| b.contains(e))
    }

    /// The fundamental cocircuit `C*(B; b)`: support is the complement of
    /// the closure of `B \ b`, the sign of `b` is `+`, and the sign of `e`
    /// is `chi(B) * chi(B with b replaced by e)` with `e` in `b`'s position.
    pub fn fundamental_cocircuit(&self, basis: Subset, b: usize) -> Result<SignedSet> {
        if !self.is_basis(basis) {
            return Err(OmError::NotABasis(basis.elems()));
        }
        if !basis.contains(b) {
            return Err(OmError::NotInBasis(b));
        }
        let elems = basis.elems();
        let pos = elems.iter().position(|&x| x == b).unwrap();
        let chi_b = self.chi_sorted(&elems);
        let mut out = SignedSet::zero(self.ground.n);
        let mut tuple = elems.clone();
        for e in 0..self.ground.n {
            tuple[pos] = e;
            out.set_sign(e, chi_b * self.chi_tuple(&tuple));
        }
        Ok(out)
    }

    /// The fundamental circuit `C(B; e)`: support is contained in
    /// `B ∪ {e}`, the sign of `e` is `+`, and the sign of `b ∈ B` is
    /// `-chi(B) * chi(B with b replaced by e)`.
    pub fn fundamental_circuit(&self, basis: Subset, e: usize) -> Result<SignedSet> {
        if !self.is_basis(basis) {
            return Err(OmError::NotABasis(basis.elems()));
        }
        if basis.contains(e) {
            return Err(OmError::AlreadyInBasis(e));
        }
        let elems = basis.elems();
        let chi_b = self.chi_sorted(&elems);
        let mut out = SignedSet::zero(self.ground.n);
        out.set_sign(e, Sign::Plus);
        for (pos, &b) in elems.iter().enumerate() {
            let mut tuple = elems.clone();
            tuple[pos] = e;
            out.set_sign(b, -(chi_b * self.chi_tuple(&tuple)));
        }
        Ok(out)
    }

    /// All signed circuits, one canonical representative per antipodal
    /// pair (minimum support element positive), sorted by support.
    pub fn circuits(&self) -> Vec<SignedSet> {
        let bases = self.bases();
        let mut set = BTreeSet::new();
        for &b in &bases {
            for e in 0..self.ground.n {
                if !b.contains(e) {
                    let c = self.fundamental_circuit(b, e).expect("basis and e not in it");
                    set.insert(c.canonical());
                }
            }
        }
        sorted_by_support(set)
    }

    /// All signed cocircuits, canonical representatives, sorted by support.
    pub fn cocircuits(&self) -> Vec<SignedSet> {
        let bases = self.bases();
        let mut set = BTreeSet::new();
        for &basis in &bases {
            for b in basis.iter() {
                let y = self
                    .fundamental_cocircuit(basis, b)
                    .expect("basis and member");
                set.insert(y.canonical());
            }
        }
        sorted_by_support(set)
    }

    /// No positive circuit.
    pub fn is_acyclic(&self) -> bool {
        !self
            .circuits()
            .iter()
            .any(|c| c.is_positive() || c.negated().is_positive())
    }

    /// No positive cocircuit.
    pub fn is_totally_cyclic(&self) -> bool {
        !self
            .cocircuits()
            .iter()
            .any(|y| y.is_positive() || y.negated().is_positive())
    }

    /// The dual chirotope of rank `n - r`:
    /// `chi*(T) = chi(E \ T) * sign(E \ T, T)` where the sign is the parity
    /// of the permutation listing `E \ T` then `T`, each ascending.
    ///
    /// With this convention `dual(dual(M))` equals `M` times the global
    /// sign `(-1)^(r(n-r))`; signed circuits and cocircuits are unaffected
    /// by the global sign and swap exactly.
    pub fn dual(&self) -> Chirotope {
        let n = self.ground.n;
        let r_star = n - self.rank;
        let mut signs = Vec::with_capacity(binomial(n, r_star) as usize);
        for t in k_subsets(n, r_star) {
            let t_set = Subset::from_elems(&t);
            let comp = t_set.complement(n).elems();
            let base = self.chi_sorted(&comp);
            // inversions between the comp block and the t block
            let mut inv = 0usize;
            for &a in &comp {
                inv += t.iter().filter(|&&x| x < a).count();
            }
            signs.push(if inv % 2 == 1 { -base } else { base });
        }
        Chirotope {
            ground: self.ground.clone(),
            rank: r_star,
            signs,
        }
    }

    /// Deletes the elements of `s`. The remaining elements are reindexed in
    /// ascending order. If no basis avoids `s` the rank drops: the new rank
    /// is the matroid rank of the kept set and signs are evaluated against
    /// a fixed independent completion chosen greedily from `s`.
    pub fn delete(&self, s: Subset) -> Chirotope {
        let keep: Vec<usize> = (0..self.ground.n).filter(|&e| !s.contains(e)).collect();
        let keep_set = Subset::from_elems(&keep);
        let new_rank = self.rank_of(keep_set);
        let mut completion: Vec<usize> = Vec::new();
        if new_rank < self.rank {
            let mut have = new_rank;
            for e in s.iter() {
                let mut cand = keep_set;
                for &z in &completion {
                    cand = cand.with(z);
                }
                if self.rank_of(cand.with(e)) > have {
                    completion.push(e);
                    have += 1;
                }
            }
            debug_assert_eq!(have, self.rank);
        }
        let ground = GroundSet::new(keep.len()).expect("smaller ground");
        Chirotope::from_fn(ground, new_rank, |t| {
            let mut tuple: Vec<usize> = t.iter().map(|&i| keep[i]).collect();
            tuple.extend_from_slice(&completion);
            self.chi_tuple(&tuple)
        })
        .expect("deletion minor is a chirotope")
    }

    /// Contracts the elements of `s`, one at a time in ascending order.
    /// Contracting a non-loop `g` drops the rank by one with
    /// `chi/g(y_1..y_{r-1}) = chi(g, y_1..y_{r-1})`; contracting a loop is
    /// deletion of it.
    pub fn contract(&self, s: Subset) -> Chirotope {
        let mut cur = self.clone();
        let mut removed_below = vec![0usize; self.ground.n];
        for e in s.iter() {
            let cur_index = e - removed_below[e];
            cur = if cur.is_loop(cur_index) {
                cur.delete(Subset::singleton(cur_index))
            } else {
                cur.contract_one(cur_index)
            };
            for count in removed_below.iter_mut().skip(e + 1) {
                *count += 1;
            }
        }
        cur
    }

    fn contract_one(&self, g: usize) -> Chirotope {
        debug_assert!(!self.is_loop(g));
        let keep: Vec<usize> = (0..self.ground.n).filter(|&e| e != g).collect();
        let ground = GroundSet::new(keep.len()).expect("smaller ground");
        Chirotope::from_fn(ground, self.rank - 1, |t| {
            let mut tuple = Vec::with_capacity(self.rank);
            tuple.push(g);
            tuple.extend(t.iter().map(|&i| keep[i]));
            self.chi_tuple(&tuple)
        })
        .expect("contraction minor is a chirotope")
    }

    /// Relabels the ground set: `perm[new_index] = old_index`.
    pub fn relabel(&self, perm: &[usize]) -> Chirotope {
        debug_assert_eq!(perm.len(), self.ground.n);
        let ground = GroundSet::new(self.ground.n).expect("same ground");
        Chirotope::from_fn(ground, self.rank, |t| {
            let tuple: Vec<usize> = t.iter().map(|&i| perm[i]).collect();
            self.chi_tuple(&tuple)
        })
        .expect("relabeling preserves chirotopes")
    }

    pub fn reorient(&self, flipped: Subset) -> Reorientation {
        Reorientation {
            base: self.clone(),
            flipped,
        }
    }

    /// Opt-in axiom validation at desk scale: basis exchange over all pairs
    /// of bases, plus orthogonality of every derived circuit/cocircuit pair.
    pub fn validate(&self) -> Result<()> {
        let bases = self.bases();
        for &b1 in &bases {
            for &b2 in &bases {
                for b in (b1 - b2).iter() {
                    let ok = (b2 - b1)
                        .iter()
                        .any(|e| !self.chi_subset(b1.without(b).with(e)).is_zero());
                    if !ok {
                        return Err(OmError::BasisExchange {
                            b1: b1.elems(),
                            b2: b2.elems(),
                            pivot: b,
                        });
                    }
                }
            }
        }
        for c in self.circuits() {
            for y in self.cocircuits() {
                if !orthogonal(&c, &y) {
                    return Err(OmError::OrthogonalityViolation {
                        circuit: c,
                        cocircuit: y,
                    });
                }
            }
        }
        Ok(())
    }
}

fn sorted_by_support(set: BTreeSet<SignedSet>) -> Vec<SignedSet> {
    let mut out: Vec<SignedSet> = set.into_iter().collect();
    out.sort_by_key(|s| (s.support().elems(), s.signs().to_vec()));
    out
}

/// Sign vectors are orthogonal when their supports are disjoint or carry
/// both a sign agreement and a sign disagreement on the intersection.
pub fn orthogonal(a: &SignedSet, b: &SignedSet) -> bool {
    let inter = a.support() & b.support();
    if inter.is_empty() {
        return true;
    }
    let mut agree = false;
    let mut disagree = false;
    for e in inter.iter() {
        if a.sign(e) == b.sign(e) {
            agree = true;
        } else {
            disagree = true;
        }
    }
    agree && disagree
}

/// The reorientation `-_A M`: evaluation on an `r`-subset `T` is
/// `chi(T) * (-1)^|T ∩ A|`, and circuits/cocircuits are those of the base
/// with signs negated on `A`.
#[derive(Clone, Debug)]
pub struct Reorientation {
    base: Chirotope,
    flipped: Subset,
}

impl Reorientation {
    pub fn new(base: Chirotope, flipped: Subset) -> Self {
        Reorientation { base, flipped }
    }

    pub fn base(&self) -> &Chirotope {
        &self.base
    }

    pub fn flipped(&self) -> Subset {
        self.flipped
    }

    pub fn chi_subset(&self, s: Subset) -> Sign {
        let sign = self.base.chi_subset(s);
        if (s & self.flipped).len() % 2 == 1 {
            -sign
        } else {
            sign
        }
    }

    /// The reoriented chirotope as a plain dense chirotope.
    pub fn materialize(&self) -> Chirotope {
        let ground = self.base.ground.clone();
        Chirotope::from_fn(ground, self.base.rank, |t| {
            self.chi_subset(Subset::from_elems(t))
        })
        .expect("reorientation preserves chirotopes")
    }

    pub fn bases(&self) -> Vec<Subset> {
        self.base.bases()
    }

    pub fn is_basis(&self, s: Subset) -> bool {
        self.base.is_basis(s)
    }

    /// `C*(B; b)` in the reoriented signs, normalized `b`-positive.
    pub fn fundamental_cocircuit(&self, basis: Subset, b: usize) -> Result<SignedSet> {
        let y = self
            .base
            .fundamental_cocircuit(basis, b)?
            .reoriented(self.flipped);
        Ok(if y.sign(b).is_negative() { y.negated() } else { y })
    }

    /// `C(B; e)` in the reoriented signs, normalized `e`-positive.
    pub fn fundamental_circuit(&self, basis: Subset, e: usize) -> Result<SignedSet> {
        let c = self
            .base
            .fundamental_circuit(basis, e)?
            .reoriented(self.flipped);
        Ok(if c.sign(e).is_negative() { c.negated() } else { c })
    }

    pub fn circuits(&self) -> Vec<SignedSet> {
        let mut set: BTreeSet<SignedSet> = BTreeSet::new();
        for c in self.base.circuits() {
            set.insert(c.reoriented(self.flipped).canonical());
        }
        sorted_by_support(set)
    }

    pub fn cocircuits(&self) -> Vec<SignedSet> {
        let mut set: BTreeSet<SignedSet> = BTreeSet::new();
        for y in self.base.cocircuits() {
            set.insert(y.reoriented(self.flipped).canonical());
        }
        sorted_by_support(set)
    }

    pub fn is_acyclic(&self) -> bool {
        !self.base.circuits().iter().any(|c| {
            let d = c.reoriented(self.flipped);
            d.is_positive() || d.negated().is_positive()
        })
    }

    pub fn is_totally_cyclic(&self) -> bool {
        !self.base.cocircuits().iter().any(|y| {
            let d = y.reoriented(self.flipped);
            d.is_positive() || d.negated().is_positive()
        })
    }
}
