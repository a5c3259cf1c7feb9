//! Generic single-element extensions and liftings as first-class
//! signatures, and their compliant composition into an extension-lifting
//! on `E ∪ {f, g}`.
//!
//! An extension signature assigns a nonzero, antisymmetric sign to every
//! signed cocircuit; a lifting signature does the same on circuits. The
//! extension of a chirotope is built directly from its signature; the
//! lifting goes through duality. The composed extension-lifting carries
//! `g` at internal index 0 and `f` at index 1, so the element order is
//! `g < f < E`.

use std::collections::BTreeMap;

use crate::chirotope::{Chirotope, GroundSet};
use crate::error::{OmError, Result, SignedKind};
use crate::sign::{Sign, SignedSet};
use crate::subset::Subset;

/// A total antisymmetric sign map on a canonical family of signed sets.
/// Values are stored on canonical representatives only; the value on a
/// negated set is the negated value.
#[derive(Clone, Debug, PartialEq, Eq)]
struct SignatureMap {
    kind: SignedKind,
    values: BTreeMap<SignedSet, Sign>,
}

impl SignatureMap {
    fn new(
        kind: SignedKind,
        family: Vec<SignedSet>,
        pairs: Vec<(SignedSet, Sign)>,
    ) -> Result<Self> {
        let mut values: BTreeMap<SignedSet, Sign> = BTreeMap::new();
        for (set, value) in pairs {
            if value.is_zero() {
                return Err(OmError::SignatureInconsistent {
                    kind,
                    witness: set,
                });
            }
            let canonical = set.canonical();
            let value = if canonical == set { value } else { -value };
            if let Some(&prev) = values.get(&canonical) {
                if prev != value {
                    return Err(OmError::SignatureInconsistent {
                        kind,
                        witness: canonical,
                    });
                }
            } else {
                values.insert(canonical, value);
            }
        }
        for member in &family {
            if !values.contains_key(member) {
                return Err(OmError::SignatureIncomplete {
                    kind,
                    missing: member.clone(),
                });
            }
        }
        if values.len() != family.len() {
            let stray = values
                .keys()
                .find(|k| !family.contains(k))
                .expect("size mismatch implies a stray key")
                .clone();
            return Err(OmError::UnknownSignedSet {
                kind,
                witness: stray,
            });
        }
        Ok(SignatureMap { kind, values })
    }

    fn value(&self, set: &SignedSet) -> Result<Sign> {
        let canonical = set.canonical();
        let flipped = &canonical != set;
        match self.values.get(&canonical) {
            Some(&v) => Ok(if flipped { -v } else { v }),
            None => Err(OmError::UnknownSignedSet {
                kind: self.kind,
                witness: set.clone(),
            }),
        }
    }

    fn pairs(&self) -> Vec<(SignedSet, Sign)> {
        self.values.iter().map(|(k, &v)| (k.clone(), v)).collect()
    }
}

/// The signature of a generic single-element extension: a total
/// antisymmetric sign map on the signed cocircuits of the base. A `+`
/// value on `Y` means the extended cocircuit `Y ∪ f` has `f` positive.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtensionSignature {
    base: Chirotope,
    map: SignatureMap,
}

impl ExtensionSignature {
    pub fn new(base: Chirotope, pairs: Vec<(SignedSet, Sign)>) -> Result<Self> {
        let map = SignatureMap::new(SignedKind::Cocircuit, base.cocircuits(), pairs)?;
        Ok(ExtensionSignature { base, map })
    }

    pub fn base(&self) -> &Chirotope {
        &self.base
    }

    pub fn value(&self, cocircuit: &SignedSet) -> Result<Sign> {
        self.map.value(cocircuit)
    }

    /// Canonical cocircuits with their values.
    pub fn pairs(&self) -> Vec<(SignedSet, Sign)> {
        self.map.pairs()
    }
}

/// The signature of a generic single-element lifting: a total antisymmetric
/// sign map on the signed circuits of the base. A `+` value on `C` means
/// the lifted circuit `C ∪ g` has `g` positive.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LiftingSignature {
    base: Chirotope,
    map: SignatureMap,
}

impl LiftingSignature {
    pub fn new(base: Chirotope, pairs: Vec<(SignedSet, Sign)>) -> Result<Self> {
        let map = SignatureMap::new(SignedKind::Circuit, base.circuits(), pairs)?;
        Ok(LiftingSignature { base, map })
    }

    pub fn base(&self) -> &Chirotope {
        &self.base
    }

    pub fn value(&self, circuit: &SignedSet) -> Result<Sign> {
        self.map.value(circuit)
    }

    pub fn pairs(&self) -> Vec<(SignedSet, Sign)> {
        self.map.pairs()
    }
}

/// Extends `m` by a new element `f`, appended as the last ground element.
///
/// For a spanning `(r-1)`-tuple `t`, the new signs are
/// `chi'(t, f) = sig(Y)` where `Y(e) = chi(t, e)` is the cocircuit
/// vanishing on the closure of `t`; dependent tuples give zero and the
/// restriction to the old ground set is `m` sign-for-sign.
pub fn extend(m: &Chirotope, sig: &ExtensionSignature) -> Result<Chirotope> {
    if sig.base() != m {
        return Err(OmError::InvariantViolation(
            "extension signature belongs to a different chirotope".into(),
        ));
    }
    let n = m.n();
    let r = m.rank();
    let f = n;
    let ground = GroundSet::new(n + 1)?;
    let mut failure = None;
    let result = Chirotope::from_fn(ground, r, |subset| {
        if subset.last() != Some(&f) {
            return m.chi_subset(Subset::from_elems(subset));
        }
        let rest = &subset[..r - 1];
        let mut y = SignedSet::zero(n);
        let mut tuple = rest.to_vec();
        tuple.push(0);
        for e in 0..n {
            tuple[r - 1] = e;
            y.set_sign(e, m.chi_tuple(&tuple));
        }
        if y.is_zero() {
            return Sign::Zero;
        }
        match sig.value(&y) {
            Ok(v) => v,
            Err(e) => {
                failure.get_or_insert(e);
                Sign::Zero
            }
        }
    })?;
    match failure {
        Some(e) => Err(e),
        None => Ok(result),
    }
}

/// Lifts `m` by a new element `g`, appended as the last ground element,
/// via duality: the lifting is the dual of the extension of the dual by
/// the same signature read as a localization. The global sign is fixed so
/// that contracting `g` recovers `m` sign-for-sign.
pub fn lift(m: &Chirotope, sig: &LiftingSignature) -> Result<Chirotope> {
    if sig.base() != m {
        return Err(OmError::InvariantViolation(
            "lifting signature belongs to a different chirotope".into(),
        ));
    }
    let dual = m.dual();
    // Signed circuits of m are exactly the signed cocircuits of the dual,
    // with the same canonical representatives; the constructor verifies.
    let as_localization = ExtensionSignature::new(dual.clone(), sig.pairs())?;
    let extended_dual = extend(&dual, &as_localization)?;
    let lifted = extended_dual.dual();
    let g = m.n();
    let recovered = lifted.contract(Subset::singleton(g));
    if recovered == *m {
        Ok(lifted)
    } else if recovered == m.negated() {
        Ok(lifted.negated())
    } else {
        Err(OmError::InvariantViolation(
            "contracting g does not recover the base of the lifting".into(),
        ))
    }
}

/// True iff every circuit of `n` containing `f` is spanning (support size
/// `rank + 1`), i.e. the extension by `f` is generic.
pub fn is_generic_extension(n: &Chirotope, f: usize) -> bool {
    n.circuits()
        .iter()
        .filter(|c| c.support().contains(f))
        .all(|c| c.support().len() == n.rank() + 1)
}

/// True iff the supports of cocircuits of `n` containing `g` are exactly
/// the sets `(E \ B) ∪ g` over bases `B` of `n / g`.
pub fn is_generic_lifting(n: &Chirotope, g: usize) -> bool {
    if n.is_loop(g) || n.is_coloop(g) {
        return false;
    }
    let contracted = n.contract(Subset::singleton(g));
    // map the contraction's ground back into n's ground
    let kept: Vec<usize> = (0..n.n()).filter(|&e| e != g).collect();
    let expected: std::collections::BTreeSet<Subset> = contracted
        .bases()
        .iter()
        .map(|b| {
            let mut s = Subset::singleton(g);
            for (new, &old) in kept.iter().enumerate() {
                if !b.contains(new) {
                    s = s.with(old);
                }
            }
            s
        })
        .collect();
    let actual: std::collections::BTreeSet<Subset> = n
        .cocircuits()
        .iter()
        .map(|y| y.support())
        .filter(|s| s.contains(g))
        .collect();
    expected == actual
}

/// A generic extension-lifting `Mbar` on `E ∪ {f, g}` with the fixed
/// internal order `g < f < E`: `g` is element 0 and `f` is element 1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtensionLifting {
    om: Chirotope,
}

impl ExtensionLifting {
    pub const G: usize = 0;
    pub const F: usize = 1;

    /// Wraps a chirotope with `g, f` at indices 0, 1; validates that `f`
    /// and `g` are neither loops nor coloops, that the extension by `f` is
    /// generic, and that the lifting by `g` is generic.
    pub fn new(om: Chirotope) -> Result<Self> {
        if om.n() < 2 {
            return Err(OmError::NotAnExtensionLifting(
                "the ground set needs at least g and f".into(),
            ));
        }
        for (e, name) in [(Self::G, "g"), (Self::F, "f")] {
            if om.is_loop(e) || om.is_coloop(e) {
                return Err(OmError::NotAnExtensionLifting(format!(
                    "{name} is a loop or coloop"
                )));
            }
        }
        if !is_generic_extension(&om, Self::F) {
            return Err(OmError::NotAnExtensionLifting(
                "the extension by f is not generic".into(),
            ));
        }
        if !is_generic_lifting(&om, Self::G) {
            return Err(OmError::NotAnExtensionLifting(
                "the lifting by g is not generic".into(),
            ));
        }
        Ok(ExtensionLifting { om })
    }

    pub fn om(&self) -> &Chirotope {
        &self.om
    }

    /// Number of elements of the underlying `M`.
    pub fn base_n(&self) -> usize {
        self.om.n() - 2
    }

    /// `Mbar / g \ f`, the underlying oriented matroid `M`.
    pub fn minor(&self) -> Chirotope {
        self.om
            .contract(Subset::singleton(Self::G))
            .delete(Subset::singleton(0)) // f sits at index 0 after contracting g
    }

    /// `Mbar \ f`: the generic lifting of `M`, on ground `g=0, E=1..`.
    pub fn lifting_part(&self) -> Chirotope {
        self.om.delete(Subset::singleton(Self::F))
    }

    /// `Mbar / g`: the generic extension of `M`, on ground `f=0, E=1..`.
    pub fn extension_part(&self) -> Chirotope {
        self.om.contract(Subset::singleton(Self::G))
    }

    /// Maps a subset of `E` (in `M`'s indexing) into `Mbar`'s ground.
    pub fn subset_to_om(&self, a: Subset) -> Subset {
        Subset::from_bits(a.bits() << 2)
    }

    /// Maps a subset of `Mbar`'s ground avoiding `f, g` back to `M`'s.
    pub fn subset_from_om(&self, a: Subset) -> Subset {
        debug_assert!(!a.contains(Self::F) && !a.contains(Self::G));
        Subset::from_bits(a.bits() >> 2)
    }
}

/// Composes a compliant extension-lifting from the two signatures: builds
/// the lifting `N = lift(M, sigma)` and extends it by `f` with the
/// composite localization that follows the sign of `g` where it is
/// nonzero and `sigma*` on the cocircuits vanishing on `g`. The result is
/// certified: its minor is `M` sign-for-sign, both genericity predicates
/// hold, and it is compliant.
pub fn compose_compliant(
    m: &Chirotope,
    sigstar: &ExtensionSignature,
    sigma: &LiftingSignature,
) -> Result<ExtensionLifting> {
    let n = m.n();
    if n == 0 {
        return Err(OmError::EmptyGround);
    }
    let lifted = lift(m, sigma)?; // ground 0..n, g = n, rank r+1
    let g = n;
    let mut pairs = Vec::new();
    for y in lifted.cocircuits() {
        let value = if !y.sign(g).is_zero() {
            y.sign(g)
        } else {
            // Y vanishes on g, so its restriction is a cocircuit of M.
            sigstar.value(&y.restricted(Subset::full(n)))?
        };
        pairs.push((y, value));
    }
    let composite = ExtensionSignature::new(lifted.clone(), pairs)?;
    let big = extend(&lifted, &composite)?; // ground 0..n+1, g = n, f = n+1
    // reorder to g, f, E
    let mut perm = Vec::with_capacity(n + 2);
    perm.push(g);
    perm.push(n + 1);
    perm.extend(0..n);
    let om = big.relabel(&perm);
    let extlift = ExtensionLifting::new(om)?;
    if extlift.minor() != *m {
        return Err(OmError::InvariantViolation(
            "composed extension-lifting does not restrict to M".into(),
        ));
    }
    if !is_compliant(&extlift) {
        return Err(OmError::InvariantViolation(
            "composed extension-lifting is not compliant".into(),
        ));
    }
    Ok(extlift)
}

/// True iff no cocircuit has `g` positive and `f` negative. The cocircuit
/// family is closed under negation, so this is equivalent to: no cocircuit
/// carries opposite nonzero signs on `f` and `g`.
pub fn is_compliant(mbar: &ExtensionLifting) -> bool {
    !mbar.om.cocircuits().iter().any(|y| {
        y.sign(ExtensionLifting::G).as_i8() * y.sign(ExtensionLifting::F).as_i8() == -1
    })
}

/// Recovers the two signatures from an extension-lifting: the
/// `sigma*`-value on a cocircuit of `M` is the sign of `f` in the unique
/// cocircuit of `Mbar / g` extending it, and the `sigma`-value on a
/// circuit of `M` is the sign of `g` in the unique circuit of `Mbar \ f`
/// extending it.
pub fn signatures_of(mbar: &ExtensionLifting) -> Result<(ExtensionSignature, LiftingSignature)> {
    let m = mbar.minor();
    let n = m.n();

    // In both minors the distinguished element lands at index 0 and the
    // elements of E at 1..=n.
    let rest = Subset::full(n + 1).without(0);

    let extension = mbar.extension_part(); // f = 0
    let mut ext_pairs = Vec::new();
    for y in m.cocircuits() {
        let mut value = None;
        for z in extension.cocircuits() {
            for cand in [z.clone(), z.negated()] {
                if cand.restricted(rest) == y && value.replace(cand.sign(0)).is_some() {
                    return Err(OmError::InvariantViolation(format!(
                        "cocircuit {y} extends ambiguously"
                    )));
                }
            }
        }
        let Some(value) = value else {
            return Err(OmError::InvariantViolation(format!(
                "cocircuit {y} has no extension in Mbar/g"
            )));
        };
        if value.is_zero() {
            return Err(OmError::NotGeneric {
                kind: SignedKind::Cocircuit,
                witness: y,
            });
        }
        ext_pairs.push((y, value));
    }

    let lifting = mbar.lifting_part(); // g = 0
    let mut lift_pairs = Vec::new();
    for c in m.circuits() {
        let mut value = None;
        for z in lifting.circuits() {
            for cand in [z.clone(), z.negated()] {
                if cand.restricted(rest) == c && value.replace(cand.sign(0)).is_some() {
                    return Err(OmError::InvariantViolation(format!(
                        "circuit {c} lifts ambiguously"
                    )));
                }
            }
        }
        let Some(value) = value else {
            return Err(OmError::InvariantViolation(format!(
                "circuit {c} has no lift in Mbar\\f"
            )));
        };
        if value.is_zero() {
            return Err(OmError::NotGeneric {
                kind: SignedKind::Circuit,
                witness: c,
            });
        }
        lift_pairs.push((c, value));
    }

    Ok((
        ExtensionSignature::new(m.clone(), ext_pairs)?,
        LiftingSignature::new(m, lift_pairs)?,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::realizable::{
        chirotope_from_matrix, lifting_from_heights, localization_from_vector, GenericVector,
        HeightVector, RealizationMatrix,
    };
    use crate::sign::Sign::*;

    fn m4_matrix() -> RealizationMatrix {
        RealizationMatrix::from_rows(2, &[vec![1, 2, 0, 0], vec![0, 0, 1, 2]]).unwrap()
    }

    fn u23_matrix() -> RealizationMatrix {
        RealizationMatrix::from_rows(2, &[vec![1, 0, 1], vec![0, 1, 1]]).unwrap()
    }

    fn m4_pipeline() -> (Chirotope, ExtensionSignature, LiftingSignature) {
        let a = m4_matrix();
        let m = chirotope_from_matrix(&a).unwrap();
        let sigstar =
            localization_from_vector(&a, &GenericVector::from_i64(&[1, 1])).unwrap();
        let sigma = lifting_from_heights(&a, &HeightVector::from_i64(&[0, 1, 0, 1])).unwrap();
        (m, sigstar, sigma)
    }

    #[test]
    fn extension_matches_the_realized_extension() {
        // extend(U23, sig from v) must equal the chirotope of the matrix
        // with v appended as a new column.
        let a = u23_matrix();
        let m = chirotope_from_matrix(&a).unwrap();
        let sig = localization_from_vector(&a, &GenericVector::from_i64(&[1, 2])).unwrap();
        let extended = extend(&m, &sig).unwrap();

        let with_f =
            RealizationMatrix::from_rows(2, &[vec![1, 0, 1, 1], vec![0, 1, 1, 2]]).unwrap();
        assert_eq!(extended, chirotope_from_matrix(&with_f).unwrap());
        // frozen signs over pairs of {1,2,3,f}: 12 13 1f 23 2f 3f
        assert_eq!(extended.signs(), &[Plus, Plus, Plus, Minus, Minus, Plus]);
        // restriction to E is M sign-for-sign
        assert_eq!(extended.delete(Subset::singleton(3)), m);
        assert!(is_generic_extension(&extended, 3));
    }

    #[test]
    fn extension_matches_realization_on_m4() {
        let a = m4_matrix();
        let m = chirotope_from_matrix(&a).unwrap();
        let sig = localization_from_vector(&a, &GenericVector::from_i64(&[1, 1])).unwrap();
        let extended = extend(&m, &sig).unwrap();
        let with_f = RealizationMatrix::from_rows(
            2,
            &[vec![1, 2, 0, 0, 1], vec![0, 0, 1, 2, 1]],
        )
        .unwrap();
        assert_eq!(extended, chirotope_from_matrix(&with_f).unwrap());
    }

    #[test]
    fn lifting_matches_the_realized_lifting() {
        let a = m4_matrix();
        let m = chirotope_from_matrix(&a).unwrap();
        let sigma = lifting_from_heights(&a, &HeightVector::from_i64(&[0, 1, 0, 1])).unwrap();
        let lifted = lift(&m, &sigma).unwrap();
        assert_eq!(lifted.rank(), 3);
        assert_eq!(lifted.n(), 5);
        assert_eq!(lifted.contract(Subset::singleton(4)), m);
        assert!(is_generic_lifting(&lifted, 4));

        // realized lifting: heights in the first row, g = (1; 0, 0) last
        let realized = RealizationMatrix::from_rows(
            3,
            &[
                vec![0, 1, 0, 1, 1],
                vec![1, 2, 0, 0, 0],
                vec![0, 0, 1, 2, 0],
            ],
        )
        .unwrap();
        assert_eq!(lifted, chirotope_from_matrix(&realized).unwrap());
    }

    #[test]
    fn lifted_cocircuit_supports_are_basis_complements() {
        let (m, _, sigma) = m4_pipeline();
        let lifted = lift(&m, &sigma).unwrap();
        let g = 4;
        let with_g: Vec<Subset> = lifted
            .cocircuits()
            .iter()
            .map(|y| y.support())
            .filter(|s| s.contains(g))
            .collect();
        let expected: Vec<Subset> = m
            .bases()
            .iter()
            .map(|b| b.complement(4).with(g))
            .collect();
        let mut got = with_g.clone();
        got.sort();
        let mut want = expected.clone();
        want.sort();
        assert_eq!(got, want);
    }

    #[test]
    fn lifted_circuits_carry_the_signature_signs() {
        let (m, _, sigma) = m4_pipeline();
        let lifted = lift(&m, &sigma).unwrap();
        let g = 4;
        let e_part = Subset::full(4);
        for c in m.circuits() {
            let mut found = false;
            for z in lifted.circuits() {
                for cand in [z.clone(), z.negated()] {
                    if cand.restricted(e_part) == c {
                        assert_eq!(cand.sign(g), sigma.value(&c).unwrap());
                        found = true;
                    }
                }
            }
            assert!(found, "no lifted circuit extends {c}");
        }
    }

    #[test]
    fn compose_compliant_m4() {
        let (m, sigstar, sigma) = m4_pipeline();
        let mbar = compose_compliant(&m, &sigstar, &sigma).unwrap();
        assert_eq!(mbar.om().n(), 6);
        assert_eq!(mbar.om().rank(), 3);
        assert_eq!(mbar.minor(), m);
        assert!(is_compliant(&mbar));
        // every cocircuit with g positive has f nonnegative
        for y in mbar.om().cocircuits() {
            for cand in [y.clone(), y.negated()] {
                if cand.sign(ExtensionLifting::G) == Plus {
                    assert_ne!(cand.sign(ExtensionLifting::F), Minus);
                }
            }
        }
    }

    #[test]
    fn signatures_round_trip() {
        let (m, sigstar, sigma) = m4_pipeline();
        let mbar = compose_compliant(&m, &sigstar, &sigma).unwrap();
        let (rec_star, rec_sigma) = signatures_of(&mbar).unwrap();
        assert_eq!(rec_star.pairs(), sigstar.pairs());
        assert_eq!(rec_sigma.pairs(), sigma.pairs());
    }

    #[test]
    fn diagram_commutes() {
        let (m, sigstar, sigma) = m4_pipeline();
        let mbar = compose_compliant(&m, &sigstar, &sigma).unwrap();
        let a = mbar
            .om()
            .contract(Subset::singleton(0))
            .delete(Subset::singleton(0));
        let b = mbar
            .om()
            .delete(Subset::singleton(1))
            .contract(Subset::singleton(0));
        assert_eq!(a, m);
        assert_eq!(b, m);
    }

    #[test]
    fn signature_constructor_rejects_bad_data() {
        let m = chirotope_from_matrix(&m4_matrix()).unwrap();
        let y1 = SignedSet::from_parts(4, &[0, 1], &[]);
        let y2 = SignedSet::from_parts(4, &[2, 3], &[]);
        // missing a cocircuit
        assert!(matches!(
            ExtensionSignature::new(m.clone(), vec![(y1.clone(), Plus)]),
            Err(OmError::SignatureIncomplete { .. })
        ));
        // antisymmetry violation: Y and -Y both positive
        assert!(matches!(
            ExtensionSignature::new(
                m.clone(),
                vec![
                    (y1.clone(), Plus),
                    (y1.negated(), Plus),
                    (y2.clone(), Plus)
                ]
            ),
            Err(OmError::SignatureInconsistent { .. })
        ));
        // zero value
        assert!(matches!(
            ExtensionSignature::new(m.clone(), vec![(y1.clone(), Zero), (y2.clone(), Plus)]),
            Err(OmError::SignatureInconsistent { .. })
        ));
        // not a cocircuit
        assert!(matches!(
            ExtensionSignature::new(
                m,
                vec![
                    (y1, Plus),
                    (y2, Plus),
                    (SignedSet::from_parts(4, &[0, 2], &[]), Plus)
                ]
            ),
            Err(OmError::UnknownSignedSet { .. })
        ));
    }

    #[test]
    fn degenerate_heights_break_the_lifting_on_the_matrix_side() {
        // h = (1, 2, 0, 0) annihilates the circuit +1 -2; the lifted
        // matrix then has a non-generic g.
        let lifted = RealizationMatrix::from_rows(
            3,
            &[
                vec![1, 2, 0, 0, 1],
                vec![1, 2, 0, 0, 0],
                vec![0, 0, 1, 2, 0],
            ],
        )
        .unwrap();
        let n = chirotope_from_matrix(&lifted).unwrap();
        assert!(!is_generic_lifting(&n, 4));
    }

    #[test]
    fn rank_one_pipeline() {
        let a = RealizationMatrix::from_rows(1, &[vec![1, 1]]).unwrap();
        let m = chirotope_from_matrix(&a).unwrap();
        let sigstar = localization_from_vector(&a, &GenericVector::from_i64(&[1])).unwrap();
        let sigma = lifting_from_heights(&a, &HeightVector::from_i64(&[0, 1])).unwrap();
        let mbar = compose_compliant(&m, &sigstar, &sigma).unwrap();
        assert_eq!(mbar.om().n(), 4);
        assert_eq!(mbar.om().rank(), 2);
        assert_eq!(mbar.minor(), m);
        let (rs, rl) = signatures_of(&mbar).unwrap();
        assert_eq!(rs.pairs(), sigstar.pairs());
        assert_eq!(rl.pairs(), sigma.pairs());
    }

    #[test]
    fn generic_lifting_duality() {
        let (m, _, sigma) = m4_pipeline();
        let lifted = lift(&m, &sigma).unwrap();
        assert_eq!(
            is_generic_lifting(&lifted, 4),
            is_generic_extension(&lifted.dual(), 4)
        );
    }

    #[test]
    fn empty_ground_is_rejected() {
        let m = Chirotope::from_signs(GroundSet::new(0).unwrap(), 0, vec![Plus]).unwrap();
        let sigstar = ExtensionSignature::new(m.clone(), vec![]).unwrap();
        let sigma = LiftingSignature::new(m.clone(), vec![]).unwrap();
        assert!(matches!(
            compose_compliant(&m, &sigstar, &sigma),
            Err(OmError::EmptyGround)
        ));
    }
}
