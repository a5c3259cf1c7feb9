//! Exact integer realizations: matrices to chirotopes, vectors to extension
//! signatures, heights to lifting signatures, generic sampling, and the
//! independent linear-algebra oracle used to cross-check the chirotope path.
//!
//! All arithmetic is arbitrary-precision integer (or rational, for the
//! oracle's kernel computations). There is no floating point anywhere:
//! sign correctness is the entire semantics.

use std::collections::BTreeSet;

use num::rational::BigRational;
use num::traits::{One, Signed, Zero};
use num::BigInt;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::chirotope::{Chirotope, GroundSet};
use crate::error::{OmError, Result, SignedKind};
use crate::extlift::{is_compliant, ExtensionLifting, ExtensionSignature, LiftingSignature};
use crate::sign::{Sign, SignedSet};
use crate::subset::{k_subsets, Subset};

fn sign_of(v: &BigInt) -> Sign {
    match v.sign() {
        num::bigint::Sign::Minus => Sign::Minus,
        num::bigint::Sign::NoSign => Sign::Zero,
        num::bigint::Sign::Plus => Sign::Plus,
    }
}

fn dot(a: &[BigInt], b: &[BigInt]) -> BigInt {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// An exact integer realization: `n` columns of length `rank`, column `e`
/// realizing element `e`. Column rank is verified at construction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RealizationMatrix {
    rank: usize,
    cols: Vec<Vec<BigInt>>,
}

impl RealizationMatrix {
    pub fn new(rank: usize, cols: Vec<Vec<BigInt>>) -> Result<Self> {
        if cols.len() > crate::subset::MAX_GROUND {
            return Err(OmError::GroundTooLarge(cols.len()));
        }
        for c in &cols {
            if c.len() != rank {
                return Err(OmError::InvalidChirotope(format!(
                    "column of height {} in a rank-{rank} matrix",
                    c.len()
                )));
            }
        }
        let found = rank_of_columns(&cols, rank);
        if found != rank {
            return Err(OmError::RankDeficient {
                expected: rank,
                found,
            });
        }
        Ok(RealizationMatrix { rank, cols })
    }

    pub fn from_i64(rank: usize, cols: Vec<Vec<i64>>) -> Result<Self> {
        RealizationMatrix::new(
            rank,
            cols.into_iter()
                .map(|c| c.into_iter().map(BigInt::from).collect())
                .collect(),
        )
    }

    /// Columns given as `rank` rows of `n` entries.
    pub fn from_rows(rank: usize, rows: &[Vec<i64>]) -> Result<Self> {
        let n = rows.first().map_or(0, |r| r.len());
        let cols = (0..n)
            .map(|j| rows.iter().map(|r| BigInt::from(r[j])).collect())
            .collect();
        RealizationMatrix::new(rank, cols)
    }

    pub fn n(&self) -> usize {
        self.cols.len()
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn col(&self, e: usize) -> &[BigInt] {
        &self.cols[e]
    }
}

/// Coordinates for the new element `f` of a generic extension. Genericity
/// (no cocircuit functional vanishes here) is established by
/// [`localization_from_vector`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GenericVector {
    pub coords: Vec<BigInt>,
}

impl GenericVector {
    pub fn from_i64(coords: &[i64]) -> Self {
        GenericVector {
            coords: coords.iter().map(|&v| BigInt::from(v)).collect(),
        }
    }
}

/// Heights realizing the lifting element `g`: element `e` lifts to
/// `(h_e; a_e)`. Genericity (no circuit annihilates the heights) is
/// established by [`lifting_from_heights`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HeightVector {
    pub heights: Vec<BigInt>,
}

impl HeightVector {
    pub fn from_i64(heights: &[i64]) -> Self {
        HeightVector {
            heights: heights.iter().map(|&v| BigInt::from(v)).collect(),
        }
    }
}

/// Sign of each lex-ordered `r`-subset as the exact determinant sign.
pub fn chirotope_from_matrix(a: &RealizationMatrix) -> Result<Chirotope> {
    let ground = GroundSet::new(a.n())?;
    Chirotope::from_fn(ground, a.rank, |subset| {
        let mat: Vec<&[BigInt]> = subset.iter().map(|&e| a.col(e)).collect();
        sign_of(&det_cols(&mat))
    })
}

/// The extension signature of the generic extension placing `f` at `v`:
/// the value on a signed cocircuit `Y` with functional `c` (oriented so
/// `sign(c . a_e) = Y(e)`) is `sign(c . v)`.
pub fn localization_from_vector(
    a: &RealizationMatrix,
    v: &GenericVector,
) -> Result<ExtensionSignature> {
    let m = chirotope_from_matrix(a)?;
    let mut pairs = Vec::new();
    for y in m.cocircuits() {
        let c = functional_for_cocircuit(a, &y)?;
        let value = sign_of(&dot(&c, &v.coords));
        if value.is_zero() {
            return Err(OmError::NotGeneric {
                kind: SignedKind::Cocircuit,
                witness: y,
            });
        }
        pairs.push((y, value));
    }
    ExtensionSignature::new(m, pairs)
}

/// The lifting signature of the generic lifting with heights `h`: the
/// lifted dependency of a circuit with coefficients `u` acquires
/// `u_g = -sum(u_e h_e)`, and the value on the signed circuit is the sign
/// of that coefficient.
pub fn lifting_from_heights(a: &RealizationMatrix, h: &HeightVector) -> Result<LiftingSignature> {
    if h.heights.len() != a.n() {
        return Err(OmError::InvalidChirotope(format!(
            "{} heights for {} elements",
            h.heights.len(),
            a.n()
        )));
    }
    let m = chirotope_from_matrix(a)?;
    let mut pairs = Vec::new();
    for c in m.circuits() {
        let u = circuit_coefficients(a, &c)?;
        let s: BigInt = c.support().iter().map(|e| &u[e] * &h.heights[e]).sum();
        let value = sign_of(&(-s));
        if value.is_zero() {
            return Err(OmError::NotGeneric {
                kind: SignedKind::Circuit,
                witness: c,
            });
        }
        pairs.push((c, value));
    }
    LiftingSignature::new(m, pairs)
}

/// Integer coefficient vector (indexed by the ground set) of the dependency
/// on the circuit's support, oriented to match the circuit's signs.
pub fn circuit_coefficients(a: &RealizationMatrix, circuit: &SignedSet) -> Result<Vec<BigInt>> {
    let support = circuit.support().elems();
    let cols: Vec<&[BigInt]> = support.iter().map(|&e| a.col(e)).collect();
    let u = kernel_vector(&cols, a.rank).ok_or_else(|| {
        OmError::InvariantViolation(format!("support of {circuit} is not a circuit of the matrix"))
    })?;
    let mut full = vec![BigInt::zero(); a.n()];
    for (i, &e) in support.iter().enumerate() {
        full[e] = u[i].clone();
    }
    let matches = support.iter().all(|&e| sign_of(&full[e]) == circuit.sign(e));
    let opposite = support
        .iter()
        .all(|&e| sign_of(&full[e]) == -circuit.sign(e));
    if matches {
        Ok(full)
    } else if opposite {
        Ok(full.into_iter().map(|v| -v).collect())
    } else {
        Err(OmError::InvariantViolation(format!(
            "kernel vector does not match the signs of circuit {circuit}"
        )))
    }
}

/// Integer functional vanishing exactly on the cocircuit's zero set,
/// oriented so `sign(c . a_e) = Y(e)` for every element.
pub fn functional_for_cocircuit(a: &RealizationMatrix, y: &SignedSet) -> Result<Vec<BigInt>> {
    let zero_set = y.support().complement(a.n()).elems();
    for s in k_subsets(zero_set.len(), a.rank.saturating_sub(1)) {
        let cols: Vec<&[BigInt]> = s.iter().map(|&i| a.col(zero_set[i])).collect();
        let c = cofactor_functional(&cols, a.rank);
        if c.iter().all(|x| x.is_zero()) {
            continue;
        }
        // orient by the first support element, then verify all signs
        let e0 = y.support().min().expect("cocircuits are nonempty");
        let c = if sign_of(&dot(&c, a.col(e0))) == y.sign(e0) {
            c
        } else {
            c.into_iter().map(|v| -v).collect()
        };
        let ok = (0..a.n()).all(|e| sign_of(&dot(&c, a.col(e))) == y.sign(e));
        if !ok {
            return Err(OmError::InvariantViolation(format!(
                "functional does not reproduce cocircuit {y}"
            )));
        }
        return Ok(c);
    }
    Err(OmError::InvariantViolation(format!(
        "no spanning subset found for cocircuit {y}"
    )))
}

/// Deterministic rejection sampling of a generic extension vector:
/// integer coordinates in `[-K, K]`, doubling `K` on failure.
pub fn sample_generic_vector(a: &RealizationMatrix, seed: u64) -> GenericVector {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    sample_vector_with(a, &mut rng)
}

pub fn sample_vector_with(a: &RealizationMatrix, rng: &mut impl Rng) -> GenericVector {
    let mut k = 8i64;
    loop {
        let v = GenericVector {
            coords: (0..a.rank)
                .map(|_| BigInt::from(rng.gen_range(-k..=k)))
                .collect(),
        };
        if localization_from_vector(a, &v).is_ok() {
            return v;
        }
        k *= 2;
    }
}

/// Deterministic rejection sampling of generic heights.
pub fn sample_generic_heights(a: &RealizationMatrix, seed: u64) -> HeightVector {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    sample_heights_with(a, &mut rng)
}

pub fn sample_heights_with(a: &RealizationMatrix, rng: &mut impl Rng) -> HeightVector {
    let mut k = 8i64;
    loop {
        let h = HeightVector {
            heights: (0..a.n())
                .map(|_| BigInt::from(rng.gen_range(-k..=k)))
                .collect(),
        };
        if lifting_from_heights(a, &h).is_ok() {
            return h;
        }
        k *= 2;
    }
}

/// A realized extension-lifting: the `(r+1) x (n+2)` matrix with columns
/// `g = (1; 0)`, `f = (t; v)`, `e = (h_e; a_e)` (the lifting coordinate is
/// the first row), its chirotope wrapped as an [`ExtensionLifting`], and
/// the chosen `f`-parameter `t`.
#[derive(Clone, Debug)]
pub struct Realized {
    pub matrix: RealizationMatrix,
    pub extlift: ExtensionLifting,
    pub t: BigInt,
}

fn build_lifted_matrix(
    a: &RealizationMatrix,
    v: &GenericVector,
    h: &HeightVector,
    t: &BigInt,
) -> Result<RealizationMatrix> {
    let rank = a.rank + 1;
    let mut cols = Vec::with_capacity(a.n() + 2);
    let mut g = vec![BigInt::zero(); rank];
    g[0] = BigInt::one();
    cols.push(g);
    let mut f = Vec::with_capacity(rank);
    f.push(t.clone());
    f.extend(v.coords.iter().cloned());
    cols.push(f);
    for e in 0..a.n() {
        let mut c = Vec::with_capacity(rank);
        c.push(h.heights[e].clone());
        c.extend(a.col(e).iter().cloned());
        cols.push(c);
    }
    RealizationMatrix::new(rank, cols)
}

/// Builds a compliant realized extension-lifting for `(v, h)` by searching
/// the `f`-parameter `t = 1, 2, 4, ...` until `f` is generic in the lifted
/// arrangement and the compliance predicate holds. Compliance is reached
/// once `t` clears the finitely many cocircuit functionals, so the
/// doubling search terminates.
pub fn realize_extension_lifting(
    a: &RealizationMatrix,
    v: &GenericVector,
    h: &HeightVector,
) -> Result<Realized> {
    // validate genericity of the inputs up front
    localization_from_vector(a, v)?;
    lifting_from_heights(a, h)?;
    let mut t = BigInt::one();
    for _ in 0..64 {
        if let Ok(realized) = try_realize(a, v, h, &t) {
            if is_compliant(&realized.extlift) {
                return Ok(realized);
            }
        }
        t *= 2;
    }
    Err(OmError::InvariantViolation(
        "compliance search did not terminate within 64 doublings".into(),
    ))
}

/// Realizes the extension-lifting with an explicit `t`; the result must be
/// generic but is allowed to be non-compliant.
pub fn realize_extension_lifting_with_t(
    a: &RealizationMatrix,
    v: &GenericVector,
    h: &HeightVector,
    t: i64,
) -> Result<Realized> {
    localization_from_vector(a, v)?;
    lifting_from_heights(a, h)?;
    try_realize(a, v, h, &BigInt::from(t))
}

fn try_realize(
    a: &RealizationMatrix,
    v: &GenericVector,
    h: &HeightVector,
    t: &BigInt,
) -> Result<Realized> {
    let matrix = build_lifted_matrix(a, v, h, t)?;
    let om = chirotope_from_matrix(&matrix)?;
    let extlift = ExtensionLifting::new(om)?;
    Ok(Realized {
        matrix,
        extlift,
        t: t.clone(),
    })
}

// ---------------------------------------------------------------------------
// Independent oracle: circuits and cocircuits by exact linear algebra.

/// Circuits as minimal dependent supports signed by exact kernel vectors.
pub fn oracle_circuits(a: &RealizationMatrix) -> Vec<SignedSet> {
    let n = a.n();
    let mut found_supports: Vec<Subset> = Vec::new();
    let mut out = BTreeSet::new();
    for size in 1..=a.rank + 1 {
        if size > n {
            break;
        }
        for s in k_subsets(n, size) {
            let sub = Subset::from_elems(&s);
            if found_supports.iter().any(|&c| c.is_subset_of(sub)) {
                continue;
            }
            let cols: Vec<&[BigInt]> = s.iter().map(|&e| a.col(e)).collect();
            if rank_of_refs(&cols, a.rank) == size {
                continue; // independent
            }
            let u = kernel_vector(&cols, a.rank).expect("minimal dependent set has nullity 1");
            let mut signs = SignedSet::zero(n);
            for (i, &e) in s.iter().enumerate() {
                signs.set_sign(e, sign_of(&u[i]));
            }
            debug_assert_eq!(signs.support(), sub, "kernel vector has full support");
            found_supports.push(sub);
            out.insert(signs.canonical());
        }
    }
    let mut v: Vec<SignedSet> = out.into_iter().collect();
    v.sort_by_key(|s| (s.support().elems(), s.signs().to_vec()));
    v
}

/// Cocircuits as hyperplane functionals of spanning `(r-1)`-subsets.
pub fn oracle_cocircuits(a: &RealizationMatrix) -> Vec<SignedSet> {
    let n = a.n();
    let mut out = BTreeSet::new();
    if a.rank == 0 {
        return Vec::new();
    }
    for s in k_subsets(n, a.rank - 1) {
        let cols: Vec<&[BigInt]> = s.iter().map(|&e| a.col(e)).collect();
        let c = cofactor_functional(&cols, a.rank);
        if c.iter().all(|x| x.is_zero()) {
            continue;
        }
        let mut signs = SignedSet::zero(n);
        for e in 0..n {
            signs.set_sign(e, sign_of(&dot(&c, a.col(e))));
        }
        out.insert(signs.canonical());
    }
    let mut v: Vec<SignedSet> = out.into_iter().collect();
    v.sort_by_key(|s| (s.support().elems(), s.signs().to_vec()));
    v
}

// ---------------------------------------------------------------------------
// Exact linear algebra helpers.

/// Bareiss fraction-free determinant of square column data.
#[allow(clippy::needless_range_loop)]
fn det_cols(cols: &[&[BigInt]]) -> BigInt {
    let n = cols.len();
    if n == 0 {
        return BigInt::one();
    }
    debug_assert!(cols.iter().all(|c| c.len() == n));
    let mut m: Vec<Vec<BigInt>> = (0..n)
        .map(|i| (0..n).map(|j| cols[j][i].clone()).collect())
        .collect();
    let mut negate = false;
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            let Some(p) = (k + 1..n).find(|&i| !m[i][k].is_zero()) else {
                return BigInt::zero();
            };
            m.swap(k, p);
            negate = !negate;
        }
        let row_k = m[k].clone();
        for i in k + 1..n {
            let lead = m[i][k].clone();
            for j in k + 1..n {
                m[i][j] = (&m[i][j] * &row_k[k] - &lead * &row_k[j]) / &prev;
            }
            m[i][k] = BigInt::zero();
        }
        prev = row_k[k].clone();
    }
    let d = m[n - 1][n - 1].clone();
    if negate {
        -d
    } else {
        d
    }
}

/// Rank of a set of columns of the given height, by fraction-free
/// elimination.
#[allow(clippy::needless_range_loop)]
fn rank_of_refs(cols: &[&[BigInt]], height: usize) -> usize {
    // row-major copy: height x cols.len()
    let mut m: Vec<Vec<BigInt>> = (0..height)
        .map(|i| cols.iter().map(|c| c[i].clone()).collect())
        .collect();
    let ncols = cols.len();
    let mut rank = 0;
    for col in 0..ncols {
        let Some(p) = (rank..height).find(|&i| !m[i][col].is_zero()) else {
            continue;
        };
        m.swap(rank, p);
        let pivot_row = m[rank].clone();
        for i in rank + 1..height {
            if m[i][col].is_zero() {
                continue;
            }
            let lead = m[i][col].clone();
            for j in col..ncols {
                m[i][j] = &m[i][j] * &pivot_row[col] - &lead * &pivot_row[j];
            }
        }
        rank += 1;
        if rank == height {
            break;
        }
    }
    rank
}

fn rank_of_columns(cols: &[Vec<BigInt>], height: usize) -> usize {
    let refs: Vec<&[BigInt]> = cols.iter().map(|c| c.as_slice()).collect();
    rank_of_refs(&refs, height)
}

/// Primitive integer kernel vector of the column matrix, when the nullity
/// is exactly one.
#[allow(clippy::needless_range_loop)]
fn kernel_vector(cols: &[&[BigInt]], height: usize) -> Option<Vec<BigInt>> {
    let k = cols.len();
    let mut m: Vec<Vec<BigRational>> = (0..height)
        .map(|i| {
            (0..k)
                .map(|j| BigRational::from_integer(cols[j][i].clone()))
                .collect()
        })
        .collect();
    let mut pivot_cols: Vec<usize> = Vec::new();
    let mut row = 0;
    for col in 0..k {
        let Some(p) = (row..height).find(|&i| !m[i][col].is_zero()) else {
            continue;
        };
        m.swap(row, p);
        let inv = m[row][col].clone();
        for j in col..k {
            m[row][j] = &m[row][j] / &inv;
        }
        for i in 0..height {
            if i != row && !m[i][col].is_zero() {
                let f = m[i][col].clone();
                for j in col..k {
                    let delta = &f * &m[row][j];
                    m[i][j] = &m[i][j] - &delta;
                }
            }
        }
        pivot_cols.push(col);
        row += 1;
        if row == height {
            break;
        }
    }
    let free: Vec<usize> = (0..k).filter(|c| !pivot_cols.contains(c)).collect();
    if free.len() != 1 {
        return None;
    }
    let fc = free[0];
    let mut x = vec![BigRational::zero(); k];
    x[fc] = BigRational::one();
    for (i, &pc) in pivot_cols.iter().enumerate() {
        x[pc] = -m[i][fc].clone();
    }
    // clear denominators, divide by gcd
    let mut lcm = BigInt::one();
    for v in &x {
        lcm = num::integer::lcm(lcm, v.denom().clone());
    }
    let mut ints: Vec<BigInt> = x.iter().map(|v| (v * &lcm).to_integer()).collect();
    let mut g = BigInt::zero();
    for v in &ints {
        g = num::integer::gcd(g, v.abs());
    }
    if !g.is_zero() && !g.is_one() {
        for v in &mut ints {
            *v = &*v / &g;
        }
    }
    Some(ints)
}

/// The functional `c` with `c . x = det([x | cols])`, via cofactor minors:
/// `c_i = (-1)^i det(cols with row i removed)`. Vanishes on the span of the
/// columns; zero iff the columns do not span a hyperplane.
fn cofactor_functional(cols: &[&[BigInt]], height: usize) -> Vec<BigInt> {
    debug_assert_eq!(cols.len() + 1, height);
    (0..height)
        .map(|skip| {
            let minors: Vec<Vec<BigInt>> = cols
                .iter()
                .map(|c| {
                    c.iter()
                        .enumerate()
                        .filter(|(i, _)| *i != skip)
                        .map(|(_, v)| v.clone())
                        .collect()
                })
                .collect();
            let refs: Vec<&[BigInt]> = minors.iter().map(|c| c.as_slice()).collect();
            let d = det_cols(&refs);
            if skip % 2 == 1 {
                -d
            } else {
                d
            }
        })
        .collect()
}
