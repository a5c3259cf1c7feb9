//! Instance file parsing and signature resolution.
//!
//! An instance file is line-oriented; `#` starts a comment and blank lines
//! are skipped. It opens with either
//!
//! ```text
//! matrix
//! r n
//! <r rows of n integers>      # columns realize the elements
//! ```
//!
//! or
//!
//! ```text
//! chirotope
//! n r
//! <sign string over +,-,0 of length C(n, r), lex r-subset order>
//! ```
//!
//! followed by optional signature specs, in any order:
//!
//! ```text
//! vector 1 1            # or: vector seed:7     (matrix instances only)
//! heights 0 1 0 1       # or: heights seed:7
//! extension-signature   # explicit values, one per canonical cocircuit
//! + : +1 +2
//! - : +3 +4
//! end
//! lifting-signature
//! + : +1 -2
//! end
//! ```

use std::fmt;
use std::path::Path;

use anyhow::{anyhow, bail, Context};
use extlift_core::*;

type PResult<T> = std::result::Result<T, ParseError>;

#[derive(Debug)]
pub struct ParseError {
    pub line: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}: {}", self.line, self.message)
    }
}

impl std::error::Error for ParseError {}

fn err(line: usize, message: impl Into<String>) -> ParseError {
    ParseError {
        line,
        message: message.into(),
    }
}

#[derive(Clone, Debug)]
pub enum Source {
    Matrix(RealizationMatrix),
    Chirotope(Chirotope),
}

#[derive(Clone, Debug)]
pub enum ExtSpec {
    Vector(Vec<i64>),
    Seed(u64),
    Explicit(Vec<(SignedSet, Sign)>),
}

#[derive(Clone, Debug)]
pub enum LiftSpec {
    Heights(Vec<i64>),
    Seed(u64),
    Explicit(Vec<(SignedSet, Sign)>),
}

#[derive(Debug)]
pub struct Instance {
    pub source: Source,
    pub ext_spec: Option<ExtSpec>,
    pub lift_spec: Option<LiftSpec>,
}

impl Instance {
    pub fn chirotope(&self) -> anyhow::Result<Chirotope> {
        match &self.source {
            Source::Matrix(a) => Ok(chirotope_from_matrix(a)?),
            Source::Chirotope(m) => Ok(m.clone()),
        }
    }

    pub fn matrix(&self) -> Option<&RealizationMatrix> {
        match &self.source {
            Source::Matrix(a) => Some(a),
            Source::Chirotope(_) => None,
        }
    }
}

struct Lines<'a> {
    items: Vec<(usize, &'a str)>,
    pos: usize,
}

impl<'a> Lines<'a> {
    fn new(text: &'a str) -> Self {
        let items = text
            .lines()
            .enumerate()
            .map(|(i, l)| {
                let l = match l.find('#') {
                    Some(p) => &l[..p],
                    None => l,
                };
                (i + 1, l.trim())
            })
            .filter(|(_, l)| !l.is_empty())
            .collect();
        Lines { items, pos: 0 }
    }

    fn peek(&self) -> Option<(usize, &'a str)> {
        self.items.get(self.pos).copied()
    }

    fn next(&mut self) -> Option<(usize, &'a str)> {
        let item = self.items.get(self.pos).copied();
        self.pos += 1;
        item
    }

    fn expect(&mut self, what: &str) -> PResult<(usize, &'a str)> {
        self.next()
            .ok_or_else(|| err(self.items.last().map_or(1, |(n, _)| *n), format!("expected {what}")))
    }
}

fn parse_ints(line: usize, text: &str, what: &str) -> PResult<Vec<i64>> {
    text.split_whitespace()
        .map(|tok| {
            tok.parse::<i64>()
                .map_err(|_| err(line, format!("{what}: `{tok}` is not an integer")))
        })
        .collect()
}

/// Parses a one-based signed-element list such as `+1 -2` into a sign
/// vector over `0..n`.
fn parse_signed_set(line: usize, n: usize, text: &str) -> PResult<SignedSet> {
    let mut out = SignedSet::zero(n);
    for tok in text.split_whitespace() {
        let (sign, rest) = match tok.chars().next() {
            Some('+') => (Sign::Plus, &tok[1..]),
            Some('-') => (Sign::Minus, &tok[1..]),
            _ => return Err(err(line, format!("`{tok}`: expected a sign prefix + or -"))),
        };
        let e: usize = rest
            .parse()
            .map_err(|_| err(line, format!("`{tok}`: bad element index")))?;
        if e == 0 || e > n {
            return Err(err(line, format!("element {e} out of range 1..={n}")));
        }
        out.set_sign(e - 1, sign);
    }
    Ok(out)
}

enum IntsOrSeed {
    Ints(Vec<i64>),
    Seed(u64),
}

fn parse_seed_or_ints(line: usize, rest: &str, what: &str) -> PResult<IntsOrSeed> {
    let rest = rest.trim();
    if let Some(seed) = rest.strip_prefix("seed:") {
        let seed: u64 = seed
            .trim()
            .parse()
            .map_err(|_| err(line, format!("{what}: bad seed `{seed}`")))?;
        return Ok(IntsOrSeed::Seed(seed));
    }
    Ok(IntsOrSeed::Ints(parse_ints(line, rest, what)?))
}

fn parse_signature_block(
    lines: &mut Lines<'_>,
    n: usize,
) -> PResult<Vec<(SignedSet, Sign)>> {
    let mut pairs = Vec::new();
    loop {
        let (lineno, text) = lines.expect("a signature line or `end`")?;
        if text == "end" {
            return Ok(pairs);
        }
        let Some((value, set)) = text.split_once(':') else {
            return Err(err(lineno, "expected `<sign> : <signed set>`"));
        };
        let value = match value.trim() {
            "+" => Sign::Plus,
            "-" => Sign::Minus,
            other => return Err(err(lineno, format!("bad signature value `{other}`"))),
        };
        pairs.push((parse_signed_set(lineno, n, set)?, value));
    }
}

pub fn parse_instance(text: &str, max_n: usize) -> PResult<Instance> {
    let mut lines = Lines::new(text);
    let (head_line, head) = lines.expect("`matrix` or `chirotope`")?;
    let source = match head {
        "matrix" => {
            let (dims_line, dims) = lines.expect("`r n`")?;
            let dims = parse_ints(dims_line, dims, "dimensions")?;
            if dims.len() != 2 || dims[0] < 0 || dims[1] < 0 {
                return Err(err(dims_line, "expected `r n`"));
            }
            let (r, n) = (dims[0] as usize, dims[1] as usize);
            check_max_n(dims_line, n, max_n)?;
            let mut rows = Vec::with_capacity(r);
            for _ in 0..r {
                let (row_line, row) = lines.expect("a matrix row")?;
                let row = parse_ints(row_line, row, "matrix row")?;
                if row.len() != n {
                    return Err(err(row_line, format!("expected {n} entries, got {}", row.len())));
                }
                rows.push(row);
            }
            let a = RealizationMatrix::from_rows(r, &rows)
                .map_err(|e| err(head_line, e.to_string()))?;
            Source::Matrix(a)
        }
        "chirotope" => {
            let (dims_line, dims) = lines.expect("`n r`")?;
            let dims = parse_ints(dims_line, dims, "dimensions")?;
            if dims.len() != 2 || dims[0] < 0 || dims[1] < 0 {
                return Err(err(dims_line, "expected `n r`"));
            }
            let (n, r) = (dims[0] as usize, dims[1] as usize);
            check_max_n(dims_line, n, max_n)?;
            let (sign_line, text) = lines.expect("a sign string")?;
            let mut signs = Vec::with_capacity(text.len());
            for (col, c) in text.chars().enumerate() {
                match Sign::from_char(c) {
                    Some(s) => signs.push(s),
                    None => {
                        return Err(err(
                            sign_line,
                            format!("column {}: `{c}` is not one of +, -, 0", col + 1),
                        ))
                    }
                }
            }
            let ground = GroundSet::new(n).map_err(|e| err(dims_line, e.to_string()))?;
            let m = Chirotope::from_signs(ground, r, signs)
                .map_err(|e| err(sign_line, e.to_string()))?;
            Source::Chirotope(m)
        }
        other => return Err(err(head_line, format!("unknown format tag `{other}`"))),
    };

    let n = match &source {
        Source::Matrix(a) => a.n(),
        Source::Chirotope(m) => m.n(),
    };
    let mut ext_spec = None;
    let mut lift_spec = None;
    while let Some((lineno, text)) = lines.peek() {
        lines.next();
        if let Some(rest) = text.strip_prefix("vector") {
            ext_spec = Some(match parse_seed_or_ints(lineno, rest, "vector")? {
                IntsOrSeed::Ints(v) => ExtSpec::Vector(v),
                IntsOrSeed::Seed(seed) => ExtSpec::Seed(seed),
            });
        } else if let Some(rest) = text.strip_prefix("heights") {
            lift_spec = Some(match parse_seed_or_ints(lineno, rest, "heights")? {
                IntsOrSeed::Ints(v) => LiftSpec::Heights(v),
                IntsOrSeed::Seed(seed) => LiftSpec::Seed(seed),
            });
        } else if text == "extension-signature" {
            ext_spec = Some(ExtSpec::Explicit(parse_signature_block(&mut lines, n)?));
        } else if text == "lifting-signature" {
            lift_spec = Some(LiftSpec::Explicit(parse_signature_block(&mut lines, n)?));
        } else {
            return Err(err(lineno, format!("unexpected line `{text}`")));
        }
    }
    Ok(Instance {
        source,
        ext_spec,
        lift_spec,
    })
}

fn check_max_n(line: usize, n: usize, max_n: usize) -> PResult<()> {
    if n > max_n {
        return Err(err(
            line,
            format!("ground set of size {n} exceeds --max-n {max_n}"),
        ));
    }
    Ok(())
}

pub fn load_instance(path: &Path, max_n: usize) -> anyhow::Result<Instance> {
    let text = std::fs::read_to_string(path)
        .with_context(|| format!("reading {}", path.display()))?;
    parse_instance(&text, max_n).map_err(|e| anyhow!("{}:{}", path.display(), e))
}

/// Resolved signature inputs for one command run.
pub struct Resolved {
    pub m: Chirotope,
    pub matrix: Option<RealizationMatrix>,
    pub sigstar: Option<ExtensionSignature>,
    pub sigma: Option<LiftingSignature>,
}

pub struct SpecOverrides {
    pub vector: Option<Vec<i64>>,
    pub heights: Option<Vec<i64>>,
    pub seed: Option<u64>,
}

/// Resolves the extension and/or lifting signatures. Command-line flags
/// override instance specs; `--seed` backs any spec that is still missing.
pub fn resolve(
    instance: &Instance,
    overrides: &SpecOverrides,
    need_ext: bool,
    need_lift: bool,
) -> anyhow::Result<Resolved> {
    let m = instance.chirotope()?;
    let matrix = instance.matrix().cloned();

    let sigstar = if need_ext {
        let spec = match (&overrides.vector, &instance.ext_spec) {
            (Some(v), _) => Some(ExtSpec::Vector(v.clone())),
            (None, Some(s)) => Some(s.clone()),
            (None, None) => None,
        };
        Some(match spec {
            Some(ExtSpec::Vector(coords)) => {
                let a = matrix.as_ref().ok_or_else(|| {
                    anyhow!("a vector spec needs a matrix instance; use an explicit extension-signature block")
                })?;
                if coords.len() != a.rank() {
                    bail!("vector has {} coordinates, rank is {}", coords.len(), a.rank());
                }
                localization_from_vector(a, &GenericVector::from_i64(&coords))?
            }
            Some(ExtSpec::Seed(seed)) => {
                let a = matrix.as_ref().ok_or_else(|| {
                    anyhow!("a seed spec needs a matrix instance")
                })?;
                let v = sample_generic_vector(a, seed);
                localization_from_vector(a, &v)?
            }
            Some(ExtSpec::Explicit(pairs)) => ExtensionSignature::new(m.clone(), pairs)?,
            None => match (overrides.seed, matrix.as_ref()) {
                (Some(seed), Some(a)) => {
                    let v = sample_generic_vector(a, seed);
                    localization_from_vector(a, &v)?
                }
                _ => bail!("no extension spec: give `vector`, an extension-signature block, or --seed"),
            },
        })
    } else {
        None
    };

    let sigma = if need_lift {
        let spec = match (&overrides.heights, &instance.lift_spec) {
            (Some(h), _) => Some(LiftSpec::Heights(h.clone())),
            (None, Some(s)) => Some(s.clone()),
            (None, None) => None,
        };
        Some(match spec {
            Some(LiftSpec::Heights(hs)) => {
                let a = matrix.as_ref().ok_or_else(|| {
                    anyhow!("a heights spec needs a matrix instance; use an explicit lifting-signature block")
                })?;
                lifting_from_heights(a, &HeightVector::from_i64(&hs))?
            }
            Some(LiftSpec::Seed(seed)) => {
                let a = matrix.as_ref().ok_or_else(|| anyhow!("a seed spec needs a matrix instance"))?;
                let h = sample_generic_heights(a, seed);
                lifting_from_heights(a, &h)?
            }
            Some(LiftSpec::Explicit(pairs)) => LiftingSignature::new(m.clone(), pairs)?,
            None => match (overrides.seed, matrix.as_ref()) {
                (Some(seed), Some(a)) => {
                    let h = sample_generic_heights(a, seed);
                    lifting_from_heights(a, &h)?
                }
                _ => bail!("no lifting spec: give `heights`, a lifting-signature block, or --seed"),
            },
        })
    } else {
        None
    };

    Ok(Resolved {
        m,
        matrix,
        sigstar,
        sigma,
    })
}

/// Parses a 1-based element list like `2,4` or `2 4` into a subset.
pub fn parse_subset(text: &str, n: usize) -> anyhow::Result<Subset> {
    let mut s = Subset::EMPTY;
    for tok in text.split(|c: char| c == ',' || c.is_whitespace()) {
        if tok.is_empty() {
            continue;
        }
        let e: usize = tok.parse().map_err(|_| anyhow!("`{tok}` is not an element"))?;
        if e == 0 || e > n {
            bail!("element {e} out of range 1..={n}");
        }
        s = s.with(e - 1);
    }
    Ok(s)
}
