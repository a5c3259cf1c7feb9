//! Rendering: 1-based element labels, tab-separated tables, and the JSON
//! variant carrying the same fields.

use extlift_core::{Sign, SignedSet, Subset};
use serde_json::{json, Value};

/// How ground elements are named in output.
#[derive(Clone, Copy)]
pub enum Labeling {
    /// Elements of `M`: 1-based indices.
    Plain,
    /// An extension-lifting ground: `g`, `f`, then 1-based originals.
    GfFirst,
    /// A ground with one appended element named by the char: `1..n` then it.
    Appended(char, usize),
}

impl Labeling {
    pub fn label(&self, e: usize) -> String {
        match *self {
            Labeling::Plain => (e + 1).to_string(),
            Labeling::GfFirst => match e {
                0 => "g".into(),
                1 => "f".into(),
                _ => (e - 1).to_string(),
            },
            Labeling::Appended(name, n) => {
                if e == n {
                    name.to_string()
                } else {
                    (e + 1).to_string()
                }
            }
        }
    }

    pub fn subset(&self, s: Subset) -> String {
        if s.is_empty() {
            return "-".into();
        }
        s.iter()
            .map(|e| self.label(e))
            .collect::<Vec<_>>()
            .join(" ")
    }

    pub fn subset_json(&self, s: Subset) -> Value {
        Value::Array(s.iter().map(|e| Value::String(self.label(e))).collect())
    }

    pub fn signed_set(&self, x: &SignedSet) -> String {
        if x.is_zero() {
            return "-".into();
        }
        x.support()
            .iter()
            .map(|e| {
                format!(
                    "{}{}",
                    if x.sign(e) == Sign::Plus { '+' } else { '-' },
                    self.label(e)
                )
            })
            .collect::<Vec<_>>()
            .join(" ")
    }

    pub fn signed_set_json(&self, x: &SignedSet) -> Value {
        let part = |sign: Sign| {
            Value::Array(
                x.support()
                    .iter()
                    .filter(|&e| x.sign(e) == sign)
                    .map(|e| Value::String(self.label(e)))
                    .collect(),
            )
        };
        json!({ "positive": part(Sign::Plus), "negative": part(Sign::Minus) })
    }
}

pub fn sign_string(signs: &[Sign]) -> String {
    signs.iter().map(|s| s.as_char()).collect()
}
