//! Monic quadratics in the canonical form `(x - a)^2 - b`, and words over a
//! generator set.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::criterion::GeneratorSet;
use crate::error::{Error, Result};
use crate::field::{Elem, FieldCtx};
use crate::oracle::{DensePoly, PolyRing};

/// `f = (x - a)^2 - b`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct MonicQuadratic {
    pub a: Elem,
    pub b: Elem,
}

impl MonicQuadratic {
    pub fn new(a: Elem, b: Elem) -> Self {
        MonicQuadratic { a, b }
    }

    /// Canonical pair of `x^2 + c1 x + c0`: `a = -c1/2`, `b = a^2 - c0`.
    pub fn from_coeffs(ctx: &FieldCtx, c1: Elem, c0: Elem) -> Self {
        let a = ctx.neg(ctx.mul(c1, ctx.half()));
        let b = ctx.sub(ctx.square(a), c0);
        MonicQuadratic { a, b }
    }

    /// `(c1, c0)` with `f = x^2 + c1 x + c0`.
    pub fn coeffs(&self, ctx: &FieldCtx) -> (Elem, Elem) {
        let c1 = ctx.neg(ctx.add(self.a, self.a));
        let c0 = ctx.sub(ctx.square(self.a), self.b);
        (c1, c0)
    }

    pub fn eval(&self, ctx: &FieldCtx, x: Elem) -> Elem {
        ctx.sub(ctx.square(ctx.sub(x, self.a)), self.b)
    }

    pub fn is_irreducible(&self, ctx: &FieldCtx) -> bool {
        !ctx.is_square(self.b)
    }

    pub fn to_poly(&self, ctx: &FieldCtx) -> DensePoly {
        let (c1, c0) = self.coeffs(ctx);
        DensePoly::new(vec![c0, c1, Elem::ONE])
    }
}

/// Generator as written in JSON: canonical `{"a", "b"}` or expanded `{"c1", "c0"}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum GeneratorSpec {
    Canonical(CanonicalSpec),
    Coeffs(CoeffSpec),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CanonicalSpec {
    pub a: i64,
    pub b: i64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CoeffSpec {
    pub c1: i64,
    pub c0: i64,
}

impl GeneratorSpec {
    pub fn resolve(&self, ctx: &FieldCtx) -> Result<MonicQuadratic> {
        match *self {
            GeneratorSpec::Canonical(CanonicalSpec { a, b }) => Ok(MonicQuadratic::new(
                ctx.elem_signed(a)?,
                ctx.elem_signed(b)?,
            )),
            GeneratorSpec::Coeffs(CoeffSpec { c1, c0 }) => Ok(MonicQuadratic::from_coeffs(
                ctx,
                ctx.elem_signed(c1)?,
                ctx.elem_signed(c0)?,
            )),
        }
    }
}

/// Nonempty sequence of generator indices. Index 0 is the outermost factor:
/// `[i1, i2, ..., im]` denotes `f_i1(f_i2(...f_im(x)...))`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Word(Vec<usize>);

impl Word {
    pub fn new(indices: Vec<usize>, generators: usize) -> Result<Self> {
        if indices.is_empty() {
            return Err(Error::EmptyWord);
        }
        if let Some(&index) = indices.iter().find(|&&i| i >= generators) {
            return Err(Error::InvalidIndex {
                index,
                len: generators,
            });
        }
        Ok(Word(indices))
    }

    pub fn letter(index: usize) -> Self {
        Word(vec![index])
    }

    pub fn letters(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// The outermost `n` letters.
    pub fn prefix(&self, n: usize) -> Word {
        Word(self.0[..n].to_vec())
    }

    pub fn into_inner(self) -> Vec<usize> {
        self.0
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (k, i) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{i}")?;
        }
        write!(f, "]")
    }
}

/// All words over `alphabet` letters with length `1..=max_len`, ordered by
/// length and then lexicographically.
pub fn enumerate_words(alphabet: usize, max_len: usize) -> Vec<Word> {
    let mut out = Vec::new();
    let mut layer: Vec<Vec<usize>> = vec![Vec::new()];
    for _ in 0..max_len {
        layer = layer
            .iter()
            .flat_map(|w| {
                (0..alphabet).map(move |i| {
                    let mut next = w.clone();
                    next.push(i);
                    next
                })
            })
            .collect();
        out.extend(layer.iter().cloned().map(Word));
    }
    out
}

/// Dense expansion of the composition named by `word`, built innermost-out
/// by substituting into `(y - a)^2 - b`.
pub fn compose_word(set: &GeneratorSet<'_>, word: &Word) -> DensePoly {
    let ctx = set.ctx();
    let ring = PolyRing::new(ctx);
    let (&inner, outer) = word.letters().split_last().expect("words are nonempty");
    let mut acc = set.generator(inner).to_poly(ctx);
    for &i in outer.iter().rev() {
        let g = set.generator(i);
        let shifted = ring.sub(&acc, &DensePoly::constant(g.a));
        acc = ring.sub(&ring.mul(&shifted, &shifted), &DensePoly::constant(g.b));
    }
    acc
}

/// Evaluates the composition named by `word` at `x`, innermost first.
pub fn eval_word(set: &GeneratorSet<'_>, word: &Word, x: Elem) -> Elem {
    word.letters()
        .iter()
        .rev()
        .fold(x, |acc, &i| set.generator(i).eval(set.ctx(), acc))
}
